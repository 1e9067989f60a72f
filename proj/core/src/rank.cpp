#include "sympencil/rank.hpp"

#include <sstream>

#include "sympencil/errors.hpp"

namespace sympencil {

RankDecision decide_rank(const Eigen::VectorXd& singular_values, double threshold, double gap) {
    RankDecision d;
    d.threshold = threshold;
    const auto count = static_cast<std::size_t>(singular_values.size());
    while (d.rank < count && singular_values(static_cast<Eigen::Index>(d.rank)) > threshold) {
        ++d.rank;
    }
    if (d.rank > 0) {
        d.retained = singular_values(static_cast<Eigen::Index>(d.rank) - 1);
    }
    if (d.rank < count) {
        d.discarded = singular_values(static_cast<Eigen::Index>(d.rank));
    }
    d.ambiguous = d.rank > 0 && d.rank < count && d.retained < gap * d.discarded;
    return d;
}

RankDecision rank_decision(const ComplexMatrix& m, double scale, const RankOptions& opts) {
    const double threshold = opts.tol * scale;
    if (m.size() == 0) {
        RankDecision d;
        d.threshold = threshold;
        return d;
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return decide_rank(svd.singularValues(), threshold, opts.gap);
}

std::size_t numerical_rank(const ComplexMatrix& m, double scale, const RankOptions& opts) {
    const RankDecision d = rank_decision(m, scale, opts);
    if (d.ambiguous) {
        std::ostringstream msg;
        msg << "indeterminate rank: retained singular value " << d.retained
            << " is within the gap factor of discarded " << d.discarded;
        throw IndeterminateStructure(msg.str(), d.retained, d.discarded);
    }
    return d.rank;
}

}  // namespace sympencil
