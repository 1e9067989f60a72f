#pragma once

#include <cstddef>

#include <Eigen/Dense>

#include "sympencil/pencil.hpp"

namespace sympencil {

/// Tolerances shared by every rank-revealing computation.
struct RankOptions {
    /// Singular values ≤ tol·scale count as zero.
    double tol = 1e-8;
    /// Minimum ratio between the smallest retained and the largest discarded
    /// singular value.
    double gap = 10.0;
};

/// Outcome of one numerical rank decision.
struct RankDecision {
    std::size_t rank = 0;
    double threshold = 0.0;
    /// Smallest retained singular value (0 when rank == 0).
    double retained = 0.0;
    /// Largest discarded singular value (0 when nothing was discarded).
    double discarded = 0.0;
    bool ambiguous = false;
};

/// Decide the rank from singular values sorted in decreasing order.
RankDecision decide_rank(const Eigen::VectorXd& singular_values, double threshold, double gap);

/// Decide the rank of m with threshold opts.tol·scale; does not throw.
RankDecision rank_decision(const ComplexMatrix& m, double scale, const RankOptions& opts);

/// Same as rank_decision, but throws IndeterminateStructure on ambiguity.
std::size_t numerical_rank(const ComplexMatrix& m, double scale, const RankOptions& opts);

}  // namespace sympencil
