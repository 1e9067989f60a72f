#include "sympencil/pencil.hpp"

#include <cmath>
#include <limits>

#include "sympencil/errors.hpp"

namespace sympencil {

namespace {

constexpr double kStrictConditionLimit = 1e12;

bool all_finite(const ComplexMatrix& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) {
                return false;
            }
        }
    }
    return true;
}

ComplexMatrix symmetric_part(const ComplexMatrix& m) {
    ComplexMatrix t = m.transpose();
    return (m + t) * 0.5;
}

}  // namespace

Pencil::Pencil(ComplexMatrix a, ComplexMatrix b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.rows() != b_.rows() || a_.cols() != b_.cols()) {
        throw DimensionError("pencil coefficients must have identical dimensions");
    }
    if (!all_finite(a_) || !all_finite(b_)) {
        throw PreconditionError("pencil coefficients must be finite");
    }
}

Pencil Pencil::zero(Eigen::Index rows, Eigen::Index cols) {
    return Pencil(ComplexMatrix::Zero(rows, cols), ComplexMatrix::Zero(rows, cols));
}

double Pencil::norm() const {
    return std::sqrt(a_.squaredNorm() + b_.squaredNorm());
}

Pencil Pencil::transpose() const {
    return Pencil(a_.transpose(), b_.transpose());
}

Pencil Pencil::reversal() const {
    return Pencil(b_, a_);
}

bool Pencil::is_symmetric(double tol) const {
    if (!is_square()) {
        return false;
    }
    const double bound = tol * norm();
    const ComplexMatrix at = a_.transpose();
    const ComplexMatrix bt = b_.transpose();
    return (a_ - at).norm() <= bound && (b_ - bt).norm() <= bound;
}

Pencil operator+(const Pencil& p, const Pencil& q) {
    if (p.rows() != q.rows() || p.cols() != q.cols()) {
        throw DimensionError("pencil sum: dimension mismatch");
    }
    return Pencil(p.a() + q.a(), p.b() + q.b());
}

Pencil operator-(const Pencil& p, const Pencil& q) {
    if (p.rows() != q.rows() || p.cols() != q.cols()) {
        throw DimensionError("pencil difference: dimension mismatch");
    }
    return Pencil(p.a() - q.a(), p.b() - q.b());
}

SymmetricPencil::SymmetricPencil(Pencil p) : p_(std::move(p)) {
    if (!p_.is_square()) {
        throw DimensionError("symmetric pencil must be square");
    }
    if (!p_.is_symmetric(0.0)) {
        throw PreconditionError("pencil is not exactly symmetric");
    }
}

SymmetricPencil SymmetricPencil::symmetrize(const Pencil& p, double tol) {
    if (!p.is_square()) {
        throw DimensionError("symmetric pencil must be square");
    }
    if (!p.is_symmetric(tol)) {
        throw PreconditionError("pencil asymmetry exceeds the symmetrization tolerance");
    }
    return SymmetricPencil(Pencil(symmetric_part(p.a()), symmetric_part(p.b())));
}

ComplexMatrix evaluate(const Pencil& p, SpectralPoint at) {
    if (at.is_infinite()) {
        return p.a();
    }
    return at.value() * p.a() + p.b();
}

Complex frobenius_inner(const Pencil& p, const Pencil& q) {
    if (p.rows() != q.rows() || p.cols() != q.cols()) {
        throw DimensionError("frobenius_inner: dimension mismatch");
    }
    // tr(X·Y*) = Σ x_ij·conj(y_ij)
    return (p.a().array() * q.a().array().conjugate()).sum() +
           (p.b().array() * q.b().array().conjugate()).sum();
}

double condition_number(const ComplexMatrix& m) {
    if (m.size() == 0) {
        return 1.0;
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    const auto& sv = svd.singularValues();
    const double smin = sv(sv.size() - 1);
    if (smin == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return sv(0) / smin;
}

SymmetricPencil congruence(const SymmetricPencil& s, const ComplexMatrix& w, bool strict) {
    const Eigen::Index n = s.size();
    if (w.rows() != n || w.cols() != n) {
        throw DimensionError("congruence: W must be n×n");
    }
    if (strict && !(condition_number(w) <= kStrictConditionLimit)) {
        throw SingularMatrixError("congruence: W is numerically singular");
    }
    const ComplexMatrix wt = w.transpose();
    const ComplexMatrix a = wt * s.a() * w;
    const ComplexMatrix b = wt * s.b() * w;
    return SymmetricPencil(Pencil(symmetric_part(a), symmetric_part(b)));
}

Pencil strict_equivalence(const Pencil& p, const ComplexMatrix& u, const ComplexMatrix& v) {
    if (u.rows() != p.rows() || u.cols() != p.rows()) {
        throw DimensionError("strict_equivalence: U must be m×m");
    }
    if (v.rows() != p.cols() || v.cols() != p.cols()) {
        throw DimensionError("strict_equivalence: V must be n×n");
    }
    if (!(condition_number(u) <= kStrictConditionLimit)) {
        throw SingularMatrixError("strict_equivalence: U is numerically singular");
    }
    if (!(condition_number(v) <= kStrictConditionLimit)) {
        throw SingularMatrixError("strict_equivalence: V is numerically singular");
    }
    Eigen::PartialPivLU<ComplexMatrix> lu(u);
    return Pencil(lu.solve(p.a() * v), lu.solve(p.b() * v));
}

Pencil multiply(const ComplexMatrix& left, const Pencil& p, const ComplexMatrix& right) {
    if (left.cols() != p.rows() || right.rows() != p.cols()) {
        throw DimensionError("multiply: dimension mismatch");
    }
    return Pencil(left * p.a() * right, left * p.b() * right);
}

}  // namespace sympencil
