#pragma once

#include <complex>
#include <optional>

#include <Eigen/Dense>

namespace sympencil {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// A point of the extended complex plane C ∪ {∞}.
class SpectralPoint {
public:
    SpectralPoint() = default;
    SpectralPoint(Complex value) : value_(value) {}  // NOLINT(implicit)
    SpectralPoint(double value) : value_(Complex(value, 0.0)) {}  // NOLINT(implicit)

    static SpectralPoint infinity() {
        SpectralPoint p;
        p.value_.reset();
        return p;
    }

    bool is_infinite() const noexcept { return !value_.has_value(); }
    Complex value() const { return *value_; }

    friend bool operator==(const SpectralPoint&, const SpectralPoint&) = default;

private:
    std::optional<Complex> value_ = Complex{};
};

/// The m×n pencil λA + B. A is the leading coefficient, B the constant one.
///
/// Entries are validated finite on construction; the value is immutable.
class Pencil {
public:
    Pencil() = default;
    Pencil(ComplexMatrix a, ComplexMatrix b);

    /// m×n pencil with both coefficients zero.
    static Pencil zero(Eigen::Index rows, Eigen::Index cols);

    const ComplexMatrix& a() const noexcept { return a_; }
    const ComplexMatrix& b() const noexcept { return b_; }
    Eigen::Index rows() const noexcept { return a_.rows(); }
    Eigen::Index cols() const noexcept { return a_.cols(); }
    bool is_square() const noexcept { return rows() == cols(); }

    /// sqrt(‖A‖_F² + ‖B‖_F²); the scale for every relative tolerance.
    double norm() const;

    /// λAᵀ + Bᵀ (plain transpose, no conjugation).
    Pencil transpose() const;
    /// λB + A. Swaps the roles of 0 and ∞.
    Pencil reversal() const;

    /// True iff ‖A−Aᵀ‖_F and ‖B−Bᵀ‖_F are both ≤ tol·norm().
    bool is_symmetric(double tol = 0.0) const;

    friend bool operator==(const Pencil& p, const Pencil& q) {
        return p.a_.rows() == q.a_.rows() && p.a_.cols() == q.a_.cols() && p.a_ == q.a_ &&
               p.b_ == q.b_;
    }

private:
    ComplexMatrix a_{0, 0};
    ComplexMatrix b_{0, 0};
};

Pencil operator+(const Pencil& p, const Pencil& q);
Pencil operator-(const Pencil& p, const Pencil& q);

/// Square pencil with symmetric coefficients.
class SymmetricPencil {
public:
    SymmetricPencil() = default;

    /// Requires exact symmetry of both coefficients.
    explicit SymmetricPencil(Pencil p);

    /// Averages (X + Xᵀ)/2 after checking the asymmetry is ≤ tol·‖p‖.
    static SymmetricPencil symmetrize(const Pencil& p, double tol);

    const Pencil& pencil() const noexcept { return p_; }
    operator const Pencil&() const noexcept { return p_; }  // NOLINT(implicit)

    const ComplexMatrix& a() const noexcept { return p_.a(); }
    const ComplexMatrix& b() const noexcept { return p_.b(); }
    Eigen::Index size() const noexcept { return p_.rows(); }
    double norm() const { return p_.norm(); }

    friend bool operator==(const SymmetricPencil&, const SymmetricPencil&) = default;

private:
    Pencil p_;
};

/// λ0·A + B for finite λ0, A at ∞.
ComplexMatrix evaluate(const Pencil& p, SpectralPoint at);

/// tr(A·C*) + tr(B·D*).
Complex frobenius_inner(const Pencil& p, const Pencil& q);

/// Wᵀ(λA+B)W, re-symmetrized.
///
/// With strict set, W is rejected when its 2-norm condition number exceeds
/// 1e12.
SymmetricPencil congruence(const SymmetricPencil& s, const ComplexMatrix& w, bool strict = false);

/// U⁻¹(λA+B)V.
Pencil strict_equivalence(const Pencil& p, const ComplexMatrix& u, const ComplexMatrix& v);

/// L·(λA+B)·R without any inverse.
Pencil multiply(const ComplexMatrix& left, const Pencil& p, const ComplexMatrix& right);

/// 2-norm condition number σ_max/σ_min (∞ for singular or empty-rank input).
double condition_number(const ComplexMatrix& m);

}  // namespace sympencil
