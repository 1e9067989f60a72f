#pragma once

#include <random>

#include "sympencil/pencil.hpp"
#include "sympencil/rank.hpp"

namespace sympencil::test {

inline ComplexMatrix random_matrix(int rows, int cols, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (int j = 0; j < cols; ++j) {
        for (int i = 0; i < rows; ++i) {
            const double re = g(rng);
            m(i, j) = Complex(re, g(rng));
        }
    }
    return m;
}

inline Pencil random_pencil(int rows, int cols, std::mt19937_64& rng) {
    ComplexMatrix a = random_matrix(rows, cols, rng);
    return Pencil(std::move(a), random_matrix(rows, cols, rng));
}

inline SymmetricPencil random_symmetric(int n, std::mt19937_64& rng) {
    const ComplexMatrix a = random_matrix(n, n, rng);
    const ComplexMatrix b = random_matrix(n, n, rng);
    return SymmetricPencil(Pencil(a + a.transpose(), b + b.transpose()));
}

/// Rank of the pencil evaluated at a point that is not an eigenvalue of any test pencil.
inline std::size_t evaluation_rank(const Pencil& p, Complex at = Complex(0.37, -0.21)) {
    return numerical_rank(evaluate(p, at), std::max(1.0, p.norm()), RankOptions{});
}

}  // namespace sympencil::test
