#pragma once

#include <random>

#include "hq/matrix.hpp"

namespace hq::test {

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (Complex& e : m.entries()) e = Complex{gauss(rng), gauss(rng)};
    return m;
}

// Haar-ish unitary: Gram-Schmidt on Gaussian columns (two passes).
inline ComplexMatrix random_unitary(std::size_t n, std::mt19937& rng) {
    ComplexMatrix m = random_matrix(n, n, rng);
    for (std::size_t c = 0; c < n; ++c) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t prev = 0; prev < c; ++prev) {
                Complex overlap{0.0, 0.0};
                for (std::size_t i = 0; i < n; ++i) overlap += std::conj(m(i, prev)) * m(i, c);
                for (std::size_t i = 0; i < n; ++i) m(i, c) -= overlap * m(i, prev);
            }
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) norm += std::norm(m(i, c));
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < n; ++i) m(i, c) /= norm;
    }
    return m;
}

inline ComplexMatrix random_hermitian(std::size_t n, std::mt19937& rng) {
    const ComplexMatrix m = random_matrix(n, n, rng);
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    return h;
}

}  // namespace hq::test
