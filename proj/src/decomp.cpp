#include "hq/decomp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hq/errors.hpp"

namespace hq {

namespace {

constexpr double kJacobiTol = 1e-12;
constexpr int kMaxSweeps = 100;

// Orthonormal completion for columns whose singular value vanished: take unit
// vectors and project out all previously fixed columns (two MGS passes).
void complete_column(ComplexMatrix& u, std::size_t col) {
    const std::size_t m = u.rows();
    for (std::size_t seed = 0; seed < m; ++seed) {
        std::vector<Complex> v(m, Complex{0.0, 0.0});
        v[seed] = 1.0;
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j = 0; j < u.cols(); ++j) {
                if (j == col) continue;
                Complex overlap{0.0, 0.0};
                for (std::size_t i = 0; i < m; ++i) overlap += std::conj(u(i, j)) * v[i];
                for (std::size_t i = 0; i < m; ++i) v[i] -= overlap * u(i, j);
            }
        }
        double norm = 0.0;
        for (const Complex& x : v) norm += std::norm(x);
        norm = std::sqrt(norm);
        if (norm > 0.5) {  // seed not inside the span of the fixed columns
            for (std::size_t i = 0; i < m; ++i) u(i, col) = v[i] / norm;
            return;
        }
    }
    throw NumericalFailure("svd: failed to complete orthonormal basis", 0);
}

// One-sided Jacobi on a matrix with rows >= cols: orthogonalize column pairs
// by right-multiplying plane rotations, accumulating them into v.
SvdResult svd_tall(const ComplexMatrix& m) {
    const std::size_t nrows = m.rows();
    const std::size_t ncols = m.cols();
    ComplexMatrix a = m;
    ComplexMatrix v = ComplexMatrix::identity(ncols);

    // Column-norm floor relative to ||m||_F (invariant under the rotations).
    // A column below it is numerically zero; left in place it would stay
    // perfectly correlated with real columns and the sweep would never
    // settle, so flush it to exact zero instead.
    const double frob = hs_norm(m);
    const double floor_sq = (1e-14 * frob) * (1e-14 * frob);

    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        for (std::size_t p = 0; p < ncols; ++p) {
            double norm_sq = 0.0;
            for (std::size_t i = 0; i < nrows; ++i) norm_sq += std::norm(a(i, p));
            if (norm_sq > 0.0 && norm_sq <= floor_sq) {
                for (std::size_t i = 0; i < nrows; ++i) a(i, p) = Complex{0.0, 0.0};
            }
        }
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < ncols; ++p) {
            for (std::size_t q = p + 1; q < ncols; ++q) {
                double alpha = 0.0, beta = 0.0;
                Complex gamma{0.0, 0.0};
                for (std::size_t i = 0; i < nrows; ++i) {
                    alpha += std::norm(a(i, p));
                    beta += std::norm(a(i, q));
                    gamma += std::conj(a(i, p)) * a(i, q);
                }
                const double g = std::abs(gamma);
                if (g <= kJacobiTol * std::sqrt(alpha * beta)) continue;
                rotated = true;

                // Phase w makes the Gram off-diagonal real, then a real
                // Jacobi rotation zeroes it: t^2 + 2*zeta*t - 1 = 0.
                const Complex w = gamma / g;
                const double zeta = (beta - alpha) / (2.0 * g);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;

                for (std::size_t i = 0; i < nrows; ++i) {
                    const Complex ap = a(i, p);
                    const Complex aq = std::conj(w) * a(i, q);
                    a(i, p) = c * ap - s * aq;
                    a(i, q) = s * ap + c * aq;
                }
                for (std::size_t i = 0; i < ncols; ++i) {
                    const Complex vp = v(i, p);
                    const Complex vq = std::conj(w) * v(i, q);
                    v(i, p) = c * vp - s * vq;
                    v(i, q) = s * vp + c * vq;
                }
            }
        }
        if (!rotated) break;
    }
    if (sweep == kMaxSweeps) {
        throw NumericalFailure("svd: Jacobi sweeps did not converge", sweep);
    }

    std::vector<double> sigma(ncols);
    for (std::size_t j = 0; j < ncols; ++j) {
        double norm = 0.0;
        for (std::size_t i = 0; i < nrows; ++i) norm += std::norm(a(i, j));
        sigma[j] = std::sqrt(norm);
    }

    std::vector<std::size_t> order(ncols);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

    SvdResult out;
    out.singular_values.resize(ncols);
    out.left = ComplexMatrix(nrows, ncols);
    out.right = ComplexMatrix(ncols, ncols);
    const double zero_threshold = (ncols > 0 && sigma[order[0]] > 0.0)
                                      ? sigma[order[0]] * 1e-14
                                      : 0.0;
    std::vector<std::size_t> empty_columns;
    for (std::size_t k = 0; k < ncols; ++k) {
        const std::size_t src = order[k];
        out.singular_values[k] = sigma[src];
        for (std::size_t i = 0; i < ncols; ++i) out.right(i, k) = v(i, src);
        if (sigma[src] > zero_threshold) {
            for (std::size_t i = 0; i < nrows; ++i) out.left(i, k) = a(i, src) / sigma[src];
        } else {
            out.singular_values[k] = 0.0;
            empty_columns.push_back(k);
        }
    }
    for (std::size_t k : empty_columns) complete_column(out.left, k);
    return out;
}

}  // namespace

SvdResult svd(const ComplexMatrix& m) {
    for (const Complex& e : m.entries()) {
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
            throw ValidationError("svd: non-finite entry");
        }
    }
    if (m.rows() >= m.cols()) return svd_tall(m);
    SvdResult t = svd_tall(dagger(m));
    return SvdResult{std::move(t.singular_values), std::move(t.right), std::move(t.left)};
}

ComplexMatrix realign(const ComplexMatrix& q, std::size_t dim_a, std::size_t dim_b) {
    const std::size_t d = dim_a * dim_b;
    if (!q.is_square() || q.rows() != d) {
        throw ShapeError("realign: operator must be square of dimension dim_a*dim_b");
    }
    ComplexMatrix r(dim_a * dim_a, dim_b * dim_b);
    for (std::size_t i1 = 0; i1 < dim_a; ++i1)
        for (std::size_t j1 = 0; j1 < dim_a; ++j1)
            for (std::size_t i2 = 0; i2 < dim_b; ++i2)
                for (std::size_t j2 = 0; j2 < dim_b; ++j2)
                    r(i1 * dim_a + j1, i2 * dim_b + j2) = q(i1 * dim_b + i2, j1 * dim_b + j2);
    return r;
}

HermitianEigen eigh(const ComplexMatrix& h) {
    if (!h.is_square()) throw ShapeError("eigh: matrix must be square");
    const std::size_t n = h.rows();
    if (max_abs_diff(h, dagger(h)) > 1e-9 * std::max(1.0, max_abs(h))) {
        throw ValidationError("eigh: matrix is not Hermitian");
    }

    ComplexMatrix a = h;
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double scale = std::max(1.0, max_abs(h));

    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
        if (off <= 1e-13 * scale) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double g = std::abs(a(p, q));
                if (g <= 1e-15 * scale) continue;

                // Unitary similarity R = diag(1, conj(w)) * real rotation,
                // chosen to zero a(p,q).
                const Complex w = a(p, q) / g;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double zeta = (aqq - app) / (2.0 * g);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;

                // R restricted to the (p,q) plane is [[c, s], [-s*conj(w), c*conj(w)]].
                // Columns pick up A <- A*R:
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex ap = a(i, p);
                    const Complex aq = a(i, q);
                    a(i, p) = c * ap - s * std::conj(w) * aq;
                    a(i, q) = s * ap + c * std::conj(w) * aq;
                }
                // Rows pick up A <- R^dagger * A:
                for (std::size_t j = 0; j < n; ++j) {
                    const Complex ap = a(p, j);
                    const Complex aq = a(q, j);
                    a(p, j) = c * ap - s * w * aq;
                    a(q, j) = s * ap + c * w * aq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex vp = v(i, p);
                    const Complex vq = v(i, q);
                    v(i, p) = c * vp - s * std::conj(w) * vq;
                    v(i, q) = s * vp + c * std::conj(w) * vq;
                }
            }
        }
    }
    if (sweep == kMaxSweeps) {
        throw NumericalFailure("eigh: Jacobi sweeps did not converge", sweep);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

    HermitianEigen out;
    out.eigenvalues.resize(n);
    out.vectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

}  // namespace hq
