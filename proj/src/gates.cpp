#include "hq/gates.hpp"

#include <cmath>
#include <string>

#include "hq/errors.hpp"
#include "hq/register.hpp"

namespace hq {

namespace {

void require_dim(std::size_t d, const char* who) {
    if (d < 2) throw DimensionError(std::string(who) + ": dimension must be >= 2");
}

// Permutation gate from an index map row = perm(col); entries exact 0/1.
ComplexMatrix permutation_matrix(std::size_t dim, const std::vector<std::size_t>& perm) {
    ComplexMatrix m(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) m(perm[col], col) = 1.0;
    return m;
}

}  // namespace

GateSignature make_gate(std::vector<std::size_t> site_dims, ComplexMatrix matrix) {
    std::size_t expected = 1;
    for (std::size_t d : site_dims) {
        require_dim(d, "gate");
        expected *= d;
    }
    if (!matrix.is_square() || matrix.rows() != expected) {
        throw ShapeError("gate: matrix dimension does not match site dimensions");
    }
    if (!is_unitary(matrix, kUnitarityTol)) {
        throw ValidationError("gate: matrix is not unitary within tolerance");
    }
    return GateSignature{std::move(site_dims), std::move(matrix)};
}

ProjectorFamily primitive_projectors(std::size_t d) {
    require_dim(d, "primitive_projectors");
    ProjectorFamily family{d, {}};
    for (std::size_t n = 0; n < d; ++n) {
        ComplexMatrix p(d, d);
        p(n, n) = 1.0;
        family.members.push_back(std::move(p));
    }
    return family;
}

ProjectorFamily sum_projectors(std::size_t d_c, std::size_t d_t) {
    require_dim(d_c, "sum_projectors");
    require_dim(d_t, "sum_projectors");
    const std::size_t d_min = std::min(d_c, d_t);
    ProjectorFamily family{d_c, {}};
    for (std::size_t s = 0; s < d_min; ++s) {
        ComplexMatrix pi(d_c, d_c);
        for (std::size_t n = s; n < d_c; n += d_t) pi(n, n) = 1.0;
        family.members.push_back(std::move(pi));
    }
    return family;
}

ProjectorFamily toffoli_projectors(std::size_t d_c, std::size_t d_c2, std::size_t d_t) {
    require_dim(d_c, "toffoli_projectors");
    require_dim(d_c2, "toffoli_projectors");
    require_dim(d_t, "toffoli_projectors");
    const std::size_t control_dim = d_c * d_c2;
    ProjectorFamily family{control_dim, {}};
    family.members.assign(d_t, ComplexMatrix(control_dim, control_dim));
    for (std::size_t r = 0; r < d_c; ++r)
        for (std::size_t s = 0; s < d_c2; ++s) {
            const std::size_t m = (r * s) % d_t;
            const std::size_t idx = r * d_c2 + s;
            family.members[m](idx, idx) = 1.0;
        }
    return family;
}

ProjectorFamily parity_projectors(std::size_t d_c) {
    require_dim(d_c, "parity_projectors");
    ProjectorFamily family{d_c, {ComplexMatrix(d_c, d_c), ComplexMatrix(d_c, d_c)}};
    for (std::size_t m = 0; m < d_c; ++m) family.members[m % 2](m, m) = 1.0;
    return family;
}

GateSignature pauli_x(std::size_t d) {
    require_dim(d, "pauli_x");
    std::vector<std::size_t> perm(d);
    for (std::size_t s = 0; s < d; ++s) perm[s] = (s + 1) % d;
    return make_gate({d}, permutation_matrix(d, perm));
}

GateSignature pauli_z(std::size_t d) {
    require_dim(d, "pauli_z");
    std::vector<Complex> diag(d);
    for (std::size_t s = 0; s < d; ++s) diag[s] = root_of_unity(d, static_cast<long long>(s));
    return make_gate({d}, ComplexMatrix::diagonal(diag));
}

GateSignature fourier(std::size_t d) {
    require_dim(d, "fourier");
    ComplexMatrix f(d, d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t s = 0; s < d; ++s)
            f(k, s) = scale * root_of_unity(d, static_cast<long long>(s * k));
    return make_gate({d}, std::move(f));
}

GateSignature sum_gate(std::size_t d_c, std::size_t d_t) {
    require_dim(d_c, "sum_gate");
    require_dim(d_t, "sum_gate");
    // D|m,n> = |m, n+m mod d_t>; control index restricted to m < d_c and the
    // shift exponent reduced mod d_t (the hybrid subtlety).
    std::vector<std::size_t> perm(d_c * d_t);
    for (std::size_t m = 0; m < d_c; ++m)
        for (std::size_t n = 0; n < d_t; ++n)
            perm[m * d_t + n] = m * d_t + (n + m) % d_t;
    return make_gate({d_c, d_t}, permutation_matrix(d_c * d_t, perm));
}

GateSignature sum_prime(std::size_t d_c, std::size_t d_t) {
    require_dim(d_c, "sum_prime");
    require_dim(d_t, "sum_prime");
    // |m,n> -> |m, m-n mod d_t>; Hermitian, squares to I.
    std::vector<std::size_t> perm(d_c * d_t);
    for (std::size_t m = 0; m < d_c; ++m)
        for (std::size_t n = 0; n < d_t; ++n)
            perm[m * d_t + n] = m * d_t + (m % d_t + d_t - n) % d_t;
    return make_gate({d_c, d_t}, permutation_matrix(d_c * d_t, perm));
}

GateSignature partial_swap(std::size_t d_c, std::size_t d_t, std::size_t d_p) {
    require_dim(d_c, "partial_swap");
    require_dim(d_t, "partial_swap");
    if (d_p < 2 || d_p > std::min(d_c, d_t)) {
        throw RangeError("partial_swap: need 2 <= d_P <= min(d_c, d_t)");
    }
    std::vector<std::size_t> perm(d_c * d_t);
    for (std::size_t i = 0; i < d_c; ++i)
        for (std::size_t j = 0; j < d_t; ++j)
            perm[i * d_t + j] = (i < d_p && j < d_p) ? j * d_t + i : i * d_t + j;
    return make_gate({d_c, d_t}, permutation_matrix(d_c * d_t, perm));
}

GateSignature swap_via_sums(std::size_t d_c, std::size_t d_t) {
    require_dim(d_c, "swap_via_sums");
    require_dim(d_t, "swap_via_sums");
    const HybridRegister reg({d_c, d_t});
    const ComplexMatrix d12 = sum_gate(d_c, d_t).matrix;
    const ComplexMatrix d21 = embed(sum_gate(d_t, d_c).matrix, reg, SitePlacement{{1, 0}});
    const ComplexMatrix f2 = matrix_power(fourier(d_c).matrix, 2);
    const ComplexMatrix swap_like =
        kron(f2, ComplexMatrix::identity(d_t)) * d12 * dagger(d21) * d12;
    return make_gate({d_c, d_t}, swap_like);
}

GateSignature swap_fujii(std::size_t d_c, std::size_t d_t) {
    require_dim(d_c, "swap_fujii");
    require_dim(d_t, "swap_fujii");
    if (d_c != d_t) {
        throw UnsupportedError("swap_fujii: construction requires equal dimensions");
    }
    const std::size_t d = d_c;
    const HybridRegister reg({d, d});
    const ComplexMatrix d12 = sum_gate(d, d).matrix;
    const ComplexMatrix d21 = embed(sum_gate(d, d).matrix, reg, SitePlacement{{1, 0}});
    const ComplexMatrix f2 = matrix_power(fourier(d).matrix, 2);
    const ComplexMatrix f2_left = kron(f2, ComplexMatrix::identity(d));
    const ComplexMatrix f2_right = kron(ComplexMatrix::identity(d), f2);
    return make_gate({d, d}, d12 * f2_left * d21 * f2_left * d12 * f2_right);
}

GateSignature controlled_u(std::size_t d_c, const std::vector<ComplexMatrix>& unitaries) {
    require_dim(d_c, "controlled_u");
    if (unitaries.size() != d_c) {
        throw ValidationError("controlled_u: need exactly d_c unitaries");
    }
    const std::size_t d_t = unitaries.front().rows();
    for (const ComplexMatrix& u : unitaries) {
        if (!u.is_square() || u.rows() != d_t) {
            throw ValidationError("controlled_u: target unitaries must share one square shape");
        }
        if (!is_unitary(u, kUnitarityTol)) {
            throw ValidationError("controlled_u: non-unitary target operator");
        }
    }
    ComplexMatrix m(d_c * d_t, d_c * d_t);
    for (std::size_t s = 0; s < d_c; ++s)
        for (std::size_t i = 0; i < d_t; ++i)
            for (std::size_t j = 0; j < d_t; ++j)
                m(s * d_t + i, s * d_t + j) = unitaries[s](i, j);
    return make_gate({d_c, d_t}, std::move(m));
}

GateSignature toffoli(std::size_t d_c, std::size_t d_c2, std::size_t d_t) {
    require_dim(d_c, "toffoli");
    require_dim(d_c2, "toffoli");
    require_dim(d_t, "toffoli");
    // |r,s,n> -> |r,s,n + r*s mod d_t>
    const std::size_t dim = d_c * d_c2 * d_t;
    std::vector<std::size_t> perm(dim);
    for (std::size_t r = 0; r < d_c; ++r)
        for (std::size_t s = 0; s < d_c2; ++s)
            for (std::size_t n = 0; n < d_t; ++n)
                perm[(r * d_c2 + s) * d_t + n] = (r * d_c2 + s) * d_t + (n + r * s) % d_t;
    return make_gate({d_c, d_c2, d_t}, permutation_matrix(dim, perm));
}

GateSignature fredkin(std::size_t d_c, std::size_t d_1, std::size_t d_2, std::size_t d_p) {
    require_dim(d_c, "fredkin");
    if (d_p < 2 || d_p > std::min(d_1, d_2)) {
        throw RangeError("fredkin: need 2 <= d_P <= min(d_1, d_2)");
    }
    require_dim(d_1, "fredkin");
    require_dim(d_2, "fredkin");
    // S_P^m is S_P for odd m and I for even m.
    const std::size_t dim = d_c * d_1 * d_2;
    std::vector<std::size_t> perm(dim);
    for (std::size_t m = 0; m < d_c; ++m)
        for (std::size_t i = 0; i < d_1; ++i)
            for (std::size_t j = 0; j < d_2; ++j) {
                const bool swap = (m % 2 == 1) && i < d_p && j < d_p;
                const std::size_t ti = swap ? j : i;
                const std::size_t tj = swap ? i : j;
                perm[(m * d_1 + i) * d_2 + j] = (m * d_1 + ti) * d_2 + tj;
            }
    return make_gate({d_c, d_1, d_2}, permutation_matrix(dim, perm));
}

GateSignature fredkin(std::size_t d_c, std::size_t d_1, std::size_t d_2) {
    return fredkin(d_c, d_1, d_2, std::min(d_1, d_2));
}

}  // namespace hq
