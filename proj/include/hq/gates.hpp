#pragma once

#include <cstddef>
#include <vector>

#include "hq/matrix.hpp"

namespace hq {

constexpr double kUnitarityTol = 1e-10;

/// A gate matrix together with the ordered site dimensions it acts on.
/// Constructed through make_gate, which enforces shape and unitarity.
struct GateSignature {
    std::vector<std::size_t> site_dims;
    ComplexMatrix matrix;

    std::size_t dimension() const { return matrix.rows(); }
};

/// Validates that `matrix` is square of dimension prod(site_dims) and unitary
/// within kUnitarityTol; throws ValidationError / ShapeError otherwise.
GateSignature make_gate(std::vector<std::size_t> site_dims, ComplexMatrix matrix);

/// A resolution of the identity: Hermitian idempotents, mutually orthogonal
/// under the Hilbert-Schmidt product, summing to I.
struct ProjectorFamily {
    std::size_t dim = 0;
    std::vector<ComplexMatrix> members;
};

/// Primitive projectors P_n = |n><n| on a d-dimensional space.
ProjectorFamily primitive_projectors(std::size_t d);

/// Compound projectors Pi_s = sum of P_n over n < d_c with n = s (mod d_t),
/// for s < min(d_c, d_t); these group the SUM gate's control terms.
ProjectorFamily sum_projectors(std::size_t d_c, std::size_t d_t);

/// Compound projectors Pi_m on the two-control space of the Toffoli gate:
/// Pi_m = sum of P_r (x) P_s over pairs with r*s = m (mod d_t).
ProjectorFamily toffoli_projectors(std::size_t d_c, std::size_t d_c2, std::size_t d_t);

/// Parity projectors {Pi_plus, Pi_minus} (even / odd control levels).
ProjectorFamily parity_projectors(std::size_t d_c);

/// Cyclic shift X|s> = |s+1 mod d>.
GateSignature pauli_x(std::size_t d);

/// Phase gate Z|s> = zeta_d^s |s>.
GateSignature pauli_z(std::size_t d);

/// Fourier gate F[k,s] = zeta_d^{sk} / sqrt(d); F^2 negates basis labels and
/// F^4 = I.
GateSignature fourier(std::size_t d);

/// Hybrid SUM (displacement) gate D = sum_n P_n (x) X^n on (d_c, d_t), with
/// the control sum restricted to n < d_c and target exponents reduced mod
/// d_t. Entries are exact 0/1.
GateSignature sum_gate(std::size_t d_c, std::size_t d_t);

/// Hermitian SUM variant |m>|n> -> |m>|m-n mod d_t>; squares to I exactly and
/// equals sum_gate(d_c,d_t) * (I (x) F^2).
GateSignature sum_prime(std::size_t d_c, std::size_t d_t);

/// Partial SWAP: |i>|j> -> |j>|i> when both i,j < d_P, identity otherwise.
/// Requires 2 <= d_P <= min(d_c, d_t).
GateSignature partial_swap(std::size_t d_c, std::size_t d_t, std::size_t d_p);

/// Three-SUM construction (F^2 (x) I) D12 D21^{-1} D12. Equals full SWAP when
/// d_c = d_t; for hybrid dimensions it is unitary but deliberately NOT a swap
/// (the counterexample is part of the contract).
GateSignature swap_via_sums(std::size_t d_c, std::size_t d_t);

/// Fujii's swap D12 (F^2 (x) I) D21 (F^2 (x) I) D12 (I (x) F^2); equal
/// dimensions only.
GateSignature swap_fujii(std::size_t d_c, std::size_t d_t);

/// General controlled unitary sum_s P_s (x) U_s; each U_s must be unitary.
GateSignature controlled_u(std::size_t d_c, const std::vector<ComplexMatrix>& unitaries);

/// Hybrid Toffoli |r>|s>|n> -> |r>|s>|n + r*s mod d_t>; order d_t.
GateSignature toffoli(std::size_t d_c, std::size_t d_c2, std::size_t d_t);

/// Hybrid Fredkin sum_m P_m (x) S_P^m = Pi+ (x) I + Pi- (x) S_P on
/// (d_c, d_1, d_2); involution.
GateSignature fredkin(std::size_t d_c, std::size_t d_1, std::size_t d_2, std::size_t d_p);

/// Fredkin with the maximal partial-swap cutoff d_P = min(d_1, d_2).
GateSignature fredkin(std::size_t d_c, std::size_t d_1, std::size_t d_2);

}  // namespace hq
