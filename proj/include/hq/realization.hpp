#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hq/gates.hpp"
#include "hq/matrix.hpp"

namespace hq {

/// Spin-j system with d = 2j+1 levels; j is stored doubled so half-integers
/// stay exact.
struct SpinSystem {
    int twice_j = 1;

    std::size_t dimension() const { return static_cast<std::size_t>(twice_j) + 1; }
};

SpinSystem spin_from_dimension(std::size_t d);

/// Number operator N = J_z + j I = diag(0, 1, ..., 2j).
ComplexMatrix number_operator(const SpinSystem& spin);

/// Cyclic shift realization sum_n |n+1 mod d><n|; the wrap term keeps it
/// unitary and equal to pauli_x(2j+1).
ComplexMatrix spin_shift(const SpinSystem& spin);

/// exp(i 2 pi N / (2j+1)) = pauli_z(2j+1).
ComplexMatrix spin_phase(const SpinSystem& spin);

/// Controlled-phase gate V = zeta_{d_t}^{N_c N_t}: diagonal entries
/// zeta_{d_t}^{m n}.
GateSignature controlled_phase(std::size_t d_c, std::size_t d_t);

/// SUM gate realized by Fourier conjugation of the controlled phase:
/// (I (x) F^dagger) V (I (x) F); equals sum_gate(d_c, d_t).
GateSignature sum_from_phase(std::size_t d_c, std::size_t d_t);

/// Three-body controlled phase W(theta) = exp(i theta N_1 N_2 N_3).
GateSignature three_body_phase(std::size_t d_1, std::size_t d_2, std::size_t d_3, double theta);

/// Toffoli realized from W(2 pi / d_3) by Fourier conjugation on the target;
/// equals toffoli(d_1, d_2, d_3).
GateSignature toffoli_from_phase(std::size_t d_1, std::size_t d_2, std::size_t d_3);

/// Two bosonic modes truncated at total photon number n_max. The basis is
/// ordered by total photon number block, then by the mode-2 occupation, so
/// number-conserving operators are block diagonal. Only number-conserving
/// bilinears are exposed: truncation then introduces no error on the kept
/// blocks.
class TruncatedTwoMode {
public:
    explicit TruncatedTwoMode(std::size_t n_max);

    std::size_t n_max() const { return n_max_; }
    std::size_t size() const { return basis_.size(); }
    const std::vector<std::pair<int, int>>& basis() const { return basis_; }
    std::size_t index_of(int n1, int n2) const;

    /// Basis indices grouped by total photon number 0..n_max.
    const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }

    ComplexMatrix mode1_number() const;  // a1^dagger a1
    ComplexMatrix mode2_number() const;  // a2^dagger a2
    ComplexMatrix exchange() const;      // a1^dagger a2 + a2^dagger a1
    ComplexMatrix transfer() const;      // a1^dagger a2  (Schwinger J_+)
    ComplexMatrix jz() const;            // (a1^dagger a1 - a2^dagger a2) / 2

private:
    std::size_t n_max_ = 0;
    std::vector<std::pair<int, int>> basis_;
    std::vector<std::vector<std::size_t>> blocks_;
};

/// exp(i scale H) for a Hermitian H that is block diagonal over `blocks`;
/// each block is exponentiated by eigendecomposition.
ComplexMatrix exp_i_hermitian_blockwise(const ComplexMatrix& h,
                                        const std::vector<std::vector<std::size_t>>& blocks,
                                        double scale);

/// Two-mode SWAP S12 = exp(i pi a2^dagger a2) exp((pi/2)(a1^dagger a2 -
/// a2^dagger a1)); maps |n1,n2> to |n2,n1> on every kept block.
ComplexMatrix two_mode_swap(const TruncatedTwoMode& modes);

/// Five-factor controlled-SWAP sequence on spin(d) (x) two truncated modes:
///   exp(i pi a2'a2 N) exp(i pi/4 (a1'a2+a2'a1)) exp(i pi/2 a1'a1 N)
///   exp(-i pi/2 a2'a2 N) exp(-i pi/4 (a1'a2+a2'a1))
/// Acts as S12^m on control level |m>, up to a per-block phase.
ComplexMatrix bosonic_fredkin(std::size_t control_dim, std::size_t n_max);

/// Largest per-(control level, photon block) up-to-phase distance between
/// bosonic_fredkin and the corresponding power of two_mode_swap.
double bosonic_fredkin_defect(std::size_t control_dim, std::size_t n_max);

}  // namespace hq
