#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hq/matrix.hpp"

namespace hq {

/// Total-dimension bound for registers; default 2^20, overridable through the
/// HQ_MAX_DIM environment variable (read once per process).
std::size_t register_dimension_limit();

/// Ordered list of site dimensions (d_1, ..., d_N), all >= 2. Composite basis
/// indices are big-endian: the leftmost tensor factor is most significant,
/// idx = sum_i m_i * prod_{k>i} d_k.
class HybridRegister {
public:
    explicit HybridRegister(std::vector<std::size_t> dims);

    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t site_count() const { return dims_.size(); }
    std::size_t dim(std::size_t site) const { return dims_[site]; }
    std::size_t total_dimension() const { return total_; }
    const std::vector<std::size_t>& strides() const { return strides_; }

    std::size_t flatten(std::span<const std::size_t> digits) const;
    std::vector<std::size_t> digits_of(std::size_t index) const;

    bool operator==(const HybridRegister& other) const { return dims_ == other.dims_; }

private:
    std::vector<std::size_t> dims_;
    std::vector<std::size_t> strides_;
    std::size_t total_ = 1;
};

/// Pure state on a hybrid register; amplitudes indexed big-endian.
struct StateVector {
    HybridRegister reg;
    std::vector<Complex> amplitudes;

    double norm() const;
};

/// Ordered distinct site indices a gate acts on; the gate's dimension must be
/// the product of the targeted site dimensions in the listed order.
struct SitePlacement {
    std::vector<std::size_t> targets;
};

/// Unit basis vector |digits>.
StateVector basis_state(const HybridRegister& reg, const std::vector<std::size_t>& digits);

/// Full-register operator acting as `gate` on the targeted sites (in the
/// listed order, which may be non-adjacent or permuted) and identity
/// elsewhere. Placements are realized by index bookkeeping, not permutation
/// matrices.
ComplexMatrix embed(const ComplexMatrix& gate, const HybridRegister& reg,
                    const SitePlacement& placement);

/// state <- embed(gate) * state, computed by direct contraction over the
/// targeted sites. The 2-norm must be preserved within 1e-10 per application
/// (unitary gates); violations raise NumericalFailure.
StateVector apply(const StateVector& state, const ComplexMatrix& gate,
                  const SitePlacement& placement);

}  // namespace hq
