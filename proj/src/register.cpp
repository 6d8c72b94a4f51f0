#include "hq/register.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "hq/errors.hpp"

namespace hq {

namespace {

constexpr double kNormDriftTol = 1e-10;

struct PlacementLayout {
    std::vector<std::size_t> target_strides;  // register stride of each targeted site
    std::vector<std::size_t> target_dims;
    std::vector<std::size_t> env_strides;     // strides of the untouched sites
    std::vector<std::size_t> env_dims;
    std::size_t gate_dim = 1;
    // Offset of gate index g into the full register index, for fixed env.
    std::vector<std::size_t> gate_offsets;
};

PlacementLayout resolve_placement(const ComplexMatrix& gate, const HybridRegister& reg,
                                  const SitePlacement& placement) {
    if (!gate.is_square()) throw ShapeError("embed: gate matrix must be square");
    PlacementLayout layout;
    std::vector<bool> used(reg.site_count(), false);
    for (std::size_t site : placement.targets) {
        if (site >= reg.site_count()) {
            throw PlacementError("placement: site index " + std::to_string(site) + " out of range");
        }
        if (used[site]) {
            throw PlacementError("placement: repeated site index " + std::to_string(site));
        }
        used[site] = true;
        layout.target_strides.push_back(reg.strides()[site]);
        layout.target_dims.push_back(reg.dim(site));
        layout.gate_dim *= reg.dim(site);
    }
    if (gate.rows() != layout.gate_dim) {
        throw ShapeError("embed: gate dimension " + std::to_string(gate.rows()) +
                         " does not match targeted site dimensions (product " +
                         std::to_string(layout.gate_dim) + ")");
    }
    for (std::size_t site = 0; site < reg.site_count(); ++site) {
        if (!used[site]) {
            layout.env_strides.push_back(reg.strides()[site]);
            layout.env_dims.push_back(reg.dim(site));
        }
    }
    // gate index -> digits over target dims (big-endian in placement order)
    layout.gate_offsets.assign(layout.gate_dim, 0);
    for (std::size_t g = 0; g < layout.gate_dim; ++g) {
        std::size_t rest = g;
        std::size_t offset = 0;
        for (std::size_t j = layout.target_dims.size(); j-- > 0;) {
            offset += (rest % layout.target_dims[j]) * layout.target_strides[j];
            rest /= layout.target_dims[j];
        }
        layout.gate_offsets[g] = offset;
    }
    return layout;
}

// Iterates the base register index over all assignments of the environment
// sites (target digits held at zero).
class EnvOdometer {
public:
    explicit EnvOdometer(const PlacementLayout& layout)
        : dims_(layout.env_dims), strides_(layout.env_strides), digits_(dims_.size(), 0) {}

    std::size_t base() const { return base_; }

    bool advance() {
        for (std::size_t j = dims_.size(); j-- > 0;) {
            ++digits_[j];
            base_ += strides_[j];
            if (digits_[j] < dims_[j]) return true;
            base_ -= digits_[j] * strides_[j];
            digits_[j] = 0;
        }
        return false;
    }

private:
    std::vector<std::size_t> dims_;
    std::vector<std::size_t> strides_;
    std::vector<std::size_t> digits_;
    std::size_t base_ = 0;
};

}  // namespace

std::size_t register_dimension_limit() {
    static const std::size_t limit = [] {
        if (const char* env = std::getenv("HQ_MAX_DIM")) {
            const unsigned long long v = std::strtoull(env, nullptr, 10);
            if (v >= 2) return static_cast<std::size_t>(v);
        }
        return std::size_t{1} << 20;
    }();
    return limit;
}

HybridRegister::HybridRegister(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw DimensionError("register: needs at least one site");
    const std::size_t limit = register_dimension_limit();
    for (std::size_t d : dims_) {
        if (d < 2) throw DimensionError("register: site dimensions must be >= 2");
        if (total_ > limit / d) {
            throw DimensionError("register: total dimension exceeds limit " + std::to_string(limit));
        }
        total_ *= d;
    }
    strides_.assign(dims_.size(), 1);
    for (std::size_t i = dims_.size() - 1; i-- > 0;) {
        strides_[i] = strides_[i + 1] * dims_[i + 1];
    }
}

std::size_t HybridRegister::flatten(std::span<const std::size_t> digits) const {
    if (digits.size() != dims_.size()) throw RangeError("flatten: digit count mismatch");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (digits[i] >= dims_[i]) {
            throw RangeError("flatten: digit " + std::to_string(digits[i]) +
                             " out of range for site " + std::to_string(i));
        }
        idx += digits[i] * strides_[i];
    }
    return idx;
}

std::vector<std::size_t> HybridRegister::digits_of(std::size_t index) const {
    if (index >= total_) throw RangeError("digits_of: index out of range");
    std::vector<std::size_t> digits(dims_.size());
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        digits[i] = index / strides_[i];
        index %= strides_[i];
    }
    return digits;
}

double StateVector::norm() const {
    double acc = 0.0;
    for (const Complex& a : amplitudes) acc += std::norm(a);
    return std::sqrt(acc);
}

StateVector basis_state(const HybridRegister& reg, const std::vector<std::size_t>& digits) {
    StateVector psi{reg, std::vector<Complex>(reg.total_dimension(), Complex{0.0, 0.0})};
    psi.amplitudes[reg.flatten(digits)] = 1.0;
    return psi;
}

ComplexMatrix embed(const ComplexMatrix& gate, const HybridRegister& reg,
                    const SitePlacement& placement) {
    const PlacementLayout layout = resolve_placement(gate, reg, placement);
    ComplexMatrix full(reg.total_dimension(), reg.total_dimension());
    EnvOdometer env(layout);
    do {
        const std::size_t base = env.base();
        for (std::size_t a = 0; a < layout.gate_dim; ++a) {
            const std::size_t row = base + layout.gate_offsets[a];
            for (std::size_t b = 0; b < layout.gate_dim; ++b) {
                full(row, base + layout.gate_offsets[b]) = gate(a, b);
            }
        }
    } while (env.advance());
    return full;
}

StateVector apply(const StateVector& state, const ComplexMatrix& gate,
                  const SitePlacement& placement) {
    const PlacementLayout layout = resolve_placement(gate, state.reg, placement);
    StateVector out{state.reg,
                    std::vector<Complex>(state.reg.total_dimension(), Complex{0.0, 0.0})};
    EnvOdometer env(layout);
    do {
        const std::size_t base = env.base();
        for (std::size_t a = 0; a < layout.gate_dim; ++a) {
            Complex acc{0.0, 0.0};
            for (std::size_t b = 0; b < layout.gate_dim; ++b) {
                acc += gate(a, b) * state.amplitudes[base + layout.gate_offsets[b]];
            }
            out.amplitudes[base + layout.gate_offsets[a]] = acc;
        }
    } while (env.advance());

    if (std::abs(out.norm() - state.norm()) > kNormDriftTol) {
        throw NumericalFailure("apply: gate application did not preserve the state norm", 1);
    }
    return out;
}

}  // namespace hq
