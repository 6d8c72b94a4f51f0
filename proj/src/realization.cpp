#include "hq/realization.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hq/decomp.hpp"
#include "hq/errors.hpp"

namespace hq {

namespace {

// Diagonal gate from a per-index phase exponent table: entries e^{i phase(k)}.
template <typename PhaseFn>
ComplexMatrix diagonal_phase(std::size_t dim, PhaseFn&& phase) {
    ComplexMatrix m(dim, dim);
    for (std::size_t k = 0; k < dim; ++k) m(k, k) = std::polar(1.0, phase(k));
    return m;
}

}  // namespace

SpinSystem spin_from_dimension(std::size_t d) {
    if (d < 2) throw DimensionError("spin: dimension must be >= 2");
    return SpinSystem{static_cast<int>(d) - 1};
}

ComplexMatrix number_operator(const SpinSystem& spin) {
    if (spin.twice_j < 1) throw DimensionError("number_operator: need j >= 1/2");
    const std::size_t d = spin.dimension();
    ComplexMatrix n(d, d);
    for (std::size_t k = 0; k < d; ++k) n(k, k) = static_cast<double>(k);
    return n;
}

ComplexMatrix spin_shift(const SpinSystem& spin) {
    const std::size_t d = spin.dimension();
    ComplexMatrix x(d, d);
    for (std::size_t k = 0; k < d; ++k) x((k + 1) % d, k) = 1.0;
    return x;
}

ComplexMatrix spin_phase(const SpinSystem& spin) {
    const std::size_t d = spin.dimension();
    ComplexMatrix z(d, d);
    for (std::size_t k = 0; k < d; ++k) z(k, k) = root_of_unity(d, static_cast<long long>(k));
    return z;
}

GateSignature controlled_phase(std::size_t d_c, std::size_t d_t) {
    if (d_c < 2 || d_t < 2) throw DimensionError("controlled_phase: dimensions must be >= 2");
    ComplexMatrix v(d_c * d_t, d_c * d_t);
    for (std::size_t m = 0; m < d_c; ++m)
        for (std::size_t n = 0; n < d_t; ++n) {
            const std::size_t idx = m * d_t + n;
            v(idx, idx) = root_of_unity(d_t, static_cast<long long>(m * n));
        }
    return make_gate({d_c, d_t}, std::move(v));
}

GateSignature sum_from_phase(std::size_t d_c, std::size_t d_t) {
    const ComplexMatrix f = fourier(d_t).matrix;
    const ComplexMatrix id_c = ComplexMatrix::identity(d_c);
    const ComplexMatrix d_matrix =
        kron(id_c, dagger(f)) * controlled_phase(d_c, d_t).matrix * kron(id_c, f);
    return make_gate({d_c, d_t}, d_matrix);
}

GateSignature three_body_phase(std::size_t d_1, std::size_t d_2, std::size_t d_3, double theta) {
    if (d_1 < 2 || d_2 < 2 || d_3 < 2) {
        throw DimensionError("three_body_phase: dimensions must be >= 2");
    }
    const std::size_t dim = d_1 * d_2 * d_3;
    ComplexMatrix w(dim, dim);
    for (std::size_t n1 = 0; n1 < d_1; ++n1)
        for (std::size_t n2 = 0; n2 < d_2; ++n2)
            for (std::size_t n3 = 0; n3 < d_3; ++n3) {
                const std::size_t idx = (n1 * d_2 + n2) * d_3 + n3;
                w(idx, idx) = std::polar(1.0, theta * static_cast<double>(n1 * n2 * n3));
            }
    return make_gate({d_1, d_2, d_3}, std::move(w));
}

GateSignature toffoli_from_phase(std::size_t d_1, std::size_t d_2, std::size_t d_3) {
    const ComplexMatrix f = fourier(d_3).matrix;
    const ComplexMatrix id_cc = ComplexMatrix::identity(d_1 * d_2);
    const double theta = 2.0 * std::numbers::pi / static_cast<double>(d_3);
    const ComplexMatrix t =
        kron(id_cc, dagger(f)) * three_body_phase(d_1, d_2, d_3, theta).matrix * kron(id_cc, f);
    return make_gate({d_1, d_2, d_3}, t);
}

TruncatedTwoMode::TruncatedTwoMode(std::size_t n_max) : n_max_(n_max) {
    if (n_max < 1) throw DimensionError("two_mode: n_max must be >= 1");
    for (std::size_t total = 0; total <= n_max; ++total) {
        std::vector<std::size_t> block;
        for (std::size_t n2 = 0; n2 <= total; ++n2) {
            block.push_back(basis_.size());
            basis_.emplace_back(static_cast<int>(total - n2), static_cast<int>(n2));
        }
        blocks_.push_back(std::move(block));
    }
}

std::size_t TruncatedTwoMode::index_of(int n1, int n2) const {
    if (n1 < 0 || n2 < 0 || static_cast<std::size_t>(n1 + n2) > n_max_) {
        throw RangeError("two_mode: occupation (" + std::to_string(n1) + "," +
                         std::to_string(n2) + ") outside the truncation");
    }
    const std::size_t total = static_cast<std::size_t>(n1 + n2);
    return total * (total + 1) / 2 + static_cast<std::size_t>(n2);
}

ComplexMatrix TruncatedTwoMode::mode1_number() const {
    ComplexMatrix m(size(), size());
    for (std::size_t i = 0; i < size(); ++i) m(i, i) = static_cast<double>(basis_[i].first);
    return m;
}

ComplexMatrix TruncatedTwoMode::mode2_number() const {
    ComplexMatrix m(size(), size());
    for (std::size_t i = 0; i < size(); ++i) m(i, i) = static_cast<double>(basis_[i].second);
    return m;
}

ComplexMatrix TruncatedTwoMode::transfer() const {
    // a1^dagger a2 |n1,n2> = sqrt((n1+1) n2) |n1+1, n2-1>; conserves n1+n2.
    ComplexMatrix m(size(), size());
    for (std::size_t i = 0; i < size(); ++i) {
        const auto [n1, n2] = basis_[i];
        if (n2 > 0) {
            m(index_of(n1 + 1, n2 - 1), i) =
                std::sqrt(static_cast<double>((n1 + 1) * n2));
        }
    }
    return m;
}

ComplexMatrix TruncatedTwoMode::exchange() const {
    const ComplexMatrix t = transfer();
    return t + dagger(t);
}

ComplexMatrix TruncatedTwoMode::jz() const {
    ComplexMatrix m(size(), size());
    for (std::size_t i = 0; i < size(); ++i) {
        m(i, i) = 0.5 * static_cast<double>(basis_[i].first - basis_[i].second);
    }
    return m;
}

ComplexMatrix exp_i_hermitian_blockwise(const ComplexMatrix& h,
                                        const std::vector<std::vector<std::size_t>>& blocks,
                                        double scale) {
    ComplexMatrix out(h.rows(), h.cols());
    for (const std::vector<std::size_t>& block : blocks) {
        ComplexMatrix sub(block.size(), block.size());
        for (std::size_t a = 0; a < block.size(); ++a)
            for (std::size_t b = 0; b < block.size(); ++b) sub(a, b) = h(block[a], block[b]);
        const HermitianEigen eig = eigh(sub);
        for (std::size_t a = 0; a < block.size(); ++a)
            for (std::size_t b = 0; b < block.size(); ++b) {
                Complex acc{0.0, 0.0};
                for (std::size_t k = 0; k < block.size(); ++k) {
                    acc += eig.vectors(a, k) * std::polar(1.0, scale * eig.eigenvalues[k]) *
                           std::conj(eig.vectors(b, k));
                }
                out(block[a], block[b]) = acc;
            }
    }
    return out;
}

ComplexMatrix two_mode_swap(const TruncatedTwoMode& modes) {
    const double pi = std::numbers::pi;
    // exp((pi/2)(a1'a2 - a2'a1)) = exp(i (pi/2) H) with H = -i(a1'a2 - a2'a1).
    const ComplexMatrix t = modes.transfer();
    const ComplexMatrix rotation_generator = Complex{0.0, -1.0} * (t - dagger(t));
    const ComplexMatrix rotation =
        exp_i_hermitian_blockwise(rotation_generator, modes.blocks(), pi / 2.0);
    const ComplexMatrix phase = exp_i_hermitian_blockwise(modes.mode2_number(), modes.blocks(), pi);
    return phase * rotation;
}

ComplexMatrix bosonic_fredkin(std::size_t control_dim, std::size_t n_max) {
    if (control_dim < 2) throw DimensionError("bosonic_fredkin: control dimension must be >= 2");
    const double pi = std::numbers::pi;
    const TruncatedTwoMode modes(n_max);
    const SpinSystem control = spin_from_dimension(control_dim);
    const ComplexMatrix n_control = number_operator(control);
    const std::size_t dim = control_dim * modes.size();

    // Blocks of the joint space: (control level) x (photon-number block).
    std::vector<std::vector<std::size_t>> joint_blocks;
    for (std::size_t m = 0; m < control_dim; ++m) {
        for (const std::vector<std::size_t>& block : modes.blocks()) {
            std::vector<std::size_t> joint;
            for (std::size_t i : block) joint.push_back(m * modes.size() + i);
            joint_blocks.push_back(std::move(joint));
        }
    }

    const ComplexMatrix id_control = ComplexMatrix::identity(control_dim);
    auto exp_joint = [&](const ComplexMatrix& h, double scale) {
        return exp_i_hermitian_blockwise(h, joint_blocks, scale);
    };

    const ComplexMatrix n1_n = kron(n_control, modes.mode1_number());
    const ComplexMatrix n2_n = kron(n_control, modes.mode2_number());
    const ComplexMatrix hop = kron(id_control, modes.exchange());

    const ComplexMatrix seq = exp_joint(n2_n, pi) * exp_joint(hop, pi / 4.0) *
                              exp_joint(n1_n, pi / 2.0) * exp_joint(n2_n, -pi / 2.0) *
                              exp_joint(hop, -pi / 4.0);
    if (seq.rows() != dim) throw NumericalFailure("bosonic_fredkin: dimension bookkeeping", 0);
    return seq;
}

double bosonic_fredkin_defect(std::size_t control_dim, std::size_t n_max) {
    const TruncatedTwoMode modes(n_max);
    const ComplexMatrix sequence = bosonic_fredkin(control_dim, n_max);
    const ComplexMatrix swap = two_mode_swap(modes);

    double worst = 0.0;
    for (std::size_t m = 0; m < control_dim; ++m) {
        const ComplexMatrix swap_power = matrix_power(swap, m);
        for (const std::vector<std::size_t>& block : modes.blocks()) {
            ComplexMatrix seq_block(block.size(), block.size());
            ComplexMatrix ref_block(block.size(), block.size());
            for (std::size_t a = 0; a < block.size(); ++a)
                for (std::size_t b = 0; b < block.size(); ++b) {
                    seq_block(a, b) =
                        sequence(m * modes.size() + block[a], m * modes.size() + block[b]);
                    ref_block(a, b) = swap_power(block[a], block[b]);
                }
            worst = std::max(worst, max_entry_distance_up_to_phase(seq_block, ref_block));
        }
    }
    return worst;
}

}  // namespace hq
