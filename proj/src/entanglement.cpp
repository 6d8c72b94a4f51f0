#include "hq/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hq/decomp.hpp"
#include "hq/errors.hpp"

namespace hq {

namespace {

double xlog2x(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

// Packs an SVD into SchmidtData: probabilities s_n^2 / sum s^2, factors the
// singular-vector columns reshaped to (rows x cols) blocks.
SchmidtData schmidt_from_svd(const SvdResult& decomposition, std::size_t left_rows,
                             std::size_t left_cols, std::size_t right_rows,
                             std::size_t right_cols) {
    double total = 0.0;
    for (double s : decomposition.singular_values) total += s * s;
    if (total <= 0.0) throw ValidationError("schmidt: zero norm input");

    SchmidtData data;
    for (std::size_t n = 0; n < decomposition.singular_values.size(); ++n) {
        const double p = decomposition.singular_values[n] * decomposition.singular_values[n] / total;
        if (p <= kSchmidtCutoff) continue;
        data.coefficients.push_back(p);
        ComplexMatrix lf(left_rows, left_cols);
        for (std::size_t i = 0; i < left_rows * left_cols; ++i)
            lf.entries()[i] = decomposition.left(i, n);
        ComplexMatrix rf(right_rows, right_cols);
        for (std::size_t i = 0; i < right_rows * right_cols; ++i)
            rf.entries()[i] = std::conj(decomposition.right(i, n));
        data.left_factors.push_back(std::move(lf));
        data.right_factors.push_back(std::move(rf));
    }
    return data;
}

}  // namespace

SumEntanglementParams sum_params(std::size_t d_c, std::size_t d_t) {
    if (d_c < 2 || d_t < 2) throw DimensionError("sum_params: dimensions must be >= 2");
    return SumEntanglementParams{d_c, d_t, d_c / d_t, d_c % d_t};
}

SchmidtData schmidt_state(const StateVector& psi, const Bipartition& cut) {
    const std::size_t sites = psi.reg.site_count();
    if (cut.left.empty() || cut.right.empty()) {
        throw PartitionError("schmidt_state: both sides of the cut must be non-empty");
    }
    std::vector<int> side(sites, -1);
    auto mark = [&](const std::vector<std::size_t>& group, int tag) {
        for (std::size_t s : group) {
            if (s >= sites || side[s] != -1) {
                throw PartitionError("schmidt_state: cut is not a bipartition of the sites");
            }
            side[s] = tag;
        }
    };
    mark(cut.left, 0);
    mark(cut.right, 1);
    for (int tag : side) {
        if (tag == -1) throw PartitionError("schmidt_state: cut must cover every site");
    }

    std::size_t dim_left = 1, dim_right = 1;
    for (std::size_t s : cut.left) dim_left *= psi.reg.dim(s);
    for (std::size_t s : cut.right) dim_right *= psi.reg.dim(s);

    // Reshuffle amplitudes into a (left)x(right) coefficient matrix, with the
    // group digits flattened big-endian in the order each group lists them.
    ComplexMatrix coeff(dim_left, dim_right);
    for (std::size_t idx = 0; idx < psi.amplitudes.size(); ++idx) {
        const std::vector<std::size_t> digits = psi.reg.digits_of(idx);
        std::size_t row = 0, col = 0;
        for (std::size_t s : cut.left) row = row * psi.reg.dim(s) + digits[s];
        for (std::size_t s : cut.right) col = col * psi.reg.dim(s) + digits[s];
        coeff(row, col) = psi.amplitudes[idx];
    }
    return schmidt_from_svd(svd(coeff), dim_left, 1, dim_right, 1);
}

double entropy(const SchmidtData& data) {
    double e = 0.0;
    for (double p : data.coefficients) e -= xlog2x(p);
    return e;
}

SchmidtData operator_schmidt(const GateSignature& gate) {
    if (gate.site_dims.size() != 2) {
        throw ShapeError("operator_schmidt: gate must act on exactly two sites");
    }
    const std::size_t d_a = gate.site_dims[0];
    const std::size_t d_b = gate.site_dims[1];
    return schmidt_from_svd(svd(realign(gate.matrix, d_a, d_b)), d_a, d_a, d_b, d_b);
}

double operator_entanglement(const GateSignature& gate) {
    return entropy(operator_schmidt(gate));
}

double e_sum_closed_form(std::size_t d_c, std::size_t d_t) {
    const SumEntanglementParams p = sum_params(d_c, d_t);
    const double dc = static_cast<double>(d_c);
    const double high = static_cast<double>(p.quotient + 1) / dc;
    const double low = static_cast<double>(p.quotient) / dc;
    double e = 0.0;
    if (p.remainder > 0) e -= static_cast<double>(p.remainder) * xlog2x(high);
    if (p.quotient > 0 && d_t > p.remainder) {
        e -= static_cast<double>(d_t - p.remainder) * xlog2x(low);
    }
    return e;
}

EntanglementReport report_from(const SchmidtData& data) {
    return EntanglementReport{entropy(data), data.coefficients.size(), data.coefficients};
}

Lemma1Result lemma1_experiment(Lemma1Kind kind, std::size_t d_c, std::size_t d_t,
                               std::size_t target_level) {
    if (d_c < 2 || d_t < 2) throw DimensionError("lemma1: dimensions must be >= 2");
    if (target_level >= d_t) throw RangeError("lemma1: target level out of range");

    StateVector psi = [&]() -> StateVector {
        switch (kind) {
            case Lemma1Kind::Gamma: {
                // |gamma> (x) |t> on (d_c, d_t)
                StateVector s = gamma_state(HybridRegister({d_c, d_t}), 0);
                for (std::size_t m = 0; m < d_c; ++m) {
                    std::swap(s.amplitudes[m * d_t], s.amplitudes[m * d_t + target_level]);
                }
                return s;
            }
            case Lemma1Kind::AlphaTarget: {
                // |alpha> (x) |t> on (d_c, d_c, d_t), ancilla on site 0
                StateVector s = pair_state(HybridRegister({d_c, d_c, d_t}), 0, 1);
                for (std::size_t m = 0; m < d_c; ++m) {
                    const std::size_t base = m * s.reg.strides()[0] + m * s.reg.strides()[1];
                    std::swap(s.amplitudes[base], s.amplitudes[base + target_level]);
                }
                return s;
            }
            case Lemma1Kind::AlphaBeta:
                // |alpha> (x) |beta> on (d_c, d_c, d_t, d_t); the target
                // ancilla pairs with the target, so target_level plays no role.
                return double_pair_state(HybridRegister({d_c, d_c, d_t, d_t}), 0, 1, 2, 3);
        }
        throw ValidationError("lemma1: unknown experiment kind");
    }();

    const SitePlacement gate_sites{kind == Lemma1Kind::Gamma ? std::vector<std::size_t>{0, 1}
                                                             : std::vector<std::size_t>{1, 2}};
    const Bipartition cut = kind == Lemma1Kind::Gamma      ? Bipartition{{0}, {1}}
                            : kind == Lemma1Kind::AlphaTarget ? Bipartition{{0, 1}, {2}}
                                                              : Bipartition{{0, 1}, {2, 3}};

    const GateSignature gate = sum_gate(d_c, d_t);
    const StateVector out = apply(psi, gate.matrix, gate_sites);
    return Lemma1Result{entropy(schmidt_state(out, cut)), operator_entanglement(gate)};
}

std::vector<SweepRow> fig1_sweep(std::size_t dc_lo, std::size_t dc_hi,
                                 const std::vector<std::size_t>& dt_values) {
    if (dc_lo < 2 || dc_hi < dc_lo || dt_values.empty()) {
        throw RangeError("fig1_sweep: empty or invalid grid");
    }
    std::vector<SweepRow> rows;
    for (std::size_t d_t : dt_values) {
        const double log_dt = std::log2(static_cast<double>(d_t));
        for (std::size_t d_c = dc_lo; d_c <= dc_hi; ++d_c) {
            const double e = e_sum_closed_form(d_c, d_t);
            if (d_c >= d_t) {
                const double bound = log_dt * static_cast<double>(d_t) / static_cast<double>(d_c);
                if (std::abs(e - log_dt) > bound + 1e-12) {
                    throw NumericalFailure("fig1_sweep: asymptote bound violated", 0);
                }
                if (d_c % d_t == 0 && std::abs(e - log_dt) > 1e-12) {
                    throw NumericalFailure("fig1_sweep: exact multiple not at log2(d_t)", 0);
                }
            }
            rows.push_back(SweepRow{d_c, d_t, e});
        }
    }
    return rows;
}

StateVector gamma_state(const HybridRegister& reg, std::size_t site) {
    if (site >= reg.site_count()) throw RangeError("gamma_state: site out of range");
    StateVector psi{reg, std::vector<Complex>(reg.total_dimension(), Complex{})};
    const double amp = 1.0 / std::sqrt(static_cast<double>(reg.dim(site)));
    for (std::size_t m = 0; m < reg.dim(site); ++m) {
        psi.amplitudes[m * reg.strides()[site]] = amp;
    }
    return psi;
}

StateVector pair_state(const HybridRegister& reg, std::size_t site_a, std::size_t site_b) {
    if (site_a >= reg.site_count() || site_b >= reg.site_count() || site_a == site_b) {
        throw RangeError("pair_state: invalid site pair");
    }
    if (reg.dim(site_a) != reg.dim(site_b)) {
        throw DimensionError("pair_state: paired sites must have equal dimensions");
    }
    StateVector psi{reg, std::vector<Complex>(reg.total_dimension(), Complex{})};
    const double amp = 1.0 / std::sqrt(static_cast<double>(reg.dim(site_a)));
    for (std::size_t m = 0; m < reg.dim(site_a); ++m) {
        psi.amplitudes[m * reg.strides()[site_a] + m * reg.strides()[site_b]] = amp;
    }
    return psi;
}

StateVector double_pair_state(const HybridRegister& reg, std::size_t a1, std::size_t a2,
                              std::size_t b1, std::size_t b2) {
    const std::size_t ids[4] = {a1, a2, b1, b2};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (ids[i] == ids[j]) throw RangeError("double_pair_state: sites must be distinct");
    if (a1 >= reg.site_count() || a2 >= reg.site_count() || b1 >= reg.site_count() ||
        b2 >= reg.site_count()) {
        throw RangeError("double_pair_state: site out of range");
    }
    if (reg.dim(a1) != reg.dim(a2) || reg.dim(b1) != reg.dim(b2)) {
        throw DimensionError("double_pair_state: paired sites must have equal dimensions");
    }
    StateVector psi{reg, std::vector<Complex>(reg.total_dimension(), Complex{})};
    const double amp = 1.0 / std::sqrt(static_cast<double>(reg.dim(a1) * reg.dim(b1)));
    for (std::size_t m = 0; m < reg.dim(a1); ++m)
        for (std::size_t n = 0; n < reg.dim(b1); ++n) {
            psi.amplitudes[m * reg.strides()[a1] + m * reg.strides()[a2] +
                           n * reg.strides()[b1] + n * reg.strides()[b2]] = amp;
        }
    return psi;
}

}  // namespace hq
