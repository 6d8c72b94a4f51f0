#include "hq/pauli.hpp"

#include <cmath>

#include "hq/errors.hpp"

namespace hq {

namespace {

constexpr double kMembershipTol = 1e-9;

ComplexMatrix site_pauli(std::size_t d, std::size_t x_exp, std::size_t z_exp) {
    // X^j Z^k in one pass: column s carries zeta^{k s} at row s+j.
    ComplexMatrix m(d, d);
    for (std::size_t s = 0; s < d; ++s) {
        m((s + x_exp) % d, s) = root_of_unity(d, static_cast<long long>(z_exp * s));
    }
    return m;
}

}  // namespace

std::string label_to_string(const PauliLabel& label) {
    std::string out;
    for (std::size_t i = 0; i < label.sites.size(); ++i) {
        if (i > 0) out += " (x) ";
        const auto& site = label.sites[i];
        if (site.x == 0 && site.z == 0) {
            out += "I";
            continue;
        }
        if (site.x > 0) out += site.x == 1 ? "X" : "X^" + std::to_string(site.x);
        if (site.z > 0) {
            if (site.x > 0) out += " ";
            out += site.z == 1 ? "Z" : "Z^" + std::to_string(site.z);
        }
    }
    return out;
}

ComplexMatrix pauli_matrix(const PauliLabel& label, const HybridRegister& reg) {
    if (label.sites.size() != reg.site_count()) {
        throw RangeError("pauli_matrix: label does not cover the register");
    }
    ComplexMatrix result(1, 1);
    result(0, 0) = label.global_phase;
    for (std::size_t i = 0; i < reg.site_count(); ++i) {
        const std::size_t d = reg.dim(i);
        if (label.sites[i].x >= d || label.sites[i].z >= d) {
            throw RangeError("pauli_matrix: exponent out of range at site " + std::to_string(i));
        }
        result = kron(result, site_pauli(d, label.sites[i].x, label.sites[i].z));
    }
    return result;
}

ComplexMatrix conjugate(const GateSignature& gate, const ComplexMatrix& p) {
    if (!p.is_square() || p.rows() != gate.dimension()) {
        throw ShapeError("conjugate: operator dimension does not match the gate");
    }
    return gate.matrix * p * dagger(gate.matrix);
}

MembershipVerdict pauli_membership(const ComplexMatrix& q, const HybridRegister& reg) {
    if (reg.site_count() != 2) {
        throw RangeError("pauli_membership: register must have exactly two sites");
    }
    if (!is_unitary(q, kUnitarityTol)) {
        throw ValidationError("pauli_membership: input is not unitary");
    }
    const std::size_t d_c = reg.dim(0);
    const std::size_t d_t = reg.dim(1);
    const double full = static_cast<double>(d_c * d_t);

    double best = -1.0;
    PauliLabel best_label;
    Complex best_overlap{0.0, 0.0};
    for (std::size_t j1 = 0; j1 < d_c; ++j1)
        for (std::size_t k1 = 0; k1 < d_c; ++k1) {
            const ComplexMatrix left = site_pauli(d_c, j1, k1);
            for (std::size_t j2 = 0; j2 < d_t; ++j2)
                for (std::size_t k2 = 0; k2 < d_t; ++k2) {
                    const ComplexMatrix candidate = kron(left, site_pauli(d_t, j2, k2));
                    const Complex overlap = hs_inner(candidate, q);
                    if (std::abs(overlap) > best) {
                        best = std::abs(overlap);
                        best_overlap = overlap;
                        best_label = PauliLabel{{{j1, k1}, {j2, k2}}, Complex{1.0, 0.0}};
                    }
                }
        }

    MembershipVerdict verdict;
    verdict.residual = full - best;
    verdict.is_member = verdict.residual <= kMembershipTol;
    if (verdict.is_member) {
        best_label.global_phase = best_overlap / full;
        verdict.label = best_label;
    }
    return verdict;
}

Lemma2Report lemma2_check(std::size_t d_c, std::size_t d_t) {
    const HybridRegister reg({d_c, d_t});
    const GateSignature d12 = sum_gate(d_c, d_t);

    const std::array<std::pair<std::string, PauliLabel>, 4> generators{{
        {"X(x)I", PauliLabel{{{1, 0}, {0, 0}}, Complex{1.0, 0.0}}},
        {"I(x)X", PauliLabel{{{0, 0}, {1, 0}}, Complex{1.0, 0.0}}},
        {"Z(x)I", PauliLabel{{{0, 1}, {0, 0}}, Complex{1.0, 0.0}}},
        {"I(x)Z", PauliLabel{{{0, 0}, {0, 1}}, Complex{1.0, 0.0}}},
    }};

    Lemma2Report report;
    report.d_c = d_c;
    report.d_t = d_t;
    report.divisible = d_c % d_t == 0;

    bool all_members = true;
    for (std::size_t g = 0; g < generators.size(); ++g) {
        const ComplexMatrix image = conjugate(d12, pauli_matrix(generators[g].second, reg));
        GeneratorImage entry;
        entry.generator = generators[g].first;
        entry.input = generators[g].second;
        entry.verdict = pauli_membership(image, reg);
        all_members = all_members && entry.verdict.is_member;
        if (g == 2 && entry.verdict.is_member && entry.verdict.label) {
            report.control_z_image = label_to_string(*entry.verdict.label);
        }
        report.generators[g] = std::move(entry);
    }
    report.automorphism = all_members;
    report.matches_expectation = report.automorphism == report.divisible;

    // Role-swapped SUM on the same register: control on site 1, target site 0.
    const ComplexMatrix d21 = embed(sum_gate(d_t, d_c).matrix, reg, SitePlacement{{1, 0}});
    const GateSignature d21_gate = make_gate({d_c, d_t}, d21);
    bool d21_members = true;
    for (const auto& [name, label] : generators) {
        const ComplexMatrix image = conjugate(d21_gate, pauli_matrix(label, reg));
        d21_members = d21_members && pauli_membership(image, reg).is_member;
    }
    report.d21_automorphism = d21_members;
    return report;
}

}  // namespace hq
