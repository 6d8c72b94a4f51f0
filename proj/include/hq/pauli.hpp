#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hq/gates.hpp"
#include "hq/matrix.hpp"
#include "hq/register.hpp"

namespace hq {

/// One generalized Pauli element zeta-phase * (x)_i X_i^{j_i} Z_i^{k_i},
/// with exponents reduced mod the site dimension.
struct PauliLabel {
    struct SiteExponents {
        std::size_t x = 0;  // j_i
        std::size_t z = 0;  // k_i
    };
    std::vector<SiteExponents> sites;
    Complex global_phase{1.0, 0.0};
};

std::string label_to_string(const PauliLabel& label);

/// Result of the brute-force Pauli membership search. `residual` is the
/// best-overlap defect d_c*d_t - max |tr(P^dagger q)|; members have
/// residual <= 1e-9 and a recovered label.
struct MembershipVerdict {
    bool is_member = false;
    std::optional<PauliLabel> label;
    double residual = 0.0;
};

/// global_phase * (x)_i X_i^{j_i} Z_i^{k_i} on the register.
ComplexMatrix pauli_matrix(const PauliLabel& label, const HybridRegister& reg);

/// G * P * G^dagger.
ComplexMatrix conjugate(const GateSignature& gate, const ComplexMatrix& p);

/// Scans all exponent tuples on a two-site register; q is a Pauli element
/// (up to an arbitrary unit global phase) iff some candidate P reaches
/// |tr(P^dagger q)| = d_c*d_t within 1e-9. Ties resolve to the first
/// candidate in lexicographic (j1,k1,j2,k2) order.
MembershipVerdict pauli_membership(const ComplexMatrix& q, const HybridRegister& reg);

/// Conjugation of one Pauli-group generator by the SUM gate.
struct GeneratorImage {
    std::string generator;   // "X(x)I", "I(x)X", "Z(x)I", "I(x)Z"
    PauliLabel input;
    MembershipVerdict verdict;
};

/// Automorphism checker output. `automorphism` holds iff all four generator images
/// stay in the Pauli group, and must equal `divisible` (d_c mod d_t == 0).
/// The printed summary-line image of Z(x)I in the source is Z(x)X, but the
/// derivation yields Z(x)I; `control_z_image` records what the numerics give.
struct Lemma2Report {
    std::size_t d_c = 0;
    std::size_t d_t = 0;
    std::array<GeneratorImage, 4> generators;
    bool automorphism = false;
    bool divisible = false;
    bool matches_expectation = false;
    // D21 (control and target roles swapped) conjugates the same generators;
    // it leaves the Clifford family once d_c/d_t = K >= 2.
    bool d21_automorphism = false;
    std::string control_z_image;
};

Lemma2Report lemma2_check(std::size_t d_c, std::size_t d_t);

}  // namespace hq
