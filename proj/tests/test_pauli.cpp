#include <doctest.h>

#include <cmath>
#include <random>

#include "hq/errors.hpp"
#include "hq/gates.hpp"
#include "hq/pauli.hpp"
#include "helpers.hpp"

using namespace hq;

namespace {

PauliLabel two_site(std::size_t j1, std::size_t k1, std::size_t j2, std::size_t k2,
                    Complex phase = Complex{1.0, 0.0}) {
    return PauliLabel{{{j1, k1}, {j2, k2}}, phase};
}

// Power-trace moments determine the eigenvalue multiset of a unitary.
bool spectra_match(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    ComplexMatrix pa = ComplexMatrix::identity(a.rows());
    ComplexMatrix pb = ComplexMatrix::identity(b.rows());
    for (std::size_t k = 1; k <= a.rows(); ++k) {
        pa = pa * a;
        pb = pb * b;
        if (std::abs(trace(pa) - trace(pb)) > tol) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE_BEGIN("pauli");

TEST_CASE("pauli_matrix basics") {
    const HybridRegister reg({3, 2});
    CHECK(max_abs_diff(pauli_matrix(two_site(0, 0, 0, 0), reg), ComplexMatrix::identity(6)) <=
          1e-15);

    // XZ at d=2 is [[0,-1],[1,0]]
    const HybridRegister qubit({2});
    ComplexMatrix xz(2, 2);
    xz(0, 1) = -1.0;
    xz(1, 0) = 1.0;
    CHECK(max_abs_diff(pauli_matrix(PauliLabel{{{1, 1}}, Complex{1.0, 0.0}}, qubit), xz) <= 1e-15);

    CHECK(max_abs_diff(pauli_matrix(two_site(1, 0, 0, 1), reg),
                       kron(pauli_x(3).matrix, pauli_z(2).matrix)) <= 1e-15);

    CHECK_THROWS_AS((void)pauli_matrix(two_site(3, 0, 0, 0), reg), RangeError);
}

TEST_CASE("pauli_matrix composition respects the commutation relation per site") {
    for (std::size_t d = 2; d <= 8; ++d) {
        const HybridRegister reg({d});
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                const ComplexMatrix zjxk =
                    pauli_matrix(PauliLabel{{{0, j}}, Complex{1.0, 0.0}}, reg) *
                    pauli_matrix(PauliLabel{{{k, 0}}, Complex{1.0, 0.0}}, reg);
                const ComplexMatrix xkzj =
                    pauli_matrix(PauliLabel{{{k, j}}, Complex{1.0, 0.0}}, reg);
                CHECK(max_abs_diff(zjxk, root_of_unity(d, static_cast<long long>(j * k)) * xkzj) <=
                      1e-10);
            }
    }
}

TEST_CASE("conjugation reproduces the SUM commutation table") {
    // D(X (x) I)D^dagger = X (x) X
    const HybridRegister reg22({2, 2});
    CHECK(max_abs_diff(conjugate(sum_gate(2, 2), pauli_matrix(two_site(1, 0, 0, 0), reg22)),
                       pauli_matrix(two_site(1, 0, 1, 0), reg22)) <= 1e-10);

    // D(I (x) X)D^dagger = I (x) X at (3,2)
    const HybridRegister reg32({3, 2});
    CHECK(max_abs_diff(conjugate(sum_gate(3, 2), pauli_matrix(two_site(0, 0, 1, 0), reg32)),
                       pauli_matrix(two_site(0, 0, 1, 0), reg32)) <= 1e-10);

    // D(I (x) Z)D^dagger = Z^{-K} (x) Z at (4,2), K = 2 so Z^{-2} = Z^2
    const HybridRegister reg42({4, 2});
    CHECK(max_abs_diff(conjugate(sum_gate(4, 2), pauli_matrix(two_site(0, 0, 0, 1), reg42)),
                       pauli_matrix(two_site(0, 2, 0, 1), reg42)) <= 1e-10);
}

TEST_CASE("conjugate preserves the spectrum") {
    std::mt19937 rng(43);
    const HybridRegister reg({3, 2});
    const ComplexMatrix p = pauli_matrix(two_site(1, 2, 1, 1), reg);
    CHECK(spectra_match(p, conjugate(sum_gate(3, 2), p), 1e-8));
    CHECK(is_unitary(conjugate(sum_gate(3, 2), p), 1e-10));
}

TEST_CASE("membership identifies plain Pauli elements") {
    const HybridRegister reg({3, 2});
    const MembershipVerdict v =
        pauli_membership(pauli_matrix(two_site(1, 0, 0, 1), reg), reg);
    REQUIRE(v.is_member);
    CHECK(v.label->sites[0].x == 1);
    CHECK(v.label->sites[0].z == 0);
    CHECK(v.label->sites[1].x == 0);
    CHECK(v.label->sites[1].z == 1);
    CHECK(std::abs(v.label->global_phase - Complex{1.0, 0.0}) <= 1e-9);
    CHECK(v.residual <= 1e-9);
}

TEST_CASE("membership rejects the (3,2) conjugated target Z") {
    const HybridRegister reg({3, 2});
    const ComplexMatrix image =
        conjugate(sum_gate(3, 2), pauli_matrix(two_site(0, 0, 0, 1), reg));
    const MembershipVerdict v = pauli_membership(image, reg);
    CHECK_FALSE(v.is_member);
    CHECK(v.residual > 1e-3);
}

TEST_CASE("membership accepts the (6,3) conjugated target Z with control Z^{-2}") {
    const HybridRegister reg({6, 3});
    const ComplexMatrix image =
        conjugate(sum_gate(6, 3), pauli_matrix(two_site(0, 0, 0, 1), reg));
    const MembershipVerdict v = pauli_membership(image, reg);
    REQUIRE(v.is_member);
    CHECK(v.label->sites[0].x == 0);
    CHECK(v.label->sites[0].z == 4);  // -2 mod 6
    CHECK(v.label->sites[1].x == 0);
    CHECK(v.label->sites[1].z == 1);
}

TEST_CASE("membership roundtrip recovers random labels exactly") {
    std::mt19937 rng(47);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979);
    for (auto [d_c, d_t] : {std::pair<std::size_t, std::size_t>{2, 2}, {3, 2}, {4, 5}}) {
        const HybridRegister reg({d_c, d_t});
        for (int trial = 0; trial < 8; ++trial) {
            const PauliLabel label =
                two_site(rng() % d_c, rng() % d_c, rng() % d_t, rng() % d_t,
                         std::polar(1.0, angle(rng)));
            const MembershipVerdict v = pauli_membership(pauli_matrix(label, reg), reg);
            REQUIRE(v.is_member);
            CHECK(v.label->sites[0].x == label.sites[0].x);
            CHECK(v.label->sites[0].z == label.sites[0].z);
            CHECK(v.label->sites[1].x == label.sites[1].x);
            CHECK(v.label->sites[1].z == label.sites[1].z);
            CHECK(std::abs(v.label->global_phase - label.global_phase) <= 1e-9);
        }
    }
}

TEST_CASE("membership validates its input") {
    const HybridRegister reg({2, 2});
    ComplexMatrix bad(4, 4);
    bad(0, 0) = 2.0;
    CHECK_THROWS_AS((void)pauli_membership(bad, reg), ValidationError);
}

TEST_CASE("lemma2 verdicts at reference dimensions") {
    const Lemma2Report cnot = lemma2_check(2, 2);
    CHECK(cnot.automorphism);
    CHECK(cnot.divisible);
    CHECK(cnot.matches_expectation);
    CHECK(cnot.d21_automorphism);  // K = 1: both directions Clifford

    const Lemma2Report hybrid = lemma2_check(3, 2);
    CHECK_FALSE(hybrid.automorphism);
    CHECK_FALSE(hybrid.divisible);
    CHECK(hybrid.matches_expectation);

    const Lemma2Report divisible = lemma2_check(4, 2);
    CHECK(divisible.automorphism);
    CHECK(divisible.matches_expectation);
    REQUIRE(divisible.generators[3].verdict.is_member);
    CHECK(divisible.generators[3].verdict.label->sites[0].z == 2);  // Z^{-2} on d_c=4
    CHECK(divisible.generators[3].verdict.label->sites[1].z == 1);
    CHECK_FALSE(divisible.d21_automorphism);  // K = 2 breaks the swapped direction

    // The derivation gives Z (x) I for the control-Z generator.
    REQUIRE(divisible.generators[2].verdict.is_member);
    CHECK(divisible.generators[2].verdict.label->sites[0].x == 0);
    CHECK(divisible.generators[2].verdict.label->sites[0].z == 1);
    CHECK(divisible.generators[2].verdict.label->sites[1].x == 0);
    CHECK(divisible.generators[2].verdict.label->sites[1].z == 0);
}

TEST_CASE("lemma2 verdict equals divisibility for all dims <= 6") {
    for (std::size_t d_c = 2; d_c <= 6; ++d_c)
        for (std::size_t d_t = 2; d_t <= 6; ++d_t) {
            const Lemma2Report report = lemma2_check(d_c, d_t);
            CHECK(report.automorphism == (d_c % d_t == 0));
            CHECK(report.matches_expectation);
        }
}

TEST_SUITE_END();
