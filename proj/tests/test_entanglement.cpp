#include <doctest.h>

#include <cmath>
#include <random>

#include "hq/entanglement.hpp"
#include "hq/errors.hpp"
#include "hq/gates.hpp"
#include "helpers.hpp"

using namespace hq;

namespace {

// log2(3) - 2/3, frozen from exact arithmetic.
constexpr double kEntropy23 = 0.9182958340544896;
// e_D(5,3): K=1, r=2 -> -2*(2/5)log2(2/5) - (1/5)log2(1/5)
constexpr double kEntropy53 = 1.5219280948873621;

double coefficient_sum(const SchmidtData& data) {
    double total = 0.0;
    for (double p : data.coefficients) total += p;
    return total;
}

}  // namespace

TEST_SUITE_BEGIN("entanglement");

TEST_CASE("schmidt_state of a product state has a single unit coefficient") {
    const HybridRegister reg({3, 2});
    const SchmidtData data = schmidt_state(basis_state(reg, {1, 0}), Bipartition{{0}, {1}});
    REQUIRE(data.coefficients.size() == 1);
    CHECK(data.coefficients[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("schmidt_state of the Bell state gives (1/2, 1/2)") {
    const HybridRegister reg({2, 2});
    const SchmidtData data = schmidt_state(pair_state(reg, 0, 1), Bipartition{{0}, {1}});
    REQUIRE(data.coefficients.size() == 2);
    CHECK(data.coefficients[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(data.coefficients[1] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("D|gamma,0> on (3,2) has coefficients (2/3, 1/3)") {
    const HybridRegister reg({3, 2});
    const StateVector out =
        apply(gamma_state(reg, 0), sum_gate(3, 2).matrix, SitePlacement{{0, 1}});
    const SchmidtData data = schmidt_state(out, Bipartition{{0}, {1}});
    REQUIRE(data.coefficients.size() == 2);
    CHECK(data.coefficients[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
    CHECK(data.coefficients[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
    CHECK(coefficient_sum(data) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("entropy values") {
    CHECK(entropy(SchmidtData{{1.0}, {}, {}}) == 0.0);
    CHECK(entropy(SchmidtData{{0.5, 0.5}, {}, {}}) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(entropy(SchmidtData{{2.0 / 3.0, 1.0 / 3.0}, {}, {}}) ==
          doctest::Approx(kEntropy23).epsilon(1e-12));
}

TEST_CASE("operator_schmidt of the identity is a single product term") {
    const GateSignature id32 = make_gate({3, 2}, ComplexMatrix::identity(6));
    const SchmidtData data = operator_schmidt(id32);
    REQUIRE(data.coefficients.size() == 1);
    CHECK(data.coefficients[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("operator_schmidt of SUM matches the projector-norm weights") {
    const SchmidtData cnot = operator_schmidt(sum_gate(2, 2));
    REQUIRE(cnot.coefficients.size() == 2);
    CHECK(cnot.coefficients[0] == doctest::Approx(0.5).epsilon(1e-10));

    // (3,2): ||Pi_s||^2 / d_c gives (2/3, 1/3) independently of the SVD route
    const SchmidtData hybrid = operator_schmidt(sum_gate(3, 2));
    REQUIRE(hybrid.coefficients.size() == 2);
    CHECK(hybrid.coefficients[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
    CHECK(hybrid.coefficients[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("schmidt factors are orthonormal") {
    const SchmidtData data = operator_schmidt(sum_gate(4, 3));
    for (std::size_t a = 0; a < data.left_factors.size(); ++a) {
        CHECK(std::abs(hs_inner(data.left_factors[a], data.left_factors[a]) - 1.0) <= 1e-9);
        CHECK(std::abs(hs_inner(data.right_factors[a], data.right_factors[a]) - 1.0) <= 1e-9);
        for (std::size_t b = a + 1; b < data.left_factors.size(); ++b) {
            CHECK(std::abs(hs_inner(data.left_factors[a], data.left_factors[b])) <= 1e-9);
            CHECK(std::abs(hs_inner(data.right_factors[a], data.right_factors[b])) <= 1e-9);
        }
    }
}

TEST_CASE("operator_entanglement special values") {
    // any A (x) B unitary has zero operator entanglement
    std::mt19937 rng(31);
    const GateSignature product =
        make_gate({3, 4}, kron(test::random_unitary(3, rng), test::random_unitary(4, rng)));
    CHECK(operator_entanglement(product) <= 1e-10);

    CHECK(operator_entanglement(sum_gate(2, 2)) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(operator_entanglement(sum_gate(5, 3)) == doctest::Approx(kEntropy53).epsilon(1e-9));
}

TEST_CASE("e_sum_closed_form special values") {
    CHECK(e_sum_closed_form(2, 3) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(e_sum_closed_form(4, 2) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(e_sum_closed_form(3, 2) == doctest::Approx(kEntropy23).epsilon(1e-13));
    CHECK(e_sum_closed_form(5, 3) == doctest::Approx(kEntropy53).epsilon(1e-13));
}

TEST_CASE("closed form agrees with the SVD oracle for dims up to 6") {
    for (std::size_t d_c = 2; d_c <= 6; ++d_c)
        for (std::size_t d_t = 2; d_t <= 6; ++d_t) {
            CHECK(std::abs(e_sum_closed_form(d_c, d_t) -
                           operator_entanglement(sum_gate(d_c, d_t))) <= 1e-9);
        }
}

TEST_CASE("divisible and d_c < d_t cases hit the logs exactly") {
    for (auto [d_c, d_t] : {std::pair<std::size_t, std::size_t>{6, 3}, {8, 2}, {9, 3}}) {
        CHECK(std::abs(e_sum_closed_form(d_c, d_t) - std::log2(double(d_t))) <= 1e-12);
    }
    for (auto [d_c, d_t] : {std::pair<std::size_t, std::size_t>{2, 5}, {3, 7}}) {
        CHECK(std::abs(e_sum_closed_form(d_c, d_t) - std::log2(double(d_c))) <= 1e-12);
    }
}

TEST_CASE("report_from summarizes the decomposition") {
    const EntanglementReport report = report_from(operator_schmidt(sum_gate(3, 2)));
    CHECK(report.schmidt_number == 2);
    CHECK(report.coefficients.size() == 2);
    CHECK(report.entropy_bits == doctest::Approx(kEntropy23).epsilon(1e-9));
    CHECK(report.entropy_bits >= 0.0);
    CHECK(report.entropy_bits <= std::log2(2.0) + 1e-12);  // min dim is d_t = 2
}

TEST_CASE("sum_params splits d_c = K d_t + r") {
    const SumEntanglementParams p = sum_params(7, 3);
    CHECK(p.quotient == 2);
    CHECK(p.remainder == 1);
    const SumEntanglementParams small = sum_params(2, 5);
    CHECK(small.quotient == 0);
    CHECK(small.remainder == 2);
}

TEST_CASE("lemma1 reference cases") {
    const Lemma1Result bell = lemma1_experiment(Lemma1Kind::Gamma, 2, 2, 0);
    CHECK(bell.generated_bits == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(bell.operator_bits == doctest::Approx(1.0).epsilon(1e-10));

    const Lemma1Result gamma32 = lemma1_experiment(Lemma1Kind::Gamma, 3, 2, 0);
    CHECK(gamma32.generated_bits == doctest::Approx(kEntropy23).epsilon(1e-9));
    CHECK(gamma32.operator_bits == doctest::Approx(kEntropy23).epsilon(1e-9));

    const Lemma1Result ab32 = lemma1_experiment(Lemma1Kind::AlphaBeta, 3, 2, 0);
    CHECK(ab32.generated_bits == doctest::Approx(kEntropy23).epsilon(1e-9));
    CHECK(ab32.operator_bits == doctest::Approx(kEntropy23).epsilon(1e-9));
}

TEST_CASE("lemma1 equality holds across kinds, dims <= 4, all t") {
    for (std::size_t d_c = 2; d_c <= 4; ++d_c)
        for (std::size_t d_t = 2; d_t <= 4; ++d_t)
            for (std::size_t t = 0; t < d_t; ++t)
                for (Lemma1Kind kind :
                     {Lemma1Kind::Gamma, Lemma1Kind::AlphaTarget, Lemma1Kind::AlphaBeta}) {
                    const Lemma1Result r = lemma1_experiment(kind, d_c, d_t, t);
                    CHECK(std::abs(r.generated_bits - r.operator_bits) <= 1e-9);
                }
}

TEST_CASE("entropy is invariant under local unitaries") {
    std::mt19937 rng(37);
    for (auto [da, db] : {std::pair<std::size_t, std::size_t>{2, 3}, {4, 5}}) {
        const HybridRegister reg({da, db});
        StateVector psi{reg, std::vector<Complex>(reg.total_dimension())};
        std::normal_distribution<double> gauss;
        for (Complex& a : psi.amplitudes) a = Complex{gauss(rng), gauss(rng)};
        const double norm = psi.norm();
        for (Complex& a : psi.amplitudes) a /= norm;

        const double before = entropy(schmidt_state(psi, Bipartition{{0}, {1}}));
        StateVector rotated = apply(psi, test::random_unitary(da, rng), SitePlacement{{0}});
        rotated = apply(rotated, test::random_unitary(db, rng), SitePlacement{{1}});
        const double after = entropy(schmidt_state(rotated, Bipartition{{0}, {1}}));
        CHECK(std::abs(before - after) <= 1e-9);
    }
}

TEST_CASE("every SchmidtData sums to one") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 5; ++trial) {
        const std::size_t da = 2 + trial % 3, db = 2 + (trial + 1) % 3;
        const GateSignature gate =
            make_gate({da, db}, test::random_unitary(da * db, rng));
        CHECK(coefficient_sum(operator_schmidt(gate)) == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("fig1_sweep spot values and asymptote") {
    const std::vector<SweepRow> rows = fig1_sweep(2, 64, {2});
    for (const SweepRow& row : rows) {
        if (row.d_c % 2 == 0) {
            CHECK(std::abs(row.entanglement_bits - 1.0) <= 1e-12);
        }
    }

    const std::vector<SweepRow> small = fig1_sweep(3, 3, {4});
    CHECK(small[0].entanglement_bits == doctest::Approx(std::log2(3.0)).epsilon(1e-12));

    const std::vector<SweepRow> large = fig1_sweep(101, 101, {2});
    CHECK(std::abs(large[0].entanglement_bits - 1.0) <= 0.001);
}

TEST_CASE("partition errors") {
    const HybridRegister reg({2, 2});
    const StateVector psi = basis_state(reg, {0, 0});
    CHECK_THROWS_AS((void)schmidt_state(psi, Bipartition{{}, {0, 1}}), PartitionError);
    CHECK_THROWS_AS((void)schmidt_state(psi, Bipartition{{0}, {0, 1}}), PartitionError);
    CHECK_THROWS_AS((void)schmidt_state(psi, Bipartition{{0}, {0}}), PartitionError);
}

TEST_CASE("operator_schmidt rejects non-two-site gates") {
    CHECK_THROWS_AS((void)operator_schmidt(toffoli(2, 2, 2)), ShapeError);
}

TEST_SUITE_END();
