#pragma once

#include <cstddef>
#include <vector>

#include "hq/gates.hpp"
#include "hq/matrix.hpp"
#include "hq/register.hpp"

namespace hq {

/// Schmidt coefficients below this are dropped before entropies are taken.
constexpr double kSchmidtCutoff = 1e-12;

/// Schmidt data for a state (factors are column vectors) or an operator
/// (factors are matrices with unit Hilbert-Schmidt norm). Coefficients are
/// probabilities: descending, positive, summing to 1.
struct SchmidtData {
    std::vector<double> coefficients;
    std::vector<ComplexMatrix> left_factors;
    std::vector<ComplexMatrix> right_factors;
};

struct EntanglementReport {
    double entropy_bits = 0.0;
    std::size_t schmidt_number = 0;
    std::vector<double> coefficients;
};

/// Quotient/remainder split d_c = K*d_t + r entering the SUM gate's closed
/// form; K = 0 and r = d_c when d_c < d_t.
struct SumEntanglementParams {
    std::size_t d_c = 0;
    std::size_t d_t = 0;
    std::size_t quotient = 0;   // K
    std::size_t remainder = 0;  // r
};

SumEntanglementParams sum_params(std::size_t d_c, std::size_t d_t);

/// Two complementary groups of site indices.
struct Bipartition {
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
};

/// Schmidt decomposition of a normalized state across `cut`, which must split
/// every site into two non-empty groups.
SchmidtData schmidt_state(const StateVector& psi, const Bipartition& cut);

/// von Neumann entropy -sum p log2 p (bits), with 0 log 0 = 0.
double entropy(const SchmidtData& data);

/// Operator Schmidt decomposition of a two-site gate via realignment + SVD;
/// coefficients are s_n^2 / (d_c d_t) for a unitary input.
SchmidtData operator_schmidt(const GateSignature& gate);

/// Entropy of operator_schmidt(gate), in bits.
double operator_entanglement(const GateSignature& gate);

/// Closed-form operator entanglement of the SUM gate on (d_c, d_t):
///   -r (K+1)/d_c log2((K+1)/d_c) - (d_t - r) K/d_c log2(K/d_c)
/// which reduces to log2(d_c) for d_c < d_t.
double e_sum_closed_form(std::size_t d_c, std::size_t d_t);

EntanglementReport report_from(const SchmidtData& data);

enum class Lemma1Kind { Gamma, AlphaTarget, AlphaBeta };

struct Lemma1Result {
    double generated_bits = 0.0;
    double operator_bits = 0.0;
};

/// Runs one of the three entanglement-generation experiments: the SUM gate on
/// |gamma>|t>, on |alpha>|t> with a control-side ancilla, or on |alpha>|beta>
/// with ancillas on both sides. The generated entropy must match the gate's
/// operator entanglement.
Lemma1Result lemma1_experiment(Lemma1Kind kind, std::size_t d_c, std::size_t d_t,
                               std::size_t target_level);

struct SweepRow {
    std::size_t d_c = 0;
    std::size_t d_t = 0;
    double entanglement_bits = 0.0;
};

/// Closed-form table over the given grid, d_t-major then d_c ascending. Each
/// row with d_c >= d_t is verified against the asymptote
/// |E - log2 d_t| <= log2(d_t) * d_t / d_c, with equality to log2 d_t at
/// exact multiples.
std::vector<SweepRow> fig1_sweep(std::size_t dc_lo, std::size_t dc_hi,
                                 const std::vector<std::size_t>& dt_values);

/// Uniform superposition on `site`, |0> on all other sites.
StateVector gamma_state(const HybridRegister& reg, std::size_t site);

/// Maximally entangled pair (1/sqrt d) sum_m |m>_a |m>_b, |0> elsewhere;
/// requires equal dimensions on the two sites.
StateVector pair_state(const HybridRegister& reg, std::size_t site_a, std::size_t site_b);

/// Two disjoint maximally entangled pairs, |0> elsewhere.
StateVector double_pair_state(const HybridRegister& reg, std::size_t a1, std::size_t a2,
                              std::size_t b1, std::size_t b2);

}  // namespace hq
