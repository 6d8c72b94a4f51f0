#pragma once

#include <string>
#include <variant>
#include <vector>

#include "hq/dsl.hpp"
#include "hq/gates.hpp"
#include "hq/pauli.hpp"
#include "hq/register.hpp"

namespace hq {

/// Builds the gate a DSL id denotes on the given site dimensions. PSWAP and
/// FREDKIN use the maximal partial-swap cutoff. Throws ValidationError for
/// unknown ids or wrong arity.
GateSignature gate_by_name(const std::string& gate_id, const std::vector<std::size_t>& dims);

struct EntropyResult {
    std::vector<std::size_t> left, right;
    double bits = 0.0;
};

struct OperatorEntanglementResult {
    double bits = 0.0;
};

struct PauliConjugationResult {
    std::string gate_id;
    std::vector<std::size_t> sites;
    std::vector<GeneratorImage> images;
    bool automorphism = false;
};

using AnalysisOutcome = std::variant<EntropyResult, OperatorEntanglementResult,
                                     PauliConjugationResult>;

struct RunResult {
    StateVector state;
    std::vector<AnalysisOutcome> analyses;
};

/// Executes a validated program: prepares the initial state, applies the gate
/// sequence, then evaluates every analysis directive on the final state (or,
/// for opent, on the accumulated circuit unitary).
RunResult run_program(const CircuitProgram& program);

}  // namespace hq
