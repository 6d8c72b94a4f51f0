#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hq/register.hpp"

namespace hq {

/// Parse or validation diagnostic; line and column are 1-based and always
/// point inside the source text.
struct ParseError {
    int line = 0;
    int column = 0;
    std::string message;
    std::string offending_token;

    std::string render() const;
};

struct StateDirective {
    enum class Kind { Basis, Gamma, Alpha, Beta };
    Kind kind = Kind::Basis;
    std::vector<std::size_t> digits;  // Basis
    std::vector<std::size_t> sites;   // Alpha: {partner}; Beta: {pair_a, pair_b}
    int line = 0, column = 0;
};

struct GateStep {
    std::string gate_id;
    std::vector<std::size_t> sites;
    int line = 0, column = 0;
};

struct AnalysisDirective {
    enum class Kind { EntropyCut, OperatorEntanglement, PauliConjugation };
    Kind kind = Kind::EntropyCut;
    std::vector<std::size_t> left, right;  // EntropyCut
    std::string gate_id;                   // PauliConjugation
    std::vector<std::size_t> sites;        // PauliConjugation
    int line = 0, column = 0;
};

/// Parsed circuit: register declaration, one initial-state directive (default
/// |0...0>), the gate sequence, and analysis directives evaluated on the
/// final state.
struct CircuitProgram {
    HybridRegister reg;
    std::vector<std::string> site_names;
    StateDirective initial;
    std::vector<GateStep> steps;
    std::vector<AnalysisDirective> analyses;
};

struct ParseResult {
    std::optional<CircuitProgram> program;
    std::optional<ParseError> error;

    bool ok() const { return program.has_value(); }
};

/// Recursive-descent parse of the .hqc language. Grammar:
///   program   := line*
///   line      := register | state | gate | analyze | comment | blank
///   register  := "register" (NAME ":" INT)+
///   state     := "state" ("basis" INT+ | "gamma" | "alpha" NAME | "beta" NAME NAME)
///   gate      := "gate" GATEID NAME+
///   analyze   := "measure" ("entropy" cut | "opent" | "pauli" GATEID NAME+)
///   cut       := NAME+ "|" NAME+
///   comment   := "#" any
/// Site names bind to indices in declaration order; duplicates are errors.
ParseResult parse(const std::string& source);

/// Dimensional legality checks deferred past parsing: basis digit ranges,
/// paired-site dimension equality, cut completeness, analysis arity.
std::optional<ParseError> validate(const CircuitProgram& program);

/// Canonical text form; parse(pretty_print(p)) reproduces p.
std::string pretty_print(const CircuitProgram& program);

/// Gate ids the DSL accepts, each with its site arity.
const std::vector<std::pair<std::string, std::size_t>>& dsl_gate_arities();

/// Arity of a DSL gate id, or nullopt for unknown ids.
std::optional<std::size_t> dsl_gate_arity(const std::string& gate_id);

}  // namespace hq
