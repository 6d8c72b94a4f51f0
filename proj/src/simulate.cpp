#include "hq/simulate.hpp"

#include <string>

#include "hq/entanglement.hpp"
#include "hq/errors.hpp"
#include "hq/realization.hpp"

namespace hq {

GateSignature gate_by_name(const std::string& gate_id, const std::vector<std::size_t>& dims) {
    const auto arity = dsl_gate_arity(gate_id);
    if (!arity) throw ValidationError("unknown gate id: " + gate_id);
    if (dims.size() != *arity) {
        throw ValidationError("gate " + gate_id + " expects " + std::to_string(*arity) +
                              " dimension(s)");
    }
    if (gate_id == "X") return pauli_x(dims[0]);
    if (gate_id == "Z") return pauli_z(dims[0]);
    if (gate_id == "F") return fourier(dims[0]);
    if (gate_id == "SUM") return sum_gate(dims[0], dims[1]);
    if (gate_id == "SUMP") return sum_prime(dims[0], dims[1]);
    if (gate_id == "PSWAP") return partial_swap(dims[0], dims[1], std::min(dims[0], dims[1]));
    if (gate_id == "SWAP3") return swap_via_sums(dims[0], dims[1]);
    if (gate_id == "TOFFOLI") return toffoli(dims[0], dims[1], dims[2]);
    if (gate_id == "FREDKIN") return fredkin(dims[0], dims[1], dims[2]);
    if (gate_id == "CPHASE") return controlled_phase(dims[0], dims[1]);
    throw ValidationError("unknown gate id: " + gate_id);
}

namespace {

std::vector<std::size_t> site_dims(const HybridRegister& reg,
                                   const std::vector<std::size_t>& sites) {
    std::vector<std::size_t> dims;
    dims.reserve(sites.size());
    for (std::size_t s : sites) dims.push_back(reg.dim(s));
    return dims;
}

StateVector initial_state(const CircuitProgram& program) {
    const StateDirective& init = program.initial;
    switch (init.kind) {
        case StateDirective::Kind::Basis:
            return basis_state(program.reg, init.digits);
        case StateDirective::Kind::Gamma:
            return gamma_state(program.reg, 0);
        case StateDirective::Kind::Alpha:
            return pair_state(program.reg, 0, init.sites[0]);
        case StateDirective::Kind::Beta:
            return double_pair_state(program.reg, 0, 1, init.sites[0], init.sites[1]);
    }
    throw ValidationError("unknown state directive");
}

}  // namespace

RunResult run_program(const CircuitProgram& program) {
    StateVector state = initial_state(program);
    for (const GateStep& step : program.steps) {
        const GateSignature gate = gate_by_name(step.gate_id, site_dims(program.reg, step.sites));
        state = apply(state, gate.matrix, SitePlacement{step.sites});
    }

    RunResult result{std::move(state), {}};
    for (const AnalysisDirective& a : program.analyses) {
        switch (a.kind) {
            case AnalysisDirective::Kind::EntropyCut: {
                const SchmidtData schmidt =
                    schmidt_state(result.state, Bipartition{a.left, a.right});
                result.analyses.push_back(EntropyResult{a.left, a.right, entropy(schmidt)});
                break;
            }
            case AnalysisDirective::Kind::OperatorEntanglement: {
                // Accumulated circuit unitary across the site0 | site1 split.
                ComplexMatrix circuit = ComplexMatrix::identity(program.reg.total_dimension());
                for (const GateStep& step : program.steps) {
                    const GateSignature gate =
                        gate_by_name(step.gate_id, site_dims(program.reg, step.sites));
                    circuit = embed(gate.matrix, program.reg, SitePlacement{step.sites}) * circuit;
                }
                const GateSignature whole = make_gate(program.reg.dims(), std::move(circuit));
                result.analyses.push_back(OperatorEntanglementResult{operator_entanglement(whole)});
                break;
            }
            case AnalysisDirective::Kind::PauliConjugation: {
                const std::vector<std::size_t> dims = site_dims(program.reg, a.sites);
                const GateSignature gate = gate_by_name(a.gate_id, dims);
                const HybridRegister sub(dims);
                PauliConjugationResult pauli_result;
                pauli_result.gate_id = a.gate_id;
                pauli_result.sites = a.sites;
                pauli_result.automorphism = true;
                const std::array<std::pair<std::string, PauliLabel>, 4> generators{{
                    {"X(x)I", PauliLabel{{{1, 0}, {0, 0}}, Complex{1.0, 0.0}}},
                    {"I(x)X", PauliLabel{{{0, 0}, {1, 0}}, Complex{1.0, 0.0}}},
                    {"Z(x)I", PauliLabel{{{0, 1}, {0, 0}}, Complex{1.0, 0.0}}},
                    {"I(x)Z", PauliLabel{{{0, 0}, {0, 1}}, Complex{1.0, 0.0}}},
                }};
                for (const auto& [name, label] : generators) {
                    GeneratorImage image;
                    image.generator = name;
                    image.input = label;
                    image.verdict =
                        pauli_membership(conjugate(gate, pauli_matrix(label, sub)), sub);
                    pauli_result.automorphism =
                        pauli_result.automorphism && image.verdict.is_member;
                    pauli_result.images.push_back(std::move(image));
                }
                result.analyses.push_back(std::move(pauli_result));
                break;
            }
        }
    }
    return result;
}

}  // namespace hq
