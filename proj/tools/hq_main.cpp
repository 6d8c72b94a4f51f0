#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hq/dsl.hpp"
#include "hq/entanglement.hpp"
#include "hq/errors.hpp"
#include "hq/pauli.hpp"
#include "hq/simulate.hpp"

namespace {

using hq::Complex;
using hq::ComplexMatrix;

// "%.12g" rendering keeps CSV and report output byte-stable across runs.
std::string fmt(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return std::string(buf);
}

std::string fmt(const Complex& value) { return fmt(value.real()) + " " + fmt(value.imag()); }

void print_matrix(const ComplexMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            std::cout << (c == 0 ? "" : "  ") << "(" << fmt(m(r, c).real()) << ","
                      << fmt(m(r, c).imag()) << ")";
        }
        std::cout << "\n";
    }
}

bool parse_range(const std::string& text, std::size_t& lo, std::size_t& hi) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) return false;
    try {
        lo = std::stoull(text.substr(0, colon));
        hi = std::stoull(text.substr(colon + 1));
    } catch (const std::exception&) {
        return false;
    }
    return lo >= 2 && hi >= lo;
}

bool parse_list(const std::string& text, std::vector<std::size_t>& values) {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            const std::size_t v = std::stoull(tok);
            if (v < 2) return false;
            values.push_back(v);
        } catch (const std::exception&) {
            return false;
        }
    }
    return !values.empty();
}

std::string digits_string(const std::vector<std::size_t>& digits) {
    std::string out = "(";
    for (std::size_t i = 0; i < digits.size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(digits[i]);
    }
    return out + ")";
}

nlohmann::json label_json(const hq::PauliLabel& label) {
    nlohmann::json sites = nlohmann::json::array();
    for (const auto& s : label.sites) sites.push_back({{"x", s.x}, {"z", s.z}});
    return {{"sites", sites},
            {"phase_re", label.global_phase.real()},
            {"phase_im", label.global_phase.imag()}};
}

int cmd_simulate(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return 2;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    const hq::ParseResult parsed = hq::parse(buffer.str());
    if (!parsed.ok()) {
        std::cerr << path << ": " << parsed.error->render() << "\n";
        return 1;
    }
    if (const auto err = hq::validate(*parsed.program)) {
        std::cerr << path << ": " << err->render() << "\n";
        return 1;
    }

    const hq::RunResult result = hq::run_program(*parsed.program);
    const hq::HybridRegister& reg = result.state.reg;
    std::cout << "register:";
    for (std::size_t i = 0; i < reg.site_count(); ++i) {
        std::cout << " " << parsed.program->site_names[i] << ":" << reg.dim(i);
    }
    std::cout << "\nfinal amplitudes (index, digits, re, im):\n";
    for (std::size_t idx = 0; idx < result.state.amplitudes.size(); ++idx) {
        std::cout << "  " << idx << "  " << digits_string(reg.digits_of(idx)) << "  "
                  << fmt(result.state.amplitudes[idx]) << "\n";
    }

    std::size_t counter = 0;
    for (const hq::AnalysisOutcome& outcome : result.analyses) {
        ++counter;
        std::cout << "analysis " << counter << ": ";
        if (const auto* e = std::get_if<hq::EntropyResult>(&outcome)) {
            std::cout << "entropy";
            for (std::size_t s : e->left) std::cout << " " << parsed.program->site_names[s];
            std::cout << " |";
            for (std::size_t s : e->right) std::cout << " " << parsed.program->site_names[s];
            std::cout << " = " << fmt(e->bits) << " bits\n";
        } else if (const auto* o = std::get_if<hq::OperatorEntanglementResult>(&outcome)) {
            std::cout << "operator entanglement = " << fmt(o->bits) << " bits\n";
        } else if (const auto* p = std::get_if<hq::PauliConjugationResult>(&outcome)) {
            std::cout << "pauli conjugation by " << p->gate_id << ":\n";
            for (const hq::GeneratorImage& image : p->images) {
                std::cout << "    " << image.generator << " -> "
                          << (image.verdict.is_member
                                  ? hq::label_to_string(*image.verdict.label)
                                  : "not a Pauli element")
                          << " (residual " << fmt(image.verdict.residual) << ")\n";
            }
            std::cout << "    automorphism on generators: "
                      << (p->automorphism ? "yes" : "no") << "\n";
        }
    }
    return 0;
}

int cmd_opent(const std::string& dc_range, const std::string& dt_list, const std::string& out_path,
              bool verify) {
    std::size_t dc_lo = 0, dc_hi = 0;
    std::vector<std::size_t> dt_values;
    if (!parse_range(dc_range, dc_lo, dc_hi)) {
        std::cerr << "error: --dc expects LO:HI with 2 <= LO <= HI\n";
        return 2;
    }
    if (!parse_list(dt_list, dt_values)) {
        std::cerr << "error: --dt expects a comma list of dimensions >= 2\n";
        return 2;
    }

    const std::vector<hq::SweepRow> rows = hq::fig1_sweep(dc_lo, dc_hi, dt_values);

    std::ostringstream csv;
    csv << "d_c,d_t,E_op_bits\n";
    for (const hq::SweepRow& row : rows) {
        csv << row.d_c << "," << row.d_t << "," << fmt(row.entanglement_bits) << "\n";
    }

    double max_diff = 0.0;
    if (verify) {
        for (const hq::SweepRow& row : rows) {
            const double oracle = hq::operator_entanglement(hq::sum_gate(row.d_c, row.d_t));
            max_diff = std::max(max_diff, std::abs(oracle - row.entanglement_bits));
        }
        csv << "# max_abs_difference_vs_svd_oracle " << fmt(max_diff) << "\n";
    }

    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return 2;
    }
    out << csv.str();
    out.close();
    std::cout << rows.size() << " rows written to " << out_path << "\n";
    if (verify) {
        std::cout << "svd oracle max difference: " << fmt(max_diff) << "\n";
        if (max_diff > 1e-9) {
            std::cerr << "verification failed: oracle difference exceeds 1e-9\n";
            return 1;
        }
    }
    return 0;
}

int cmd_lemma1(std::size_t d_c, std::size_t d_t, const std::string& kind_name, std::size_t t) {
    hq::Lemma1Kind kind;
    if (kind_name == "gamma") {
        kind = hq::Lemma1Kind::Gamma;
    } else if (kind_name == "alpha_t") {
        kind = hq::Lemma1Kind::AlphaTarget;
    } else if (kind_name == "alpha_beta") {
        kind = hq::Lemma1Kind::AlphaBeta;
    } else {
        std::cerr << "error: --kind must be gamma, alpha_t or alpha_beta\n";
        return 2;
    }
    const hq::Lemma1Result r = hq::lemma1_experiment(kind, d_c, d_t, t);
    const double diff = std::abs(r.generated_bits - r.operator_bits);
    std::cout << "generated entropy:      " << fmt(r.generated_bits) << " bits\n"
              << "operator entanglement:  " << fmt(r.operator_bits) << " bits\n"
              << "difference:             " << fmt(diff) << "\n";
    if (diff > 1e-9) {
        std::cerr << "verification failed: difference exceeds 1e-9\n";
        return 1;
    }
    return 0;
}

int cmd_lemma2(std::size_t d_c, std::size_t d_t) {
    const hq::Lemma2Report report = hq::lemma2_check(d_c, d_t);
    std::cout << "conjugation of Pauli generators by SUM(" << d_c << "," << d_t << "):\n";
    for (const hq::GeneratorImage& image : report.generators) {
        std::cout << "  " << image.generator << " -> "
                  << (image.verdict.is_member ? hq::label_to_string(*image.verdict.label)
                                              : "not a Pauli element")
                  << " (residual " << fmt(image.verdict.residual) << ")\n";
        nlohmann::json line = {
            {"generator", image.generator},
            {"input", label_json(image.input)},
            {"member", image.verdict.is_member},
            {"residual", image.verdict.residual},
        };
        if (image.verdict.label) line["label"] = label_json(*image.verdict.label);
        std::cout << "  " << line.dump() << "\n";
    }
    std::cout << "role-swapped SUM (control on the small site) automorphism: "
              << (report.d21_automorphism ? "yes" : "no") << "\n";
    std::cout << "automorphism: " << (report.automorphism ? "yes" : "no") << " (d_c mod d_t = "
              << d_c % d_t << ")\n";
    if (!report.matches_expectation) {
        std::cerr << "verification failed: verdict disagrees with the divisibility rule\n";
        return 1;
    }
    return 0;
}

int cmd_dump(const std::string& gate_id, const std::vector<std::size_t>& dims) {
    const hq::GateSignature gate = hq::gate_by_name(gate_id, dims);
    print_matrix(gate.matrix);
    if (gate.site_dims.size() == 2) {
        std::cout << "operator entanglement: " << fmt(hq::operator_entanglement(gate))
                  << " bits\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hybrid-qudit gate simulator and analysis toolkit"};
    app.require_subcommand(1);

    std::string circuit_path;
    CLI::App* simulate = app.add_subcommand("simulate", "run a .hqc circuit file");
    simulate->add_option("file", circuit_path, "circuit file")->required();

    std::string dc_range, dt_list, out_path = "opent.csv";
    bool verify = false;
    CLI::App* opent = app.add_subcommand("opent", "SUM-gate operator entanglement sweep (CSV)");
    opent->add_option("--dc", dc_range, "control dimensions, LO:HI inclusive")->required();
    opent->add_option("--dt", dt_list, "target dimensions, comma list")->required();
    opent->add_option("--out", out_path, "output CSV path");
    opent->add_flag("--verify", verify, "cross-check the closed form against the SVD oracle");

    std::size_t l1_dc = 2, l1_dt = 2, l1_t = 0;
    std::string l1_kind = "gamma";
    CLI::App* lemma1 = app.add_subcommand("lemma1", "generated vs operator entanglement check");
    lemma1->add_option("--dc", l1_dc, "control dimension")->required();
    lemma1->add_option("--dt", l1_dt, "target dimension")->required();
    lemma1->add_option("--kind", l1_kind, "gamma | alpha_t | alpha_beta");
    lemma1->add_option("--t", l1_t, "target basis level");

    std::size_t l2_dc = 2, l2_dt = 2;
    CLI::App* lemma2 = app.add_subcommand("lemma2", "Pauli-group automorphism check");
    lemma2->add_option("--dc", l2_dc, "control dimension")->required();
    lemma2->add_option("--dt", l2_dt, "target dimension")->required();

    std::string gate_id;
    std::vector<std::size_t> dump_dims;
    CLI::App* dump = app.add_subcommand("dump", "print a gate matrix");
    dump->add_option("gate", gate_id, "gate id (X Z F SUM SUMP PSWAP SWAP3 TOFFOLI FREDKIN CPHASE)")
        ->required();
    dump->add_option("dims", dump_dims, "site dimensions")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed()) return cmd_simulate(circuit_path);
        if (opent->parsed()) return cmd_opent(dc_range, dt_list, out_path, verify);
        if (lemma1->parsed()) return cmd_lemma1(l1_dc, l1_dt, l1_kind, l1_t);
        if (lemma2->parsed()) return cmd_lemma2(l2_dc, l2_dt);
        if (dump->parsed()) return cmd_dump(gate_id, dump_dims);
    } catch (const hq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
