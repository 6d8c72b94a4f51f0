#include "hq/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "hq/errors.hpp"

namespace hq {

namespace {

struct Token {
    enum class Kind { Name, Int, Colon, Pipe };
    Kind kind;
    std::string text;
    int line = 0;
    int column = 0;
};

// Tokenizes one line; '#' starts a comment. Returns nullopt on a bad byte.
std::optional<ParseError> tokenize_line(const std::string& text, int line_no,
                                        std::vector<Token>& out) {
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const int col = static_cast<int>(i) + 1;
        if (c == ':') {
            out.push_back({Token::Kind::Colon, ":", line_no, col});
            ++i;
        } else if (c == '|') {
            out.push_back({Token::Kind::Pipe, "|", line_no, col});
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Token::Kind::Int, text.substr(i, j - i), line_no, col});
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                       text[j] == '_')) {
                ++j;
            }
            out.push_back({Token::Kind::Name, text.substr(i, j - i), line_no, col});
            i = j;
        } else {
            return ParseError{line_no, col, "unexpected character; expected a name, integer, ':' or '|'",
                              std::string(1, c)};
        }
    }
    return std::nullopt;
}

// Cursor over one statement's tokens.
class Statement {
public:
    Statement(std::vector<Token> tokens, int line_no)
        : tokens_(std::move(tokens)), line_(line_no) {}

    bool done() const { return pos_ >= tokens_.size(); }

    const Token* peek() const { return done() ? nullptr : &tokens_[pos_]; }

    // Position just past the last consumed token, for end-of-line errors.
    ParseError error_here(const std::string& message) const {
        if (!done()) {
            return ParseError{tokens_[pos_].line, tokens_[pos_].column, message, tokens_[pos_].text};
        }
        const int col = tokens_.empty()
                            ? 1
                            : tokens_.back().column + static_cast<int>(tokens_.back().text.size());
        return ParseError{line_, col, message, ""};
    }

    std::optional<Token> take(Token::Kind kind) {
        if (!done() && tokens_[pos_].kind == kind) return tokens_[pos_++];
        return std::nullopt;
    }

private:
    std::vector<Token> tokens_;
    int line_;
    std::size_t pos_ = 0;
};

std::size_t parse_size(const std::string& digits) {
    try {
        return std::stoull(digits);
    } catch (const std::out_of_range&) {
        return static_cast<std::size_t>(-1);
    }
}

}  // namespace

std::string ParseError::render() const {
    std::ostringstream os;
    os << "line " << line << ", col " << column << ": " << message;
    if (!offending_token.empty()) os << " (got '" << offending_token << "')";
    return os.str();
}

const std::vector<std::pair<std::string, std::size_t>>& dsl_gate_arities() {
    static const std::vector<std::pair<std::string, std::size_t>> table = {
        {"X", 1},       {"Z", 1},       {"F", 1},     {"SUM", 2},     {"SUMP", 2},
        {"PSWAP", 2},   {"SWAP3", 2},   {"TOFFOLI", 3}, {"FREDKIN", 3}, {"CPHASE", 2},
    };
    return table;
}

std::optional<std::size_t> dsl_gate_arity(const std::string& gate_id) {
    for (const auto& [id, arity] : dsl_gate_arities()) {
        if (id == gate_id) return arity;
    }
    return std::nullopt;
}

ParseResult parse(const std::string& source) {
    std::vector<std::string> names;
    std::vector<std::size_t> dims;
    std::map<std::string, std::size_t> name_index;
    std::optional<StateDirective> initial;
    std::vector<GateStep> steps;
    std::vector<AnalysisDirective> analyses;
    int register_line = 0;

    auto fail = [](ParseError e) { return ParseResult{std::nullopt, std::move(e)}; };

    auto resolve_site = [&](const Token& tok) -> std::size_t {
        const auto it = name_index.find(tok.text);
        if (it == name_index.end()) {
            throw ParseError{tok.line, tok.column, "undeclared site name", tok.text};
        }
        return it->second;
    };
    auto take_site_list = [&](Statement& st, std::vector<std::size_t>& sites) {
        while (const auto tok = st.take(Token::Kind::Name)) sites.push_back(resolve_site(*tok));
    };

    std::istringstream in(source);
    std::string line_text;
    int line_no = 0;
    while (std::getline(in, line_text)) {
        ++line_no;
        std::vector<Token> tokens;
        if (auto err = tokenize_line(line_text, line_no, tokens)) return fail(*err);
        if (tokens.empty()) continue;
        Statement st(std::move(tokens), line_no);

        const auto keyword = st.take(Token::Kind::Name);
        if (!keyword) return fail(st.error_here("expected a statement keyword"));

        try {
            if (keyword->text == "register") {
                if (register_line != 0) {
                    return fail(ParseError{keyword->line, keyword->column,
                                           "duplicate register declaration", keyword->text});
                }
                register_line = keyword->line;
                while (!st.done()) {
                    const auto name = st.take(Token::Kind::Name);
                    if (!name) return fail(st.error_here("expected a site name"));
                    if (name_index.count(name->text)) {
                        return fail(ParseError{name->line, name->column, "duplicate site name",
                                               name->text});
                    }
                    if (!st.take(Token::Kind::Colon)) {
                        return fail(st.error_here("expected ':' after the site name"));
                    }
                    const auto dim = st.take(Token::Kind::Int);
                    if (!dim) return fail(st.error_here("expected an integer site dimension"));
                    name_index[name->text] = names.size();
                    names.push_back(name->text);
                    dims.push_back(parse_size(dim->text));
                }
                if (names.empty()) return fail(st.error_here("expected at least one site declaration"));
            } else if (keyword->text == "state") {
                if (register_line == 0) {
                    return fail(ParseError{keyword->line, keyword->column,
                                           "state directive before register declaration",
                                           keyword->text});
                }
                if (initial) {
                    return fail(ParseError{keyword->line, keyword->column,
                                           "duplicate state directive", keyword->text});
                }
                const auto kind = st.take(Token::Kind::Name);
                if (!kind) return fail(st.error_here("expected a state kind (basis/gamma/alpha/beta)"));
                StateDirective directive;
                directive.line = kind->line;
                directive.column = kind->column;
                if (kind->text == "basis") {
                    directive.kind = StateDirective::Kind::Basis;
                    while (const auto digit = st.take(Token::Kind::Int)) {
                        directive.digits.push_back(parse_size(digit->text));
                    }
                    if (directive.digits.empty()) {
                        return fail(st.error_here("expected at least one basis digit"));
                    }
                } else if (kind->text == "gamma") {
                    directive.kind = StateDirective::Kind::Gamma;
                } else if (kind->text == "alpha") {
                    directive.kind = StateDirective::Kind::Alpha;
                    const auto partner = st.take(Token::Kind::Name);
                    if (!partner) return fail(st.error_here("expected a partner site name"));
                    directive.sites.push_back(resolve_site(*partner));
                } else if (kind->text == "beta") {
                    directive.kind = StateDirective::Kind::Beta;
                    for (int k = 0; k < 2; ++k) {
                        const auto site = st.take(Token::Kind::Name);
                        if (!site) return fail(st.error_here("expected two pair site names"));
                        directive.sites.push_back(resolve_site(*site));
                    }
                } else {
                    return fail(ParseError{kind->line, kind->column,
                                           "unknown state kind; expected basis, gamma, alpha or beta",
                                           kind->text});
                }
                if (!st.done()) return fail(st.error_here("unexpected trailing tokens"));
                initial = std::move(directive);
            } else if (keyword->text == "gate") {
                if (register_line == 0) {
                    return fail(ParseError{keyword->line, keyword->column,
                                           "gate before register declaration", keyword->text});
                }
                const auto id = st.take(Token::Kind::Name);
                if (!id) return fail(st.error_here("expected a gate id"));
                const auto arity = dsl_gate_arity(id->text);
                if (!arity) {
                    return fail(ParseError{id->line, id->column, "unknown gate id", id->text});
                }
                GateStep step;
                step.gate_id = id->text;
                step.line = id->line;
                step.column = id->column;
                take_site_list(st, step.sites);
                if (step.sites.size() != *arity) {
                    return fail(ParseError{id->line, id->column,
                                           "gate " + id->text + " expects " +
                                               std::to_string(*arity) + " site name(s), got " +
                                               std::to_string(step.sites.size()),
                                           id->text});
                }
                if (!st.done()) return fail(st.error_here("expected a site name"));
                steps.push_back(std::move(step));
            } else if (keyword->text == "measure") {
                if (register_line == 0) {
                    return fail(ParseError{keyword->line, keyword->column,
                                           "measure before register declaration", keyword->text});
                }
                const auto what = st.take(Token::Kind::Name);
                if (!what) return fail(st.error_here("expected an analysis kind (entropy/opent/pauli)"));
                AnalysisDirective directive;
                directive.line = what->line;
                directive.column = what->column;
                if (what->text == "entropy") {
                    directive.kind = AnalysisDirective::Kind::EntropyCut;
                    take_site_list(st, directive.left);
                    if (directive.left.empty()) {
                        return fail(st.error_here("expected site names on the left of the cut"));
                    }
                    if (!st.take(Token::Kind::Pipe)) {
                        return fail(st.error_here("expected '|' separating the cut"));
                    }
                    take_site_list(st, directive.right);
                    if (directive.right.empty()) {
                        return fail(st.error_here("expected site names on the right of the cut"));
                    }
                } else if (what->text == "opent") {
                    directive.kind = AnalysisDirective::Kind::OperatorEntanglement;
                } else if (what->text == "pauli") {
                    directive.kind = AnalysisDirective::Kind::PauliConjugation;
                    const auto id = st.take(Token::Kind::Name);
                    if (!id) return fail(st.error_here("expected a gate id"));
                    if (!dsl_gate_arity(id->text)) {
                        return fail(ParseError{id->line, id->column, "unknown gate id", id->text});
                    }
                    directive.gate_id = id->text;
                    take_site_list(st, directive.sites);
                    if (directive.sites.empty()) {
                        return fail(st.error_here("expected site names for the gate"));
                    }
                } else {
                    return fail(ParseError{what->line, what->column,
                                           "unknown analysis; expected entropy, opent or pauli",
                                           what->text});
                }
                if (!st.done()) return fail(st.error_here("unexpected trailing tokens"));
                analyses.push_back(std::move(directive));
            } else {
                return fail(ParseError{keyword->line, keyword->column,
                                       "unknown statement; expected register, state, gate or measure",
                                       keyword->text});
            }
        } catch (const ParseError& e) {
            return fail(e);
        }
    }

    if (register_line == 0) {
        return fail(ParseError{1, 1, "missing register declaration", ""});
    }
    StateDirective default_state;
    default_state.kind = StateDirective::Kind::Basis;
    default_state.digits.assign(names.size(), 0);
    default_state.line = register_line;
    default_state.column = 1;

    try {
        CircuitProgram program{HybridRegister(dims), std::move(names),
                               initial.value_or(default_state), std::move(steps),
                               std::move(analyses)};
        return ParseResult{std::move(program), std::nullopt};
    } catch (const Error& e) {
        return fail(ParseError{register_line, 1, e.what(), "register"});
    }
}

std::optional<ParseError> validate(const CircuitProgram& program) {
    const std::size_t sites = program.reg.site_count();
    const auto& dims = program.reg.dims();

    const StateDirective& init = program.initial;
    switch (init.kind) {
        case StateDirective::Kind::Basis:
            if (init.digits.size() != sites) {
                return ParseError{init.line, init.column,
                                  "basis state needs one digit per site (" +
                                      std::to_string(sites) + ")",
                                  "basis"};
            }
            for (std::size_t i = 0; i < sites; ++i) {
                if (init.digits[i] >= dims[i]) {
                    return ParseError{init.line, init.column,
                                      "basis digit " + std::to_string(init.digits[i]) +
                                          " out of range for site " + program.site_names[i],
                                      "basis"};
                }
            }
            break;
        case StateDirective::Kind::Gamma:
            break;
        case StateDirective::Kind::Alpha: {
            const std::size_t partner = init.sites[0];
            if (partner == 0) {
                return ParseError{init.line, init.column,
                                  "alpha pairs the first site with a different site", "alpha"};
            }
            if (dims[partner] != dims[0]) {
                return ParseError{init.line, init.column,
                                  "alpha pair requires equal site dimensions", "alpha"};
            }
            break;
        }
        case StateDirective::Kind::Beta: {
            if (sites < 4) {
                return ParseError{init.line, init.column,
                                  "beta needs at least four sites (implicit pair on the first two)",
                                  "beta"};
            }
            const std::size_t b1 = init.sites[0], b2 = init.sites[1];
            if (b1 == b2 || b1 < 2 || b2 < 2) {
                return ParseError{init.line, init.column,
                                  "beta pair sites must be distinct and disjoint from the first two",
                                  "beta"};
            }
            if (dims[0] != dims[1] || dims[b1] != dims[b2]) {
                return ParseError{init.line, init.column,
                                  "beta requires equal dimensions within each pair", "beta"};
            }
            break;
        }
    }

    for (const GateStep& step : program.steps) {
        std::vector<std::size_t> sorted = step.sites;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            return ParseError{step.line, step.column, "gate site list repeats a site",
                              step.gate_id};
        }
    }

    for (const AnalysisDirective& a : program.analyses) {
        switch (a.kind) {
            case AnalysisDirective::Kind::EntropyCut: {
                std::vector<int> seen(sites, 0);
                for (std::size_t s : a.left) ++seen[s];
                for (std::size_t s : a.right) ++seen[s];
                for (std::size_t s = 0; s < sites; ++s) {
                    if (seen[s] != 1) {
                        return ParseError{a.line, a.column,
                                          "entropy cut must list every site exactly once (site " +
                                              program.site_names[s] + ")",
                                          "entropy"};
                    }
                }
                break;
            }
            case AnalysisDirective::Kind::OperatorEntanglement:
                if (sites != 2) {
                    return ParseError{a.line, a.column,
                                      "opent requires a two-site register", "opent"};
                }
                break;
            case AnalysisDirective::Kind::PauliConjugation: {
                if (a.sites.size() != 2) {
                    return ParseError{a.line, a.column,
                                      "pauli analysis requires a two-site gate", "pauli"};
                }
                const auto arity = dsl_gate_arity(a.gate_id);
                if (!arity || *arity != a.sites.size()) {
                    return ParseError{a.line, a.column,
                                      "gate " + a.gate_id + " does not take " +
                                          std::to_string(a.sites.size()) + " sites",
                                      a.gate_id};
                }
                std::vector<std::size_t> sorted = a.sites;
                std::sort(sorted.begin(), sorted.end());
                if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
                    return ParseError{a.line, a.column, "pauli site list repeats a site",
                                      a.gate_id};
                }
                break;
            }
        }
    }
    return std::nullopt;
}

std::string pretty_print(const CircuitProgram& program) {
    std::ostringstream os;
    os << "register";
    for (std::size_t i = 0; i < program.site_names.size(); ++i) {
        os << " " << program.site_names[i] << ":" << program.reg.dim(i);
    }
    os << "\n";

    const StateDirective& init = program.initial;
    os << "state ";
    switch (init.kind) {
        case StateDirective::Kind::Basis:
            os << "basis";
            for (std::size_t d : init.digits) os << " " << d;
            break;
        case StateDirective::Kind::Gamma:
            os << "gamma";
            break;
        case StateDirective::Kind::Alpha:
            os << "alpha " << program.site_names[init.sites[0]];
            break;
        case StateDirective::Kind::Beta:
            os << "beta " << program.site_names[init.sites[0]] << " "
               << program.site_names[init.sites[1]];
            break;
    }
    os << "\n";

    for (const GateStep& step : program.steps) {
        os << "gate " << step.gate_id;
        for (std::size_t s : step.sites) os << " " << program.site_names[s];
        os << "\n";
    }
    for (const AnalysisDirective& a : program.analyses) {
        os << "measure ";
        switch (a.kind) {
            case AnalysisDirective::Kind::EntropyCut:
                os << "entropy";
                for (std::size_t s : a.left) os << " " << program.site_names[s];
                os << " |";
                for (std::size_t s : a.right) os << " " << program.site_names[s];
                break;
            case AnalysisDirective::Kind::OperatorEntanglement:
                os << "opent";
                break;
            case AnalysisDirective::Kind::PauliConjugation:
                os << "pauli " << a.gate_id;
                for (std::size_t s : a.sites) os << " " << program.site_names[s];
                break;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace hq
