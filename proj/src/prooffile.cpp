#include "derivus/prooffile.hpp"

#include "derivus/rsfile.hpp"

#include <sstream>
#include <stdexcept>

namespace derivus {

static std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

static std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

MathSystem parse_msystem(const std::string& text) {
    std::vector<std::string> constants, predicates;
    std::vector<std::string> s_constants, s_predicates;
    bool have_sc = false, have_sp = false;
    std::string scheme;
    std::vector<std::pair<bool, std::string>> axiom_lines;   // (embedded, text)

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto err = [&](const std::string& msg) {
        throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto header = [&](const char* key) {
            size_t n = std::string(key).size();
            return line.compare(0, n, key) == 0;
        };
        if (header("constants:")) {
            if (!constants.empty()) err("repeated constants header");
            constants = split_ws(line.substr(10));
        } else if (header("predicates:")) {
            if (!predicates.empty()) err("repeated predicates header");
            predicates = split_ws(line.substr(11));
        } else if (header("s-constants:")) {
            if (have_sc) err("repeated s-constants header");
            have_sc = true;
            s_constants = split_ws(line.substr(12));
        } else if (header("s-predicates:")) {
            if (have_sp) err("repeated s-predicates header");
            have_sp = true;
            s_predicates = split_ws(line.substr(13));
        } else if (header("scheme:")) {
            if (!scheme.empty()) err("repeated scheme header");
            scheme = trim(line.substr(7));
            if (scheme.empty()) err("empty scheme header");
        } else if (header("s:")) {
            axiom_lines.push_back({true, trim(line.substr(2))});
        } else {
            axiom_lines.push_back({false, line});
        }
    }
    if (!have_sc) s_constants = constants;
    if (!have_sp) s_predicates = predicates;

    MathSystem m;
    for (const auto& c : constants) m.table.add_constant(c);
    for (const auto& p : predicates) m.table.add_predicate(p);
    for (const auto& c : s_constants) m.sys.table.add_constant(c);
    for (const auto& p : s_predicates) m.sys.table.add_predicate(p);

    for (const auto& [embedded, src] : axiom_lines) {
        FormulaPtr f = parse_formula(src, m.table);
        if (embedded) {
            if (!formula_over(f, m.sys.table))
                throw ParseError("embedded axiom outside the embedded alphabet: " + src);
            m.sys.basis.push_back(f);
        }
        m.basis.push_back(f);
    }
    if (scheme == "induction") {
        m.scheme = induction_scheme(m.table);
        m.scheme_name = scheme;
    } else if (!scheme.empty()) {
        throw ParseError("unknown scheme: " + scheme);
    }
    validate_msystem(m);
    return m;
}

MathSystem load_msystem_file(const std::string& path) {
    return parse_msystem(read_file(path));
}

static std::vector<std::string> split_segments(const std::string& line) {
    std::vector<std::string> segs;
    std::string cur;
    for (char c : line) {
        if (c == ';') {
            segs.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    segs.push_back(trim(cur));
    return segs;
}

static int step_ref(const std::string& t, int lineno, int limit) {
    int v;
    try {
        size_t used;
        v = std::stoi(t, &used);
        if (used != t.size()) throw std::invalid_argument(t);
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": bad step reference: " + t);
    }
    if (v < 1 || v > limit)
        throw ParseError("line " + std::to_string(lineno) + ": step reference out of range: " + t);
    return v - 1;
}

ProofScript parse_proof(const std::string& text, const SymbolTable& tab) {
    ProofScript out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto err = [&](const std::string& msg) {
        throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> segs = split_segments(line);
        if (segs.size() < 2) err("missing justification");
        Step st;
        st.f = parse_formula(segs[0], tab);
        std::vector<std::string> just = split_ws(segs[1]);
        if (just.empty()) err("empty justification");
        const std::string& rule = just[0];
        int prior = int(out.size());
        if (rule == "prop") {
            st.rule = Step::PropAxiom;
        } else if (rule == "eq") {
            st.rule = Step::EqAxiom;
        } else if (rule == "quant") {
            st.rule = Step::QuantAxiom;
            if (just.size() > 1) {
                if (just[1].size() != 1 || just[1][0] < 'a' || just[1][0] > 'c')
                    err("quantifier axiom variant must be a, b or c");
                st.variant = just[1][0];
            }
        } else if (rule == "basis") {
            st.rule = Step::BasisAxiom;
        } else if (rule == "mp") {
            if (just.size() != 3) err("detachment needs two step references");
            st.rule = Step::MP;
            st.from = step_ref(just[1], lineno, prior);
            st.impl = step_ref(just[2], lineno, prior);
        } else if (rule == "subst") {
            if (just.size() < 4) err("substitution needs a step, a variable and a list");
            st.rule = Step::Subst;
            st.from = step_ref(just[1], lineno, prior);
            st.var = var_index(just[2]);
            if (st.var == 0) err("substitution needs a variable, got: " + just[2]);
            std::string rest;
            for (size_t k = 3; k < just.size(); ++k) {
                if (k > 3) rest += ' ';
                rest += just[k];
            }
            st.repl = parse_list(rest, tab);
        } else if (rule == "gen") {
            if (just.size() != 3) err("generalization needs a step and a variable");
            st.rule = Step::Gen;
            st.from = step_ref(just[1], lineno, prior);
            st.var = var_index(just[2]);
            if (st.var == 0) err("generalization needs a variable, got: " + just[2]);
        } else if (rule == "ind") {
            if (just.size() < 2) err("induction needs a predicate");
            st.rule = Step::Induction;
            st.pred = just[1];
            for (size_t k = 2; k < just.size(); ++k) {
                int v = var_index(just[k]);
                if (v == 0) err("induction variables must be variables, got: " + just[k]);
                st.ivars.push_back(v);
            }
            if (segs.size() > 2 && !segs[2].empty()) {
                for (const std::string& t : split_ws(segs[2])) {
                    size_t eq = t.find('=');
                    if (eq == std::string::npos)
                        err("induction premise must look like axiom=step: " + t);
                    int ax = step_ref(t.substr(0, eq), lineno, 1 << 20);
                    int stp = step_ref(t.substr(eq + 1), lineno, prior);
                    if (!st.premises.emplace(ax, stp).second)
                        err("axiom cited twice in the premise map");
                }
            }
        } else {
            err("unknown rule: " + rule);
        }
        out.push_back(std::move(st));
    }
    return out;
}

ProofScript load_proof_file(const std::string& path, const SymbolTable& tab) {
    return parse_proof(read_file(path), tab);
}

std::string render_step(const Step& st) {
    std::string s = render_formula(st.f) + " ; ";
    switch (st.rule) {
        case Step::PropAxiom: s += "prop"; break;
        case Step::EqAxiom:   s += "eq"; break;
        case Step::QuantAxiom:
            s += "quant";
            if (st.variant) { s += ' '; s += st.variant; }
            break;
        case Step::BasisAxiom: s += "basis"; break;
        case Step::MP:
            s += "mp " + std::to_string(st.from + 1) + ' ' + std::to_string(st.impl + 1);
            break;
        case Step::Subst:
            s += "subst " + std::to_string(st.from + 1) + " x" + std::to_string(st.var) +
                 ' ' + render_list(st.repl);
            break;
        case Step::Gen:
            s += "gen " + std::to_string(st.from + 1) + " x" + std::to_string(st.var);
            break;
        case Step::Induction:
            s += "ind " + st.pred;
            for (int v : st.ivars) s += " x" + std::to_string(v);
            if (!st.premises.empty()) {
                s += " ;";
                for (const auto& [ax, stp] : st.premises)
                    s += ' ' + std::to_string(ax + 1) + '=' + std::to_string(stp + 1);
            }
            break;
    }
    return s;
}

std::string render_proof(const ProofScript& script) {
    std::string out;
    for (const Step& st : script) {
        out += render_step(st);
        out += '\n';
    }
    return out;
}

ListPolicy policy_by_name(const std::string& name) {
    if (name == "all") return {};
    if (name == "strings") return strings_policy();
    if (name == "atoms") return atoms_policy();
    if (name == "vars") return variables_policy();
    if (name == "numerals") return numerals_policy();
    throw std::invalid_argument("unknown list policy: " + name);
}

} // namespace derivus
