// derivus: derivability search, decision for special systems, the
// universal encoding, proof checking, and constructive proof
// transforms, over one shared little grammar.
//
// Exit codes: 0 positive answer, 1 negative answer or rejected proof,
// 2 out of budget, 3 bad input, 4 list-policy violation, 5 system not
// special, 6 propositional cap exceeded.

#include "derivus/chi.hpp"
#include "derivus/codec.hpp"
#include "derivus/decide.hpp"
#include "derivus/deduction.hpp"
#include "derivus/derive.hpp"
#include "derivus/prenex.hpp"
#include "derivus/prooffile.hpp"
#include "derivus/relativize.hpp"
#include "derivus/rsfile.hpp"
#include "derivus/zhom.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

using namespace derivus;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_no = 1;
constexpr int exit_unknown = 2;
constexpr int exit_input = 3;
constexpr int exit_policy = 4;
constexpr int exit_not_special = 5;
constexpr int exit_overflow = 6;

int failure_code(const std::string& message) {
    if (message.find(" lists") != std::string::npos) return exit_policy;
    if (message.find("exceeds the cap") != std::string::npos) return exit_overflow;
    return exit_no;
}

std::string render_rstep(const RStep& st) {
    std::string line = render_formula(st.f) + " ; ";
    switch (st.just) {
    case RStep::EqAxiom: line += "eq"; break;
    case RStep::Basis: line += "basis " + std::to_string(st.from + 1); break;
    case RStep::MP:
        line += "mp " + std::to_string(st.from + 1) + " " + std::to_string(st.impl + 1);
        break;
    case RStep::Subst:
        line += "subst " + std::to_string(st.from + 1) + " x" + std::to_string(st.var) +
                " " + render_list(st.repl);
        break;
    }
    return line;
}

void print_rderivation(const std::vector<RStep>& steps) {
    for (size_t i = 0; i < steps.size(); ++i)
        std::cout << i + 1 << ". " << render_rstep(steps[i]) << "\n";
}

// .ms files carry mathematical systems; anything else is an axiom file
// for a recursive system, wrapped with an empty extensional part.
MathSystem load_any_msystem(const std::string& path) {
    if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".ms") == 0)
        return load_msystem_file(path);
    return wrap_system(load_system_file(path));
}

struct DeriveArgs {
    std::string system, goal;
    DeriveBudget budget;
    bool emit = false;
    bool report = false;
};

int run_derive(const DeriveArgs& a) {
    RecursiveSystem sys = load_system_file(a.system);
    FormulaPtr goal = parse_formula(a.goal, sys.table);
    DeriveResult r = derive(sys, goal, a.budget);
    if (a.report)
        std::cout << "budget: rounds " << r.rounds << ", facts " << r.max_facts
                  << ", list length " << r.max_list_len << "\n"
                  << "facts seen: " << r.facts_seen << "\n";
    if (r.status != DeriveStatus::Found) {
        std::cout << "unknown\n";
        return exit_unknown;
    }
    std::cout << "found: " << r.derivation.size() << " steps\n";
    if (a.emit) print_rderivation(r.derivation);
    return exit_ok;
}

struct DecideArgs {
    std::string system, goal;
    bool emit = false;
    bool report = false;
};

int run_decide(const DecideArgs& a) {
    RecursiveSystem sys = load_system_file(a.system);
    if (!is_special(sys)) {
        std::cerr << "system is not special\n";
        return exit_not_special;
    }
    FormulaPtr goal = parse_formula(a.goal, sys.table);
    if (a.report) {
        ComplexityProfile p = profile_of(sys);
        int n = 0;
        for (const List& l : argument_lists(goal))
            if (symbol_count(l) > n) n = symbol_count(l);
        std::cout << "profile: k " << p.k << ", alpha " << p.alpha << ", rho " << p.rho
                  << ", basis " << p.basis << "\n"
                  << "length bound for n " << n << ": "
                  << derivation_length_bound(p, n) << "\n";
    }
    DecideResult r = decide(sys, goal);
    std::cout << (r.derivable ? "yes" : "no") << "\n";
    if (r.derivable && a.emit) print_rderivation(r.derivation);
    return r.derivable ? exit_ok : exit_no;
}

struct CheckArgs {
    std::string system, proof, policy = "all";
    int atom_cap = -1;
    bool report = false;
};

int run_check(const CheckArgs& a) {
    MathSystem m = load_any_msystem(a.system);
    ProofScript script = load_proof_file(a.proof, m.table);
    ProofCheck pc = check_proof(script, m, policy_by_name(a.policy), a.atom_cap);
    if (!pc.ok) {
        std::cerr << "step " << pc.step + 1 << ": " << pc.message << "\n";
        return failure_code(pc.message);
    }
    std::cout << "ok: " << script.size() << " steps\n";
    if (a.report && !script.empty())
        std::cout << "proves: " << render_formula(script.back().f) << "\n";
    return exit_ok;
}

int run_lint(const CheckArgs& a) {
    MathSystem m = load_any_msystem(a.system);
    ProofScript script = load_proof_file(a.proof, m.table);
    std::vector<LintFinding> findings = chi_lint(script, m);
    for (const LintFinding& f : findings) {
        std::cout << "step " << f.step + 1;
        if (f.other >= 0) std::cout << " (with step " << f.other + 1 << ")";
        std::cout << ": " << f.message << "\n";
    }
    if (findings.empty()) {
        std::cout << "clean\n";
        return exit_ok;
    }
    return exit_no;
}

std::string read_input(const std::string& text, const std::string& file) {
    if (!file.empty()) return read_file(file);
    return text;
}

int run_encode(const std::string& system, bool full) {
    RecursiveSystem sys = load_system_file(system);
    std::cout << spell(encode_rsystem(sys)) << "\n";
    if (full) std::cout << "symbols: " << encode_rsystem(sys).size() << "\n";
    return exit_ok;
}

int run_decode(const std::string& text, const std::string& file) {
    UString u = read_ustring(read_input(text, file));
    RecursiveSystem sys = decode_rsystem(u);
    std::cout << "constants:";
    for (const std::string& c : sys.table.constants) std::cout << " " << c;
    std::cout << "\npredicates:";
    for (const std::string& p : sys.table.predicates) std::cout << " " << p;
    std::cout << "\n";
    for (const FormulaPtr& f : sys.basis) std::cout << render_formula(f) << "\n";
    return exit_ok;
}

int run_classify(const std::string& text, const std::string& file) {
    UString u = read_ustring(read_input(text, file));
    std::optional<Statement> st = classify(u);
    if (!st) {
        std::cout << "not a statement\n";
        return exit_no;
    }
    std::cout << "statement: " << st->sys.basis.size() << " axioms, "
              << st->sys.table.predicates.size() << " predicates, goal "
              << render_formula(st->goal) << " (" << st->arity << "-ary, "
              << (st->goal_in_system ? "inside" : "outside") << " the system)\n";
    return exit_ok;
}

int run_diag(const std::string& text, const std::string& file) {
    UString u = read_ustring(read_input(text, file));
    if (!is_predicate_string(u)) {
        std::cerr << "not a predicate string\n";
        return exit_input;
    }
    std::cout << spell(diag(u)) << "\n";
    return exit_ok;
}

struct TheoremArgs {
    std::string text, file, engine = "decoded";
    DeriveBudget budget;
};

int run_theorem(const TheoremArgs& a) {
    UString u = read_ustring(read_input(a.text, a.file));
    TheoremEngine eng = a.engine == "internal" ? TheoremEngine::Internal
                                               : TheoremEngine::Decoded;
    switch (is_theorem(u, a.budget, eng)) {
    case Answer::Yes:
        std::cout << "yes\n";
        return exit_ok;
    case Answer::No:
        std::cout << "no\n";
        return exit_no;
    case Answer::Unknown:
        std::cout << "unknown\n";
        return exit_unknown;
    }
    return exit_unknown;
}

struct TransformArgs {
    std::string system, proof, policy = "all";
    std::vector<std::string> phis;
    std::string mode;                       // zhom
    std::string formula;                    // generalize / prenex / relativize
    std::vector<std::string> bind;          // generalize: constant=variable
    std::string pred = "N0";                // relativize
    bool guard = false;                     // relativize
};

int run_deduce(const TransformArgs& a, bool contra) {
    MathSystem m = load_any_msystem(a.system);
    ProofScript script = load_proof_file(a.proof, m.table);
    ListPolicy policy = policy_by_name(a.policy);
    std::vector<FormulaPtr> phis;
    for (const std::string& s : a.phis) phis.push_back(parse_formula(s, m.table));
    ProofScript out;
    if (contra) {
        if (phis.size() != 1)
            throw std::invalid_argument("contradiction transform takes exactly one formula");
        out = by_contradiction(script, m, phis[0], policy);
    } else if (phis.size() == 1) {
        out = deduce(script, m, phis[0], policy).script;
    } else {
        out = deduce_multi(script, m, phis, policy);
    }
    std::cout << render_proof(out);
    return exit_ok;
}

int run_zhom(const TransformArgs& a) {
    MathSystem m = load_any_msystem(a.system);
    ProofScript script = load_proof_file(a.proof, m.table);
    ZHomSpec spec;
    if (a.mode == "erase-ops") spec = erase_op_terms(m, script);
    else if (a.mode == "collapse-atoms") spec = collapse_to_atoms(m, script);
    else if (a.mode == "collapse-vars") spec = collapse_to_variables(m, script);
    else throw std::invalid_argument("unknown mode " + a.mode);
    ProofScript out = zhom_proof(script, spec);
    ProofCheck pc = check_proof(out, m, policy_by_name(a.policy));
    if (!pc.ok) {
        std::cerr << "image fails at step " << pc.step + 1 << ": " << pc.message << "\n";
        return failure_code(pc.message);
    }
    std::cout << render_proof(out);
    return exit_ok;
}

int run_generalize(const TransformArgs& a) {
    MathSystem base = load_any_msystem(a.system);
    std::vector<std::pair<std::string, int>> binding;
    std::set<std::string> fresh;
    for (const std::string& b : a.bind) {
        size_t eq = b.find('=');
        if (eq == std::string::npos || eq + 2 > b.size() || b[eq + 1] != 'x')
            throw std::invalid_argument("binding must look like c=x1");
        binding.emplace_back(b.substr(0, eq), std::stoi(b.substr(eq + 2)));
        fresh.insert(b.substr(0, eq));
    }
    MathSystem ext = extend_symbols(base, {fresh.begin(), fresh.end()});
    ProofScript script = load_proof_file(a.proof, ext.table);
    FormulaPtr f = parse_formula(a.formula, base.table);
    GeneralizeResult gr = generalize_constants(script, base, binding, f,
                                               policy_by_name(a.policy));
    std::cout << render_proof(gr.script);
    std::cout << "# proves " << render_formula(gr.statement) << "\n";
    return exit_ok;
}

int run_prenex(const TransformArgs& a) {
    MathSystem m = load_any_msystem(a.system);
    FormulaPtr f = parse_formula(a.formula, m.table);
    std::cout << render_formula(prenex(f)) << "\n";
    return exit_ok;
}

int run_relativize(const TransformArgs& a) {
    MathSystem m = load_any_msystem(a.system);
    FormulaPtr f = parse_formula(a.formula, m.table);
    FormulaPtr r = relativize(f, a.pred);
    if (a.guard) r = guard_block(r, a.pred);
    std::cout << render_formula(r) << "\n";
    return exit_ok;
}

void add_budget_flags(CLI::App* cmd, DeriveBudget& b) {
    cmd->add_option("--rounds", b.rounds, "saturation rounds");
    cmd->add_option("--max-facts", b.max_facts, "fact pool limit");
    cmd->add_option("--max-list-len", b.max_list_len, "candidate list length");
    cmd->add_flag("--pool-fixed", b.pool_fixed, "restrict candidates to goal sublists");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for recursive systems and their proofs"};
    app.require_subcommand(1);

    DeriveArgs da;
    CLI::App* derive_cmd = app.add_subcommand("derive", "search for an R-derivation");
    derive_cmd->add_option("--system", da.system, "axiom file")->required();
    derive_cmd->add_option("--goal", da.goal, "goal formula")->required();
    add_budget_flags(derive_cmd, da.budget);
    derive_cmd->add_flag("--emit-derivation", da.emit, "print the derivation");
    bool da_report = false;
    derive_cmd->add_flag("--report", da_report, "print budget details");

    DecideArgs dc;
    CLI::App* decide_cmd = app.add_subcommand("decide", "decide derivability in a special system");
    decide_cmd->add_option("--system", dc.system, "axiom file")->required();
    decide_cmd->add_option("--goal", dc.goal, "elementary prime goal")->required();
    decide_cmd->add_flag("--emit-derivation", dc.emit, "print the derivation");
    decide_cmd->add_flag("--report", dc.report, "print the complexity profile and bound");

    CheckArgs ck;
    CLI::App* check_cmd = app.add_subcommand("check", "verify a proof script");
    check_cmd->add_option("--system", ck.system, "system file (.ms or axioms)")->required();
    check_cmd->add_option("--proof", ck.proof, "proof script")->required();
    check_cmd->add_option("--policy", ck.policy, "all|strings|atoms|vars|numerals");
    check_cmd->add_option("--atom-cap", ck.atom_cap, "propositional part cap");
    check_cmd->add_flag("--report", ck.report, "print the proved formula");

    CheckArgs li;
    CLI::App* lint_cmd = app.add_subcommand("lint", "sign and contradiction findings");
    lint_cmd->add_option("--system", li.system, "system file")->required();
    lint_cmd->add_option("--proof", li.proof, "proof script")->required();

    std::string enc_system;
    bool enc_full = false;
    CLI::App* enc_cmd = app.add_subcommand("encode-system", "universal encoding of a system");
    enc_cmd->add_option("--system", enc_system, "axiom file")->required();
    enc_cmd->add_flag("--report", enc_full, "print the symbol count");

    std::string dec_text, dec_file;
    CLI::App* dec_cmd = app.add_subcommand("decode-system", "decode a basis string");
    dec_cmd->add_option("--input", dec_text, "encoded text");
    dec_cmd->add_option("--file", dec_file, "file with encoded text");

    std::string cls_text, cls_file;
    CLI::App* cls_cmd = app.add_subcommand("classify", "is the string a statement?");
    cls_cmd->add_option("--input", cls_text, "encoded text");
    cls_cmd->add_option("--file", cls_file, "file with encoded text");

    std::string diag_text, diag_file;
    CLI::App* diag_cmd = app.add_subcommand("diag", "diagonalize a predicate string");
    diag_cmd->add_option("--input", diag_text, "encoded text");
    diag_cmd->add_option("--file", diag_file, "file with encoded text");

    TheoremArgs th;
    CLI::App* th_cmd = app.add_subcommand("s11-theorem", "is the statement a theorem?");
    th_cmd->add_option("--input", th.text, "encoded text");
    th_cmd->add_option("--file", th.file, "file with encoded text");
    th_cmd->add_option("--engine", th.engine, "decoded|internal");
    add_budget_flags(th_cmd, th.budget);

    CLI::App* tr_cmd = app.add_subcommand("transform", "constructive proof transforms");
    tr_cmd->require_subcommand(1);
    TransformArgs tr;
    CLI::App* td = tr_cmd->add_subcommand("deduce", "discharge statements into implications");
    td->add_option("--system", tr.system, "system file")->required();
    td->add_option("--proof", tr.proof, "proof script")->required();
    td->add_option("--phi", tr.phis, "statement to discharge (repeatable)")->required();
    td->add_option("--policy", tr.policy, "list policy");
    CLI::App* tc = tr_cmd->add_subcommand("contra", "turn a refutation of the negation into a proof");
    tc->add_option("--system", tr.system, "system file")->required();
    tc->add_option("--proof", tr.proof, "proof script")->required();
    tc->add_option("--phi", tr.phis, "formula to prove")->required();
    tc->add_option("--policy", tr.policy, "list policy");
    CLI::App* tz = tr_cmd->add_subcommand("zhom", "transport the proof along a list homomorphism");
    tz->add_option("--system", tr.system, "system file")->required();
    tz->add_option("--proof", tr.proof, "proof script")->required();
    tz->add_option("--mode", tr.mode, "erase-ops|collapse-atoms|collapse-vars")->required();
    tz->add_option("--policy", tr.policy, "list policy");
    CLI::App* tg = tr_cmd->add_subcommand("generalize", "fresh constants into quantified variables");
    tg->add_option("--system", tr.system, "base system file")->required();
    tg->add_option("--proof", tr.proof, "proof script over the extension")->required();
    tg->add_option("--formula", tr.formula, "base formula F")->required();
    tg->add_option("--bind", tr.bind, "constant=variable (repeatable)")->required();
    tg->add_option("--policy", tr.policy, "list policy");
    CLI::App* tp = tr_cmd->add_subcommand("prenex", "quantifier-prefix equivalent");
    tp->add_option("--system", tr.system, "system file for the symbols")->required();
    tp->add_option("--formula", tr.formula, "formula")->required();
    CLI::App* trl = tr_cmd->add_subcommand("relativize", "confine quantifiers to a predicate");
    trl->add_option("--system", tr.system, "system file for the symbols")->required();
    trl->add_option("--formula", tr.formula, "formula")->required();
    trl->add_option("--pred", tr.pred, "guard predicate");
    trl->add_flag("--guard", tr.guard, "also guard the free variables");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*derive_cmd) {
            da.report = da_report;
            return run_derive(da);
        }
        if (*decide_cmd) return run_decide(dc);
        if (*check_cmd) return run_check(ck);
        if (*lint_cmd) return run_lint(li);
        if (*enc_cmd) return run_encode(enc_system, enc_full);
        if (*dec_cmd) return run_decode(dec_text, dec_file);
        if (*cls_cmd) return run_classify(cls_text, cls_file);
        if (*diag_cmd) return run_diag(diag_text, diag_file);
        if (*th_cmd) return run_theorem(th);
        if (*tr_cmd) {
            if (*td) return run_deduce(tr, false);
            if (*tc) return run_deduce(tr, true);
            if (*tz) return run_zhom(tr);
            if (*tg) return run_generalize(tr);
            if (*tp) return run_prenex(tr);
            if (*trl) return run_relativize(tr);
        }
    } catch (const CodecError& e) {
        std::cerr << "encoding error at symbol " << e.pos << ": " << e.what() << "\n";
        return exit_input;
    } catch (const std::invalid_argument& e) {
        std::string msg = e.what();
        std::cerr << msg << "\n";
        if (msg.find("rejected") != std::string::npos) return failure_code(msg);
        if (msg.find("policy") != std::string::npos || msg.find(" lists") != std::string::npos)
            return exit_policy;
        return exit_input;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return exit_input;
    }
    return exit_input;
}
