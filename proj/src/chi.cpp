#include "derivus/chi.hpp"

#include <map>

namespace derivus {

using PredArity = std::pair<std::string, int>;

static void collect_pred_primes(const FormulaPtr& f, const SymbolTable& embedded,
                                std::set<PredArity>& out) {
    if (!f) return;
    switch (f->kind) {
        case Formula::Eq:
            return;
        case Formula::Pred:
            if (embedded.has_predicate(f->sym))
                out.insert({f->sym, int(f->args.size())});
            return;
        case Formula::Neg:
        case Formula::Forall:
        case Formula::Exists:
            collect_pred_primes(f->a, embedded, out);
            return;
        default:
            collect_pred_primes(f->a, embedded, out);
            collect_pred_primes(f->b, embedded, out);
            return;
    }
}

static std::set<PredArity> conclusions_of(const std::vector<FormulaPtr>& gamma) {
    std::set<PredArity> out;
    for (const auto& f : gamma) {
        FormulaPtr c = rconclusion(f);
        if (c && c->kind == Formula::Pred)
            out.insert({c->sym, int(c->args.size())});
    }
    return out;
}

std::vector<FormulaPtr> chi_fixpoint_basis(const RecursiveSystem& s) {
    // Seed: drop axioms whose conclusion pair recurs among their premises.
    std::vector<FormulaPtr> gamma;
    for (const auto& ax : s.basis) {
        FormulaPtr c = rconclusion(ax);
        if (c && c->kind == Formula::Pred) {
            PredArity pa{c->sym, int(c->args.size())};
            bool self = false;
            for (const auto& pr : rpremises(ax)) {
                if (pr->kind == Formula::Pred && pr->sym == pa.first &&
                    int(pr->args.size()) == pa.second) {
                    self = true;
                    break;
                }
            }
            if (self) continue;
        }
        gamma.push_back(ax);
    }
    // Cancel spare formulas until stable.
    for (;;) {
        std::set<PredArity> concl = conclusions_of(gamma);
        std::vector<FormulaPtr> kept;
        for (const auto& f : gamma) {
            std::set<PredArity> primes;
            collect_pred_primes(f, s.table, primes);
            bool spare = false;
            for (const auto& pa : primes)
                if (!concl.count(pa)) { spare = true; break; }
            if (!spare) kept.push_back(f);
        }
        if (kept.size() == gamma.size()) return gamma;
        gamma = std::move(kept);
    }
}

std::set<PredArity> chi_support(const RecursiveSystem& s) {
    std::set<PredArity> out;
    for (const auto& f : chi_fixpoint_basis(s))
        collect_pred_primes(f, s.table, out);
    return out;
}

int chi_sign(const FormulaPtr& f, const std::set<PredArity>& support,
             const SymbolTable& embedded) {
    switch (f->kind) {
        case Formula::Eq:
            return +1;
        case Formula::Pred:
            if (!embedded.has_predicate(f->sym)) return -1;
            return support.count({f->sym, int(f->args.size())}) ? +1 : -1;
        case Formula::Neg:
            return -chi_sign(f->a, support, embedded);
        case Formula::Impl:
            return (chi_sign(f->a, support, embedded) == -1 ||
                    chi_sign(f->b, support, embedded) == +1) ? +1 : -1;
        case Formula::Iff:
            return chi_sign(f->a, support, embedded) ==
                   chi_sign(f->b, support, embedded) ? +1 : -1;
        case Formula::And:
            return (chi_sign(f->a, support, embedded) == +1 &&
                    chi_sign(f->b, support, embedded) == +1) ? +1 : -1;
        case Formula::Or:
            return (chi_sign(f->a, support, embedded) == +1 ||
                    chi_sign(f->b, support, embedded) == +1) ? +1 : -1;
        case Formula::Forall:
        case Formula::Exists:
            return chi_sign(f->a, support, embedded);
    }
    return -1;
}

std::vector<LintFinding> chi_lint(const ProofScript& script, const MathSystem& m) {
    std::vector<LintFinding> out;
    if (m.basis_is_embedded()) {
        std::set<PredArity> support = chi_support(m.sys);
        for (int i = 0; i < int(script.size()); ++i)
            if (script[i].f && chi_sign(script[i].f, support, m.sys.table) < 0)
                out.push_back({i, -1, "step carries a negative sign"});
    }
    std::map<std::string, int> first;
    for (int i = 0; i < int(script.size()); ++i)
        if (script[i].f) first.emplace(formula_key(script[i].f), i);
    std::set<std::pair<int, int>> seen;
    for (int i = 0; i < int(script.size()); ++i) {
        const FormulaPtr& f = script[i].f;
        if (!f || f->kind != Formula::Neg) continue;
        auto it = first.find(formula_key(f->a));
        if (it == first.end()) continue;
        int j = it->second;
        auto pr = std::minmax(i, j);
        if (!seen.insert({pr.first, pr.second}).second) continue;
        out.push_back({pr.second, pr.first,
                       "formula and its negation both appear in the script"});
    }
    return out;
}

} // namespace derivus
