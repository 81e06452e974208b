#include "derivus/relativize.hpp"

#include "derivus/parse.hpp"

#include <stdexcept>

namespace derivus {

FormulaPtr relativize(const FormulaPtr& f, const std::string& p) {
    switch (f->kind) {
    case Formula::Eq:
    case Formula::Pred:
        return f;
    case Formula::Neg:
        return mk_neg(relativize(f->a, p));
    case Formula::Impl:
    case Formula::Iff:
    case Formula::And:
    case Formula::Or:
        return mk_binary(f->kind, relativize(f->a, p), relativize(f->b, p));
    case Formula::Forall:
        return mk_forall(f->var, mk_impl(mk_pred(p, {{Item::variable(f->var)}}),
                                         relativize(f->a, p)));
    case Formula::Exists:
        return mk_exists(f->var, mk_and(mk_pred(p, {{Item::variable(f->var)}}),
                                        relativize(f->a, p)));
    }
    throw std::logic_error("unreachable");
}

FormulaPtr guard_block(const FormulaPtr& f, const std::string& p) {
    std::vector<int> vs = free_vars_ordered(f);
    FormulaPtr out = f;
    for (auto it = vs.rbegin(); it != vs.rend(); ++it)
        out = mk_impl(mk_pred(p, {{Item::variable(*it)}}), out);
    return out;
}

namespace {

bool is_guard(const FormulaPtr& f, const std::string& p, int x) {
    return f->kind == Formula::Pred && f->sym == p && f->args.size() == 1 &&
           is_single_var(f->args[0], x);
}

} // namespace

FormulaPtr unrelativize(const FormulaPtr& f, const std::string& p) {
    switch (f->kind) {
    case Formula::Eq:
        return f;
    case Formula::Pred:
        return nullptr;
    case Formula::Neg: {
        FormulaPtr a = unrelativize(f->a, p);
        return a ? mk_neg(a) : nullptr;
    }
    case Formula::Impl:
    case Formula::Iff:
    case Formula::And:
    case Formula::Or: {
        FormulaPtr a = unrelativize(f->a, p);
        FormulaPtr b = unrelativize(f->b, p);
        return a && b ? mk_binary(f->kind, a, b) : nullptr;
    }
    case Formula::Forall: {
        if (f->a->kind != Formula::Impl || !is_guard(f->a->a, p, f->var)) return nullptr;
        FormulaPtr body = unrelativize(f->a->b, p);
        return body ? mk_forall(f->var, body) : nullptr;
    }
    case Formula::Exists: {
        if (f->a->kind != Formula::And || !is_guard(f->a->a, p, f->var)) return nullptr;
        FormulaPtr body = unrelativize(f->a->b, p);
        return body ? mk_exists(f->var, body) : nullptr;
    }
    }
    throw std::logic_error("unreachable");
}

MathSystem pa_n0_system() {
    MathSystem pa = pa_system();
    MathSystem m;
    m.table = pa.table;
    m.table.add_predicate("N0");

    m.basis.push_back(parse_formula("N0 0", m.table));
    m.basis.push_back(parse_formula("-> N0 x1 N0 s(x1)", m.table));
    for (const FormulaPtr& f : pa.basis)
        m.basis.push_back(guard_block(relativize(f, "N0"), "N0"));

    auto pa_ind = induction_scheme(pa.table);
    SymbolTable pa_table = pa.table;
    m.scheme = [pa_ind, pa_table](const FormulaPtr& f) {
        std::vector<int> guards;
        FormulaPtr cur = f;
        while (cur->kind == Formula::Impl && cur->a->kind == Formula::Pred &&
               cur->a->sym == "N0" && cur->a->args.size() == 1 &&
               cur->a->args[0].size() == 1 && cur->a->args[0][0].kind == Item::Var) {
            guards.push_back(cur->a->args[0][0].var);
            cur = cur->b;
        }
        FormulaPtr h = unrelativize(cur, "N0");
        if (!h || !pa_ind(h)) return false;
        return guards == free_vars_ordered(h);
    };
    m.scheme_name = "n0-induction";
    return m;
}

} // namespace derivus
