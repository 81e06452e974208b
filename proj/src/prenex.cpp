#include "derivus/prenex.hpp"

#include <stdexcept>

namespace derivus {

FormulaPtr strip_extra_connectives(const FormulaPtr& f) {
    switch (f->kind) {
    case Formula::Eq:
    case Formula::Pred:
        return f;
    case Formula::Neg:
        return mk_neg(strip_extra_connectives(f->a));
    case Formula::Impl:
        return mk_impl(strip_extra_connectives(f->a), strip_extra_connectives(f->b));
    case Formula::And: {
        FormulaPtr a = strip_extra_connectives(f->a);
        FormulaPtr b = strip_extra_connectives(f->b);
        return mk_neg(mk_impl(a, mk_neg(b)));
    }
    case Formula::Or: {
        FormulaPtr a = strip_extra_connectives(f->a);
        FormulaPtr b = strip_extra_connectives(f->b);
        return mk_impl(mk_neg(a), b);
    }
    case Formula::Iff: {
        FormulaPtr a = strip_extra_connectives(f->a);
        FormulaPtr b = strip_extra_connectives(f->b);
        return mk_neg(mk_impl(mk_impl(a, b), mk_neg(mk_impl(b, a))));
    }
    case Formula::Forall:
    case Formula::Exists:
        return mk_quant(f->kind, f->var, strip_extra_connectives(f->a));
    }
    throw std::logic_error("unreachable");
}

namespace {

FormulaPtr freshen(const FormulaPtr& f, int& next) {
    switch (f->kind) {
    case Formula::Eq:
    case Formula::Pred:
        return f;
    case Formula::Neg:
        return mk_neg(freshen(f->a, next));
    case Formula::Impl:
    case Formula::Iff:
    case Formula::And:
    case Formula::Or:
        return mk_binary(f->kind, freshen(f->a, next), freshen(f->b, next));
    case Formula::Forall:
    case Formula::Exists: {
        FormulaPtr body = freshen(f->a, next);
        int y = next++;
        return mk_quant(f->kind, y, sbf(body, {Item::variable(y)}, f->var));
    }
    }
    throw std::logic_error("unreachable");
}

Formula::Kind dual(Formula::Kind k) {
    return k == Formula::Forall ? Formula::Exists : Formula::Forall;
}

bool is_quant(const FormulaPtr& f) {
    return f->kind == Formula::Forall || f->kind == Formula::Exists;
}

FormulaPtr pull(const FormulaPtr& f);

FormulaPtr pull_neg(const FormulaPtr& p) {
    if (is_quant(p)) return mk_quant(dual(p->kind), p->var, pull_neg(p->a));
    return mk_neg(p);
}

FormulaPtr pull_impl(const FormulaPtr& a, const FormulaPtr& b) {
    if (is_quant(a)) return mk_quant(dual(a->kind), a->var, pull_impl(a->a, b));
    if (is_quant(b)) return mk_quant(b->kind, b->var, pull_impl(a, b->a));
    return mk_impl(a, b);
}

FormulaPtr pull(const FormulaPtr& f) {
    switch (f->kind) {
    case Formula::Eq:
    case Formula::Pred:
        return f;
    case Formula::Neg:
        return pull_neg(pull(f->a));
    case Formula::Impl:
        return pull_impl(pull(f->a), pull(f->b));
    case Formula::Forall:
    case Formula::Exists:
        return mk_quant(f->kind, f->var, pull(f->a));
    default:
        throw std::logic_error("pull: connectives not reduced");
    }
}

} // namespace

FormulaPtr freshen_bound_vars(const FormulaPtr& f) {
    int next = 1;
    for (int v : vars_of(f))
        if (v >= next) next = v + 1;
    return freshen(f, next);
}

FormulaPtr prenex(const FormulaPtr& f) {
    return pull(freshen_bound_vars(strip_extra_connectives(f)));
}

bool is_prenex(const FormulaPtr& f) {
    FormulaPtr cur = f;
    while (is_quant(cur)) cur = cur->a;
    // matrix: quantifier-free over -> and !
    std::vector<FormulaPtr> stack{cur};
    while (!stack.empty()) {
        FormulaPtr g = stack.back();
        stack.pop_back();
        switch (g->kind) {
        case Formula::Eq:
        case Formula::Pred:
            break;
        case Formula::Neg:
            stack.push_back(g->a);
            break;
        case Formula::Impl:
            stack.push_back(g->a);
            stack.push_back(g->b);
            break;
        default:
            return false;
        }
    }
    return true;
}

} // namespace derivus
