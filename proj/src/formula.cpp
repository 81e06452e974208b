#include "derivus/formula.hpp"

#include <stdexcept>

namespace derivus {

FormulaPtr mk_eq(List l, List r) {
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Eq;
    f->args = {std::move(l), std::move(r)};
    return f;
}

FormulaPtr mk_pred(std::string p, std::vector<List> args) {
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Pred;
    f->sym = std::move(p);
    f->args = std::move(args);
    return f;
}

FormulaPtr mk_neg(FormulaPtr g) {
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Neg;
    f->a = std::move(g);
    return f;
}

FormulaPtr mk_binary(Formula::Kind k, FormulaPtr a, FormulaPtr b) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    f->a = std::move(a);
    f->b = std::move(b);
    return f;
}

FormulaPtr mk_impl(FormulaPtr a, FormulaPtr b) { return mk_binary(Formula::Impl, std::move(a), std::move(b)); }
FormulaPtr mk_iff(FormulaPtr a, FormulaPtr b) { return mk_binary(Formula::Iff, std::move(a), std::move(b)); }
FormulaPtr mk_and(FormulaPtr a, FormulaPtr b) { return mk_binary(Formula::And, std::move(a), std::move(b)); }
FormulaPtr mk_or(FormulaPtr a, FormulaPtr b) { return mk_binary(Formula::Or, std::move(a), std::move(b)); }

FormulaPtr mk_quant(Formula::Kind k, int x, FormulaPtr g) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    f->var = x;
    f->a = std::move(g);
    return f;
}

FormulaPtr mk_forall(int x, FormulaPtr f) { return mk_quant(Formula::Forall, x, std::move(f)); }
FormulaPtr mk_exists(int x, FormulaPtr f) { return mk_quant(Formula::Exists, x, std::move(f)); }

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
    case Formula::Eq:
        return a->args[0] == b->args[0] && a->args[1] == b->args[1];
    case Formula::Pred:
        if (a->sym != b->sym || a->args.size() != b->args.size()) return false;
        for (size_t i = 0; i < a->args.size(); ++i)
            if (!(a->args[i] == b->args[i])) return false;
        return true;
    case Formula::Neg:
        return equal(a->a, b->a);
    case Formula::Impl:
    case Formula::Iff:
    case Formula::And:
    case Formula::Or:
        return equal(a->a, b->a) && equal(a->b, b->b);
    case Formula::Forall:
    case Formula::Exists:
        return a->var == b->var && equal(a->a, b->a);
    }
    return false;
}

bool is_prime(const FormulaPtr& f) {
    return f->kind == Formula::Eq || f->kind == Formula::Pred;
}

bool is_rformula(const FormulaPtr& f) {
    const Formula* g = f.get();
    while (g->kind == Formula::Impl) {
        if (!is_prime(g->a)) return false;
        g = g->b.get();
    }
    return g->kind == Formula::Eq || g->kind == Formula::Pred;
}

bool is_elementary_formula(const FormulaPtr& f) {
    return free_vars(f).empty() && vars_of(f).empty();
}

std::vector<FormulaPtr> rpremises(const FormulaPtr& f) {
    std::vector<FormulaPtr> out;
    FormulaPtr g = f;
    while (g->kind == Formula::Impl) {
        out.push_back(g->a);
        g = g->b;
    }
    return out;
}

FormulaPtr rconclusion(const FormulaPtr& f) {
    FormulaPtr g = f;
    while (g->kind == Formula::Impl) g = g->b;
    return g;
}

static void vars_into(const FormulaPtr& f, std::set<int>& out) {
    switch (f->kind) {
    case Formula::Eq:
    case Formula::Pred:
        for (const List& l : f->args) collect_vars(l, out);
        return;
    case Formula::Neg:
        vars_into(f->a, out);
        return;
    case Formula::Impl:
    case Formula::Iff:
    case Formula::And:
    case Formula::Or:
        vars_into(f->a, out);
        vars_into(f->b, out);
        return;
    case Formula::Forall:
    case Formula::Exists:
        out.insert(f->var);
        vars_into(f->a, out);
        return;
    }
}

std::set<int> vars_of(const FormulaPtr& f) {
    std::set<int> s;
    vars_into(f, s);
    return s;
}

static void free_into(const FormulaPtr& f, std::set<int> bound, std::set<int>& out) {
    switch (f->kind) {
    case Formula::Eq:
    case Formula::Pred: {
        std::set<int> vs;
        for (const List& l : f->args) collect_vars(l, vs);
        for (int v : vs)
            if (!bound.count(v)) out.insert(v);
        return;
    }
    case Formula::Neg:
        free_into(f->a, std::move(bound), out);
        return;
    case Formula::Impl:
    case Formula::Iff:
    case Formula::And:
    case Formula::Or:
        free_into(f->a, bound, out);
        free_into(f->b, std::move(bound), out);
        return;
    case Formula::Forall:
    case Formula::Exists:
        bound.insert(f->var);
        free_into(f->a, std::move(bound), out);
        return;
    }
}

std::set<int> free_vars(const FormulaPtr& f) {
    std::set<int> s;
    free_into(f, {}, s);
    return s;
}

static void list_free_ordered(const List& l, const std::set<int>& bound,
                              std::vector<int>& out, std::set<int>& seen) {
    for (const Item& it : l) {
        if (it.kind == Item::Var) {
            if (!bound.count(it.var) && seen.insert(it.var).second)
                out.push_back(it.var);
        } else if (it.kind == Item::Op) {
            list_free_ordered(it.inner, bound, out, seen);
        }
    }
}

static void free_ordered_into(const FormulaPtr& f, std::set<int> bound,
                              std::vector<int>& out, std::set<int>& seen) {
    switch (f->kind) {
    case Formula::Eq:
    case Formula::Pred:
        for (const List& l : f->args) list_free_ordered(l, bound, out, seen);
        return;
    case Formula::Neg:
        free_ordered_into(f->a, std::move(bound), out, seen);
        return;
    case Formula::Impl:
    case Formula::Iff:
    case Formula::And:
    case Formula::Or:
        free_ordered_into(f->a, bound, out, seen);
        free_ordered_into(f->b, std::move(bound), out, seen);
        return;
    case Formula::Forall:
    case Formula::Exists:
        bound.insert(f->var);
        free_ordered_into(f->a, std::move(bound), out, seen);
        return;
    }
}

std::vector<int> free_vars_ordered(const FormulaPtr& f) {
    std::vector<int> out;
    std::set<int> seen;
    free_ordered_into(f, {}, out, seen);
    return out;
}

static void args_into(const FormulaPtr& f, std::vector<List>& out) {
    switch (f->kind) {
    case Formula::Eq:
    case Formula::Pred:
        for (const List& l : f->args) out.push_back(l);
        return;
    case Formula::Neg:
        args_into(f->a, out);
        return;
    case Formula::Impl:
    case Formula::Iff:
    case Formula::And:
    case Formula::Or:
        args_into(f->a, out);
        args_into(f->b, out);
        return;
    case Formula::Forall:
    case Formula::Exists:
        args_into(f->a, out);
        return;
    }
}

std::vector<List> argument_lists(const FormulaPtr& f) {
    std::vector<List> out;
    args_into(f, out);
    return out;
}

FormulaPtr sbf(const FormulaPtr& f, const List& mu, int x) {
    switch (f->kind) {
    case Formula::Eq:
        return mk_eq(sbl(f->args[0], mu, x), sbl(f->args[1], mu, x));
    case Formula::Pred: {
        std::vector<List> as;
        as.reserve(f->args.size());
        for (const List& l : f->args) as.push_back(sbl(l, mu, x));
        return mk_pred(f->sym, std::move(as));
    }
    case Formula::Neg:
        return mk_neg(sbf(f->a, mu, x));
    case Formula::Impl:
    case Formula::Iff:
    case Formula::And:
    case Formula::Or:
        return mk_binary(f->kind, sbf(f->a, mu, x), sbf(f->b, mu, x));
    case Formula::Forall:
    case Formula::Exists:
        if (f->var == x) return f;
        return mk_quant(f->kind, f->var, sbf(f->a, mu, x));
    }
    return f;
}

bool cf(const FormulaPtr& f, const List& mu, int x) {
    switch (f->kind) {
    case Formula::Eq:
    case Formula::Pred:
        return true;
    case Formula::Neg:
        return cf(f->a, mu, x);
    case Formula::Impl:
    case Formula::Iff:
    case Formula::And:
    case Formula::Or:
        return cf(f->a, mu, x) && cf(f->b, mu, x);
    case Formula::Forall:
    case Formula::Exists: {
        int y = f->var;
        std::set<int> fv = free_vars(f->a);
        fv.erase(y);
        if (!fv.count(x)) return true;
        return !vars_of(mu).count(y) && cf(f->a, mu, x);
    }
    }
    return true;
}

static void render_f(const FormulaPtr& f, std::string& out) {
    auto sp = [&] { if (!out.empty()) out.push_back(' '); };
    switch (f->kind) {
    case Formula::Eq:
        sp(); out += "~";
        sp(); out += render_list(f->args[0]);
        sp(); out += ",";
        sp(); out += render_list(f->args[1]);
        return;
    case Formula::Pred:
        sp(); out += f->sym;
        for (size_t i = 0; i < f->args.size(); ++i) {
            if (i) { sp(); out += ","; }
            sp(); out += render_list(f->args[i]);
        }
        return;
    case Formula::Neg:
        sp(); out += "!";
        render_f(f->a, out);
        return;
    case Formula::Impl:
    case Formula::Iff:
    case Formula::And:
    case Formula::Or: {
        const char* op = f->kind == Formula::Impl ? "->"
                       : f->kind == Formula::Iff ? "<->"
                       : f->kind == Formula::And ? "&" : "|";
        sp(); out += op;
        render_f(f->a, out);
        render_f(f->b, out);
        return;
    }
    case Formula::Forall:
    case Formula::Exists:
        sp(); out += f->kind == Formula::Forall ? "forall" : "exists";
        sp(); out += "x" + std::to_string(f->var);
        render_f(f->a, out);
        return;
    }
}

std::string render_formula(const FormulaPtr& f) {
    std::string out;
    render_f(f, out);
    return out;
}

std::string formula_key(const FormulaPtr& f) {
    return render_formula(f);
}

} // namespace derivus
