#include "derivus/system.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace derivus {

bool list_over(const List& l, const SymbolTable& tab) {
    for (const Item& it : l) {
        if (it.kind == Item::Const && !tab.has_constant(it.sym)) return false;
        if (it.kind == Item::Op &&
            (!tab.has_constant(it.sym) || !list_over(it.inner, tab)))
            return false;
    }
    return true;
}

bool formula_over(const FormulaPtr& f, const SymbolTable& tab) {
    switch (f->kind) {
    case Formula::Eq:
        return list_over(f->args[0], tab) && list_over(f->args[1], tab);
    case Formula::Pred:
        if (!tab.has_predicate(f->sym)) return false;
        for (const List& l : f->args)
            if (!list_over(l, tab)) return false;
        return true;
    case Formula::Neg:
        return formula_over(f->a, tab);
    case Formula::Impl:
    case Formula::Iff:
    case Formula::And:
    case Formula::Or:
        return formula_over(f->a, tab) && formula_over(f->b, tab);
    case Formula::Forall:
    case Formula::Exists:
        return formula_over(f->a, tab);
    }
    return false;
}

void validate_system(const RecursiveSystem& s) {
    for (size_t i = 0; i < s.basis.size(); ++i) {
        const FormulaPtr& f = s.basis[i];
        if (!is_rformula(f))
            throw std::invalid_argument("basis axiom " + std::to_string(i + 1) +
                                        " is not an R-formula");
        if (!formula_over(f, s.table))
            throw std::invalid_argument("basis axiom " + std::to_string(i + 1) +
                                        " uses symbols outside the system");
    }
}

// ---------- Equality axioms ----------

static bool is_var_list(const List& l, int& v) {
    if (l.size() != 1 || l[0].kind != Item::Var) return false;
    v = l[0].var;
    return true;
}

bool is_equality_raxiom(const FormulaPtr& f, const SymbolTable& tab) {
    // (a)
    if (f->kind == Formula::Eq) {
        int x, y;
        return is_var_list(f->args[0], x) && is_var_list(f->args[1], y) && x == y;
    }
    if (f->kind != Formula::Impl) return false;

    // (b): -> SbF(~l,m;x;y) -> ~x,y ~l,m
    if (f->a->kind == Formula::Eq && f->b->kind == Formula::Impl &&
        f->b->a->kind == Formula::Eq && f->b->b->kind == Formula::Eq) {
        int x, y;
        if (is_var_list(f->b->a->args[0], x) && is_var_list(f->b->a->args[1], y)) {
            FormulaPtr concl = f->b->b;
            List xs = {Item::variable(x)};
            if (equal(f->a, sbf(concl, xs, y))) return true;
        }
    }

    // (c): -> ~x1,y1 ... -> ~xn,yn -> p x1..xn p y1..yn
    std::vector<FormulaPtr> parts = rpremises(f);
    FormulaPtr concl = rconclusion(f);
    size_t n = parts.empty() ? 0 : parts.size() - 1;
    if (n < 1) return false;
    FormulaPtr major = parts.back();
    if (major->kind != Formula::Pred || concl->kind != Formula::Pred) return false;
    if (major->sym != concl->sym || !tab.has_predicate(major->sym)) return false;
    if (major->args.size() != n || concl->args.size() != n) return false;
    for (size_t i = 0; i < n; ++i) {
        if (parts[i]->kind != Formula::Eq) return false;
        int xi, yi, mi, ci;
        if (!is_var_list(parts[i]->args[0], xi) || !is_var_list(parts[i]->args[1], yi))
            return false;
        if (!is_var_list(major->args[i], mi) || !is_var_list(concl->args[i], ci))
            return false;
        if (mi != xi || ci != yi) return false;
    }
    return true;
}

bool is_equality_instance(const FormulaPtr& f, const SymbolTable& tab) {
    if (is_equality_raxiom(f, tab)) return true;
    if (f->kind == Formula::Eq) return f->args[0] == f->args[1];
    if (f->kind != Formula::Impl) return false;

    // (b) instances
    if (f->a->kind == Formula::Eq && f->b->kind == Formula::Impl &&
        f->b->a->kind == Formula::Eq && f->b->b->kind == Formula::Eq) {
        const List& k1 = f->b->a->args[0];
        const List& k2 = f->b->a->args[1];
        const FormulaPtr& e2 = f->b->b;
        const FormulaPtr& e1 = f->a;
        if (rewrites_to(e2->args[0], e1->args[0], k2, k1) &&
            rewrites_to(e2->args[1], e1->args[1], k2, k1))
            return true;
    }

    // (c) instances
    std::vector<FormulaPtr> parts = rpremises(f);
    FormulaPtr concl = rconclusion(f);
    size_t n = parts.empty() ? 0 : parts.size() - 1;
    if (n < 1) return false;
    FormulaPtr major = parts.back();
    if (major->kind != Formula::Pred || concl->kind != Formula::Pred) return false;
    if (major->sym != concl->sym || !tab.has_predicate(major->sym)) return false;
    if (major->args.size() != n || concl->args.size() != n) return false;
    for (size_t i = 0; i < n; ++i) {
        if (parts[i]->kind != Formula::Eq) return false;
        if (!(parts[i]->args[0] == major->args[i])) return false;
        if (!(parts[i]->args[1] == concl->args[i])) return false;
    }
    return true;
}

// ---------- Derivation checking ----------

CheckResult check_rderivation(const std::vector<RStep>& steps,
                              const RecursiveSystem& s) {
    auto fail = [](int i, std::string m) {
        return CheckResult{false, i, std::move(m)};
    };
    for (size_t i = 0; i < steps.size(); ++i) {
        const RStep& st = steps[i];
        if (!st.f || !is_rformula(st.f))
            return fail(int(i), "step is not an R-formula");
        if (!formula_over(st.f, s.table))
            return fail(int(i), "step uses symbols outside the system");
        switch (st.just) {
        case RStep::EqAxiom:
            if (!is_equality_raxiom(st.f, s.table))
                return fail(int(i), "not an R-axiom of equality");
            break;
        case RStep::Basis:
            if (st.from < 0 || size_t(st.from) >= s.basis.size())
                return fail(int(i), "basis index out of range");
            if (!equal(st.f, s.basis[st.from]))
                return fail(int(i), "step differs from the cited basis axiom");
            break;
        case RStep::MP: {
            if (st.from < 0 || size_t(st.from) >= i || st.impl < 0 ||
                size_t(st.impl) >= i)
                return fail(int(i), "modus ponens references a later step");
            const FormulaPtr& maj = steps[st.impl].f;
            if (maj->kind != Formula::Impl)
                return fail(int(i), "major premise is not an implication");
            if (!equal(maj->a, steps[st.from].f))
                return fail(int(i), "minor premise does not match");
            if (!equal(maj->b, st.f))
                return fail(int(i), "conclusion does not match");
            break;
        }
        case RStep::Subst: {
            if (st.from < 0 || size_t(st.from) >= i)
                return fail(int(i), "substitution references a later step");
            if (st.var <= 0) return fail(int(i), "substitution needs a variable");
            if (st.repl.empty() || !list_over(st.repl, s.table))
                return fail(int(i), "substitution list is not over the system");
            if (!equal(st.f, sbf(steps[st.from].f, st.repl, st.var)))
                return fail(int(i), "substitution result does not match");
            break;
        }
        }
    }
    return {};
}

// ---------- Pattern matching ----------

static bool match_items(const List& pat, size_t pi, const List& inst, size_t ii,
                        Binding& b,
                        const std::function<bool(Binding&)>& k);

static bool match_item(const Item& p, const Item& t, Binding& b,
                       const std::function<bool(Binding&)>& k) {
    if (p.kind == Item::Const)
        return t.kind == Item::Const && t.sym == p.sym && k(b);
    if (p.kind == Item::Op)
        return t.kind == Item::Op && t.sym == p.sym &&
               match_items(p.inner, 0, t.inner, 0, b, k);
    return false;   // bare variables are consumed by match_items
}

static bool match_items(const List& pat, size_t pi, const List& inst, size_t ii,
                        Binding& b,
                        const std::function<bool(Binding&)>& k) {
    if (pi == pat.size())
        return ii == inst.size() && k(b);
    const Item& p = pat[pi];
    if (p.kind == Item::Var) {
        auto bound = b.find(p.var);
        if (bound != b.end()) {
            const List& seg = bound->second;
            if (ii + seg.size() > inst.size()) return false;
            for (size_t j = 0; j < seg.size(); ++j)
                if (inst[ii + j] != seg[j]) return false;
            return match_items(pat, pi + 1, inst, ii + seg.size(), b, k);
        }
        // Bind to every nonempty prefix of the rest.
        for (size_t len = 1; ii + len <= inst.size(); ++len) {
            b[p.var] = List(inst.begin() + ii, inst.begin() + ii + len);
            if (match_items(pat, pi + 1, inst, ii + len, b, k)) return true;
            b.erase(p.var);
        }
        return false;
    }
    if (ii == inst.size()) return false;
    return match_item(p, inst[ii], b,
                      [&](Binding& b2) { return match_items(pat, pi + 1, inst, ii + 1, b2, k); });
}

bool match_list(const List& pat, const List& inst, Binding& b) {
    return match_items(pat, 0, inst, 0, b, [](Binding&) { return true; });
}

bool match_prime(const FormulaPtr& pat, const FormulaPtr& inst, Binding& b) {
    if (pat->kind != inst->kind) return false;
    if (pat->kind == Formula::Pred &&
        (pat->sym != inst->sym || pat->args.size() != inst->args.size()))
        return false;
    // Chain the argument matches.
    std::function<bool(size_t, Binding&)> go = [&](size_t i, Binding& b2) -> bool {
        if (i == pat->args.size()) return true;
        return match_items(pat->args[i], 0, inst->args[i], 0, b2,
                           [&](Binding& b3) { return go(i + 1, b3); });
    };
    return go(0, b);
}

void match_list_all(const List& pat, const List& inst, const Binding& b,
                    std::vector<Binding>& out) {
    Binding work = b;
    match_items(pat, 0, inst, 0, work, [&](Binding& bb) {
        out.push_back(bb);
        return false;   // keep enumerating
    });
}

void match_prime_all(const FormulaPtr& pat, const FormulaPtr& inst,
                     const Binding& b, std::vector<Binding>& out) {
    if (pat->kind != inst->kind) return;
    if (pat->kind == Formula::Pred &&
        (pat->sym != inst->sym || pat->args.size() != inst->args.size()))
        return;
    Binding work = b;
    std::function<bool(size_t, Binding&)> go = [&](size_t i, Binding& b2) -> bool {
        if (i == pat->args.size()) {
            out.push_back(b2);
            return false;
        }
        return match_items(pat->args[i], 0, inst->args[i], 0, b2,
                           [&](Binding& b3) { return go(i + 1, b3); });
    };
    go(0, work);
}

List apply_binding(const List& l, const Binding& b) {
    List out;
    for (const Item& it : l) {
        if (it.kind == Item::Var) {
            auto found = b.find(it.var);
            if (found != b.end())
                out.insert(out.end(), found->second.begin(), found->second.end());
            else
                out.push_back(it);
        } else if (it.kind == Item::Op) {
            out.push_back(Item::op(it.sym, apply_binding(it.inner, b)));
        } else {
            out.push_back(it);
        }
    }
    return out;
}

FormulaPtr apply_binding(const FormulaPtr& f, const Binding& b) {
    switch (f->kind) {
    case Formula::Eq:
        return mk_eq(apply_binding(f->args[0], b), apply_binding(f->args[1], b));
    case Formula::Pred: {
        std::vector<List> as;
        as.reserve(f->args.size());
        for (const List& l : f->args) as.push_back(apply_binding(l, b));
        return mk_pred(f->sym, std::move(as));
    }
    default:
        break;
    }
    throw std::invalid_argument("apply_binding expects prime formulas");
}

bool instance_of(const FormulaPtr& pat, const FormulaPtr& inst) {
    std::vector<FormulaPtr> pp = rpremises(pat), ip = rpremises(inst);
    if (pp.size() != ip.size()) return false;
    FormulaPtr pc = rconclusion(pat), ic = rconclusion(inst);
    Binding b;
    std::function<bool(size_t, Binding&)> go = [&](size_t i, Binding& b2) -> bool {
        if (i == pp.size()) {
            std::vector<Binding> fin;
            match_prime_all(pc, ic, b2, fin);
            return !fin.empty();
        }
        std::vector<Binding> alts;
        match_prime_all(pp[i], ip[i], b2, alts);
        for (Binding& alt : alts)
            if (go(i + 1, alt)) return true;
        return false;
    };
    return go(0, b);
}

// ---------- Symbol projection ----------

List project_list(const List& l, const std::map<std::string, std::string>& gamma) {
    List out;
    for (const Item& it : l) {
        switch (it.kind) {
        case Item::Var:
            out.push_back(it);
            break;
        case Item::Const: {
            auto g = gamma.find(it.sym);
            out.push_back(Item::constant(g == gamma.end() ? it.sym : g->second));
            break;
        }
        case Item::Op: {
            auto g = gamma.find(it.sym);
            out.push_back(Item::op(g == gamma.end() ? it.sym : g->second,
                                   project_list(it.inner, gamma)));
            break;
        }
        }
    }
    return out;
}

FormulaPtr project_formula(const FormulaPtr& f,
                           const std::map<std::string, std::string>& gamma) {
    if (f->kind == Formula::Eq)
        return mk_eq(project_list(f->args[0], gamma), project_list(f->args[1], gamma));
    if (f->kind == Formula::Pred) {
        std::vector<List> as;
        for (const List& l : f->args) as.push_back(project_list(l, gamma));
        return mk_pred(f->sym, std::move(as));
    }
    if (f->kind == Formula::Impl)
        return mk_impl(project_formula(f->a, gamma), project_formula(f->b, gamma));
    throw std::invalid_argument("projection is defined on R-formulas");
}

std::vector<RStep> project_derivation(const std::vector<RStep>& steps,
                                      const RecursiveSystem& target,
                                      const std::map<std::string, std::string>& gamma) {
    for (const auto& [from, to] : gamma)
        if (!target.table.has_constant(to))
            throw std::invalid_argument("projection image " + to +
                                        " is not a symbol of the target system");
    std::vector<RStep> out;
    out.reserve(steps.size());
    for (const RStep& st : steps) {
        RStep n = st;
        n.f = project_formula(st.f, gamma);
        if (st.just == RStep::Subst) n.repl = project_list(st.repl, gamma);
        out.push_back(std::move(n));
    }
    return out;
}

// ---------- Avoidance of equations ----------

static bool contains_equation(const FormulaPtr& f) {
    if (f->kind == Formula::Eq) return true;
    if (f->kind == Formula::Impl)
        return contains_equation(f->a) || contains_equation(f->b);
    return false;
}

static bool is_trivial_impl(const FormulaPtr& f) {
    return f->kind == Formula::Impl && is_prime(f->a) && equal(f->a, f->b);
}

std::vector<RStep> strip_equation_steps(const std::vector<RStep>& steps,
                                        const RecursiveSystem& s) {
    for (const FormulaPtr& ax : s.basis)
        if (contains_equation(ax))
            throw std::invalid_argument("basis contains an equation");

    std::vector<int> remap(steps.size(), -1);
    std::vector<RStep> out;
    std::map<std::string, int> first;   // formula -> surviving step

    for (size_t i = 0; i < steps.size(); ++i) {
        const RStep& st = steps[i];
        if (contains_equation(st.f) || is_trivial_impl(st.f)) continue;
        RStep n = st;
        if (st.just == RStep::MP) {
            // If the major premise was dropped it had the form -> F F,
            // so this step repeats its minor premise.
            if (remap[st.impl] < 0) {
                remap[i] = remap[st.from];
                continue;
            }
            n.from = remap[st.from];
            n.impl = remap[st.impl];
            if (n.from < 0 || n.impl < 0)
                throw std::invalid_argument("derivation leans on an equation step");
        } else if (st.just == RStep::Subst) {
            n.from = remap[st.from];
            if (n.from < 0)
                throw std::invalid_argument("derivation leans on an equation step");
        }
        std::string key = formula_key(n.f);
        auto seen = first.find(key);
        if (seen != first.end()) {
            remap[i] = seen->second;
            continue;
        }
        remap[i] = int(out.size());
        first[key] = int(out.size());
        out.push_back(std::move(n));
    }
    return out;
}

static FormulaPtr star_formula(const FormulaPtr& f, const std::string& star) {
    if (f->kind == Formula::Eq)
        return mk_pred(star, {f->args[0], f->args[1]});
    if (f->kind == Formula::Pred) return f;
    if (f->kind == Formula::Impl)
        return mk_impl(star_formula(f->a, star), star_formula(f->b, star));
    throw std::invalid_argument("starring is defined on R-formulas");
}

RecursiveSystem eliminate_equations(const RecursiveSystem& s,
                                    const std::string& star) {
    RecursiveSystem out;
    out.table = s.table;
    out.table.add_predicate(star);

    auto v = [](int i) { return List{Item::variable(i)}; };
    auto vv = [](int i, int j) { return List{Item::variable(i), Item::variable(j)}; };
    auto st = [&](List a, List b) { return mk_pred(star, {std::move(a), std::move(b)}); };

    for (const FormulaPtr& f : s.basis)
        out.basis.push_back(star_formula(f, star));

    // Reflexivity, symmetry, transitivity.
    out.basis.push_back(st(v(1), v(1)));
    out.basis.push_back(mk_impl(st(v(1), v(1)), mk_impl(st(v(1), v(2)), st(v(2), v(1)))));
    out.basis.push_back(mk_impl(st(v(1), v(2)), mk_impl(st(v(2), v(3)), st(v(1), v(3)))));

    // Compatibility with the operations and with concatenation.
    for (const std::string& f : s.table.constants) {
        List fx = {Item::op(f, v(1))};
        List fy = {Item::op(f, v(2))};
        out.basis.push_back(mk_impl(st(fx, fx), mk_impl(st(v(1), v(2)), st(fx, fy))));
    }
    out.basis.push_back(mk_impl(st(vv(1, 3), vv(1, 3)),
                                mk_impl(st(v(3), v(4)), st(vv(1, 3), vv(1, 4)))));
    out.basis.push_back(mk_impl(st(vv(1, 3), vv(1, 4)),
                                mk_impl(st(v(1), v(2)), st(vv(1, 3), vv(2, 4)))));

    // Congruence for every arity a predicate actually uses in the basis.
    std::map<std::string, std::set<size_t>> arities;
    for (const FormulaPtr& f : s.basis) {
        std::vector<FormulaPtr> parts = rpremises(f);
        parts.push_back(rconclusion(f));
        for (const FormulaPtr& g : parts)
            if (g->kind == Formula::Pred) arities[g->sym].insert(g->args.size());
    }
    for (const std::string& p : s.table.predicates) {
        auto found = arities.find(p);
        if (found == arities.end()) continue;
        for (size_t n : found->second) {
            if (n == 0) continue;
            std::vector<List> xs, ys;
            for (size_t i = 1; i <= n; ++i) {
                xs.push_back(v(int(i)));
                ys.push_back(v(int(n + i)));
            }
            FormulaPtr g = mk_impl(mk_pred(p, xs), mk_pred(p, ys));
            for (size_t i = n; i >= 1; --i)
                g = mk_impl(st(v(int(i)), v(int(n + i))), g);
            out.basis.push_back(g);
        }
    }
    return out;
}

} // namespace derivus
