#include "derivus/builder.hpp"

#include <stdexcept>

namespace derivus {

int ScriptBuilder::have(const FormulaPtr& f) const {
    auto it = index.find(formula_key(f));
    return it == index.end() ? -1 : it->second;
}

int ScriptBuilder::push(Step st) {
    std::string key = formula_key(st.f);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    int idx = static_cast<int>(steps.size());
    steps.push_back(std::move(st));
    index.emplace(std::move(key), idx);
    return idx;
}

int ScriptBuilder::prop(FormulaPtr f) {
    Step st;
    st.f = std::move(f);
    st.rule = Step::PropAxiom;
    return push(std::move(st));
}

int ScriptBuilder::eq_axiom(FormulaPtr f) {
    Step st;
    st.f = std::move(f);
    st.rule = Step::EqAxiom;
    return push(std::move(st));
}

int ScriptBuilder::quant(FormulaPtr f, char variant) {
    Step st;
    st.f = std::move(f);
    st.rule = Step::QuantAxiom;
    st.variant = variant;
    return push(std::move(st));
}

int ScriptBuilder::basis(FormulaPtr f) {
    Step st;
    st.f = std::move(f);
    st.rule = Step::BasisAxiom;
    return push(std::move(st));
}

int ScriptBuilder::mp(FormulaPtr g, int minor, int major) {
    Step st;
    st.f = std::move(g);
    st.rule = Step::MP;
    st.from = minor;
    st.impl = major;
    return push(std::move(st));
}

int ScriptBuilder::mp_chain(int minor, int major) {
    const FormulaPtr& im = steps.at(major).f;
    if (im->kind != Formula::Impl)
        throw std::logic_error("mp_chain: major premise is not an implication");
    return mp(im->b, minor, major);
}

int ScriptBuilder::subst(int from, int var, List repl) {
    Step st;
    st.f = sbf(steps.at(from).f, repl, var);
    st.rule = Step::Subst;
    st.from = from;
    st.var = var;
    st.repl = std::move(repl);
    return push(std::move(st));
}

int ScriptBuilder::gen(int from, int var) {
    Step st;
    st.f = mk_forall(var, steps.at(from).f);
    st.rule = Step::Gen;
    st.from = from;
    st.var = var;
    return push(std::move(st));
}

int ScriptBuilder::induction(FormulaPtr f, std::string pred, std::vector<int> ivars,
                             FormulaPtr g, std::map<int, int> premises) {
    Step st;
    st.f = std::move(f);
    st.rule = Step::Induction;
    st.pred = std::move(pred);
    st.ivars = std::move(ivars);
    st.g = std::move(g);
    st.premises = std::move(premises);
    return push(std::move(st));
}

int fresh_var_above(const std::vector<FormulaPtr>& fs, const std::set<int>& more) {
    int top = 0;
    for (const FormulaPtr& f : fs)
        for (int v : vars_of(f))
            if (v > top) top = v;
    for (int v : more)
        if (v > top) top = v;
    return top + 1;
}

// ---------- Tactics ----------

int iff_refl(ScriptBuilder& b, const FormulaPtr& f) {
    return b.prop(mk_iff(f, f));
}

int iff_trans(ScriptBuilder& b, int e1, int e2) {
    const FormulaPtr& ab = b.steps.at(e1).f;
    const FormulaPtr& bc = b.steps.at(e2).f;
    FormulaPtr ac = mk_iff(ab->a, bc->b);
    int t = b.prop(mk_impl(ab, mk_impl(bc, ac)));
    int m1 = b.mp_chain(e1, t);
    return b.mp_chain(e2, m1);
}

int iff_neg(ScriptBuilder& b, int e) {
    const FormulaPtr& eq = b.steps.at(e).f;
    FormulaPtr goal = mk_iff(mk_neg(eq->a), mk_neg(eq->b));
    int t = b.prop(mk_impl(eq, goal));
    return b.mp_chain(e, t);
}

int iff_binary(ScriptBuilder& b, Formula::Kind k, int e1, int e2) {
    const FormulaPtr& eqf = b.steps.at(e1).f;
    const FormulaPtr& eqg = b.steps.at(e2).f;
    FormulaPtr goal = mk_iff(mk_binary(k, eqf->a, eqg->a), mk_binary(k, eqf->b, eqg->b));
    int t = b.prop(mk_impl(eqf, mk_impl(eqg, goal)));
    int m1 = b.mp_chain(e1, t);
    return b.mp_chain(e2, m1);
}

int prove_impl_distribution(ScriptBuilder& b, const FormulaPtr& f,
                            const FormulaPtr& g, int x) {
    FormulaPtr fg = mk_impl(f, g);
    FormulaPtr all_fg = mk_forall(x, fg);
    FormulaPtr all_f = mk_forall(x, f);
    FormulaPtr all_g = mk_forall(x, g);

    int s1 = b.quant(mk_impl(all_fg, fg), 'a');
    int s2 = b.quant(mk_impl(all_f, f), 'a');
    FormulaPtr w = mk_impl(all_fg, mk_impl(all_f, g));
    int s3 = b.prop(mk_impl(b.steps[s1].f, mk_impl(b.steps[s2].f, w)));
    int s4 = b.mp_chain(s1, s3);
    int s5 = b.mp_chain(s2, s4);
    int s6 = b.gen(s5, x);
    FormulaPtr inner = mk_forall(x, mk_impl(all_f, g));
    int s7 = b.quant(mk_impl(b.steps[s6].f, mk_impl(all_fg, inner)), 'b');
    int s8 = b.mp_chain(s6, s7);
    int s9 = b.quant(mk_impl(inner, mk_impl(all_f, all_g)), 'b');
    FormulaPtr goal = mk_impl(all_fg, mk_impl(all_f, all_g));
    int s10 = b.prop(mk_impl(b.steps[s8].f, mk_impl(b.steps[s9].f, goal)));
    int s11 = b.mp_chain(s8, s10);
    return b.mp_chain(s9, s11);
}

int iff_forall(ScriptBuilder& b, int e, int x) {
    const FormulaPtr& eq = b.steps.at(e).f;
    FormulaPtr f = eq->a, g = eq->b;
    int t1 = b.prop(mk_impl(eq, mk_impl(f, g)));
    int m1 = b.mp_chain(e, t1);
    int g1 = b.gen(m1, x);
    int d1 = prove_impl_distribution(b, f, g, x);
    int m2 = b.mp_chain(g1, d1);
    int t2 = b.prop(mk_impl(eq, mk_impl(g, f)));
    int m3 = b.mp_chain(e, t2);
    int g2 = b.gen(m3, x);
    int d2 = prove_impl_distribution(b, g, f, x);
    int m4 = b.mp_chain(g2, d2);
    FormulaPtr goal = mk_iff(mk_forall(x, f), mk_forall(x, g));
    int t3 = b.prop(mk_impl(b.steps[m2].f, mk_impl(b.steps[m4].f, goal)));
    int m5 = b.mp_chain(m2, t3);
    return b.mp_chain(m4, m5);
}

// from <-> N N', <-> N E, <-> N' E': <-> E E'
static int iff_bridge(ScriptBuilder& b, int nn, int c1, int c2) {
    const FormulaPtr& f_nn = b.steps.at(nn).f;
    const FormulaPtr& f_c1 = b.steps.at(c1).f;
    const FormulaPtr& f_c2 = b.steps.at(c2).f;
    FormulaPtr goal = mk_iff(f_c1->b, f_c2->b);
    int t = b.prop(mk_impl(f_nn, mk_impl(f_c1, mk_impl(f_c2, goal))));
    int m1 = b.mp_chain(nn, t);
    int m2 = b.mp_chain(c1, m1);
    return b.mp_chain(c2, m2);
}

int iff_exists(ScriptBuilder& b, int e, int x) {
    const FormulaPtr& eq = b.steps.at(e).f;
    FormulaPtr f = eq->a, g = eq->b;
    int n = iff_neg(b, e);
    int fa = iff_forall(b, n, x);
    int nn = iff_neg(b, fa);
    int c1 = b.quant(mk_iff(mk_neg(mk_forall(x, mk_neg(f))), mk_exists(x, f)), 'c');
    int c2 = b.quant(mk_iff(mk_neg(mk_forall(x, mk_neg(g))), mk_exists(x, g)), 'c');
    return iff_bridge(b, nn, c1, c2);
}

int prove_forall_rename(ScriptBuilder& b, const FormulaPtr& f, int x, int y) {
    if (vars_of(f).count(y))
        throw std::invalid_argument("rename target occurs in the formula");
    FormulaPtr all_x = mk_forall(x, f);
    int f1 = b.quant(mk_impl(all_x, f), 'a');
    int f2 = b.subst(f1, x, {Item::variable(y)});
    int f3 = b.gen(f2, y);
    FormulaPtr fy = sbf(f, {Item::variable(y)}, x);
    FormulaPtr all_y = mk_forall(y, fy);
    int f4 = b.quant(mk_impl(b.steps[f3].f, mk_impl(all_x, all_y)), 'b');
    int f5 = b.mp_chain(f3, f4);

    int b1 = b.quant(mk_impl(all_y, fy), 'a');
    int b2 = b.subst(b1, y, {Item::variable(x)});
    int b3 = b.gen(b2, x);
    int b4 = b.quant(mk_impl(b.steps[b3].f, mk_impl(all_y, all_x)), 'b');
    int b5 = b.mp_chain(b3, b4);

    FormulaPtr goal = mk_iff(all_x, all_y);
    int c1 = b.prop(mk_impl(b.steps[f5].f, mk_impl(b.steps[b5].f, goal)));
    int c2 = b.mp_chain(f5, c1);
    return b.mp_chain(b5, c2);
}

int prove_exists_rename(ScriptBuilder& b, const FormulaPtr& f, int x, int y) {
    int r = prove_forall_rename(b, mk_neg(f), x, y);
    int nn = iff_neg(b, r);
    FormulaPtr fy = sbf(f, {Item::variable(y)}, x);
    int c1 = b.quant(mk_iff(mk_neg(mk_forall(x, mk_neg(f))), mk_exists(x, f)), 'c');
    int c2 = b.quant(mk_iff(mk_neg(mk_forall(y, mk_neg(fy))), mk_exists(y, fy)), 'c');
    return iff_bridge(b, nn, c1, c2);
}

std::pair<FormulaPtr, int> prove_freshen_bound(ScriptBuilder& b, const FormulaPtr& f,
                                               const std::set<int>& bad,
                                               int& next_fresh) {
    switch (f->kind) {
    case Formula::Eq:
    case Formula::Pred:
        return {f, iff_refl(b, f)};
    case Formula::Neg: {
        auto [a, e] = prove_freshen_bound(b, f->a, bad, next_fresh);
        return {mk_neg(a), iff_neg(b, e)};
    }
    case Formula::Impl:
    case Formula::Iff:
    case Formula::And:
    case Formula::Or: {
        auto [a, e1] = prove_freshen_bound(b, f->a, bad, next_fresh);
        auto [a2, e2] = prove_freshen_bound(b, f->b, bad, next_fresh);
        return {mk_binary(f->kind, a, a2), iff_binary(b, f->kind, e1, e2)};
    }
    case Formula::Forall:
    case Formula::Exists: {
        bool all = f->kind == Formula::Forall;
        auto [body, e] = prove_freshen_bound(b, f->a, bad, next_fresh);
        int eq = all ? iff_forall(b, e, f->var) : iff_exists(b, e, f->var);
        if (!bad.count(f->var))
            return {mk_quant(f->kind, f->var, body), eq};
        std::set<int> used = vars_of(body);
        while (bad.count(next_fresh) || used.count(next_fresh)) ++next_fresh;
        int y = next_fresh++;
        int er = all ? prove_forall_rename(b, body, f->var, y)
                     : prove_exists_rename(b, body, f->var, y);
        int t = iff_trans(b, eq, er);
        return {mk_quant(f->kind, y, sbf(body, {Item::variable(y)}, f->var)), t};
    }
    }
    throw std::logic_error("unreachable");
}

} // namespace derivus
