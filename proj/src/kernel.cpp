#include "derivus/kernel.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace derivus {

bool MathSystem::in_basis(const FormulaPtr& f) const {
    std::string k = formula_key(f);
    for (const auto& ax : basis)
        if (formula_key(ax) == k) return true;
    return scheme && scheme(f);
}

bool MathSystem::basis_is_embedded() const {
    if (scheme) return false;
    if (basis.size() != sys.basis.size()) return false;
    std::multiset<std::string> a, b;
    for (const auto& f : basis) a.insert(formula_key(f));
    for (const auto& f : sys.basis) b.insert(formula_key(f));
    return a == b;
}

MathSystem wrap_system(const RecursiveSystem& s) {
    MathSystem m;
    m.sys = s;
    m.table = s.table;
    m.basis = s.basis;
    return m;
}

void validate_msystem(const MathSystem& m) {
    validate_system(m.sys);
    if (!m.sys.table.extended_by(m.table))
        throw std::invalid_argument("alphabet must extend the embedded system's");
    for (const auto& ax : m.sys.basis) {
        std::string k = formula_key(ax);
        bool kept = false;
        for (const auto& f : m.basis)
            if (formula_key(f) == k) { kept = true; break; }
        if (!kept)
            throw std::invalid_argument("embedded axiom missing from the basis: " +
                                        render_formula(ax));
    }
    for (const auto& f : m.basis)
        if (!formula_over(f, m.table))
            throw std::invalid_argument("basis axiom outside the alphabet: " +
                                        render_formula(f));
}

MathSystem extend_with(const MathSystem& m, const FormulaPtr& statement) {
    if (!formula_over(statement, m.table))
        throw std::invalid_argument("statement outside the alphabet");
    MathSystem out = m;
    out.basis.push_back(statement);
    return out;
}

MathSystem extend_symbols(const MathSystem& m, const std::vector<std::string>& constants) {
    MathSystem out = m;
    for (const auto& c : constants) out.table.add_constant(c);
    return out;
}

bool is_equality_axiom(const FormulaPtr& f, const SymbolTable& tab) {
    return is_equality_raxiom(f, tab);
}

// -> forall x F  F
static bool quant_a(const FormulaPtr& f) {
    if (!f || f->kind != Formula::Impl) return false;
    const FormulaPtr& l = f->a;
    return l && l->kind == Formula::Forall && equal(l->a, f->b);
}

// -> forall x -> F G  -> F forall x G   with x not free in F
static bool quant_b(const FormulaPtr& f) {
    if (!f || f->kind != Formula::Impl) return false;
    const FormulaPtr& l = f->a;
    const FormulaPtr& r = f->b;
    if (!l || l->kind != Formula::Forall) return false;
    const FormulaPtr& li = l->a;
    if (!li || li->kind != Formula::Impl) return false;
    if (!r || r->kind != Formula::Impl) return false;
    const FormulaPtr& rg = r->b;
    if (!rg || rg->kind != Formula::Forall || rg->var != l->var) return false;
    if (!equal(li->a, r->a) || !equal(li->b, rg->a)) return false;
    return free_vars(li->a).count(l->var) == 0;
}

// <-> ! forall x ! F  exists x F
static bool quant_c(const FormulaPtr& f) {
    if (!f || f->kind != Formula::Iff) return false;
    const FormulaPtr& l = f->a;
    const FormulaPtr& r = f->b;
    if (!r || r->kind != Formula::Exists) return false;
    if (!l || l->kind != Formula::Neg) return false;
    const FormulaPtr& la = l->a;
    if (!la || la->kind != Formula::Forall || la->var != r->var) return false;
    const FormulaPtr& lb = la->a;
    return lb && lb->kind == Formula::Neg && equal(lb->a, r->a);
}

bool is_quantifier_axiom(const FormulaPtr& f, char variant) {
    switch (variant) {
        case 'a': return quant_a(f);
        case 'b': return quant_b(f);
        case 'c': return quant_c(f);
        default:  return quant_a(f) || quant_b(f) || quant_c(f);
    }
}

FormulaPtr induction_image(const FormulaPtr& f, const std::string& p,
                           const std::vector<int>& xs, const FormulaPtr& g) {
    if (!f) return f;
    switch (f->kind) {
        case Formula::Eq:
            return f;
        case Formula::Pred: {
            if (f->sym != p || f->args.size() != xs.size()) return f;
            // The basis shares no variables with the xs, so chaining the
            // single substitutions equals the simultaneous one.
            FormulaPtr out = g;
            for (size_t i = 0; i < xs.size(); ++i)
                out = sbf(out, f->args[i], xs[i]);
            return out;
        }
        case Formula::Neg:
            return mk_neg(induction_image(f->a, p, xs, g));
        case Formula::Forall:
        case Formula::Exists:
            return mk_quant(f->kind, f->var, induction_image(f->a, p, xs, g));
        default:
            return mk_binary(f->kind, induction_image(f->a, p, xs, g),
                             induction_image(f->b, p, xs, g));
    }
}

static std::set<int> basis_vars(const RecursiveSystem& s) {
    std::set<int> out;
    for (const auto& ax : s.basis) {
        std::set<int> v = vars_of(ax);
        out.insert(v.begin(), v.end());
    }
    return out;
}

ProofCheck check_proof(const ProofScript& script, const MathSystem& m,
                       const ListPolicy& policy, int atom_cap) {
    ProofCheck res;
    auto fail = [&](int i, std::string msg) {
        res.ok = false;
        res.step = i;
        res.message = std::move(msg);
        return res;
    };
    std::set<int> bsv = basis_vars(m.sys);
    for (int i = 0; i < int(script.size()); ++i) {
        const Step& st = script[i];
        if (!st.f) return fail(i, "missing formula");
        if (!formula_over(st.f, m.table))
            return fail(i, "formula uses symbols outside the system");
        if (!policy.admits_formula(st.f))
            return fail(i, "argument list outside the " + policy.name() + " lists");
        switch (st.rule) {
        case Step::PropAxiom: {
            TautologyResult r = is_prop_axiom(st.f, atom_cap);
            if (r.verdict == TautologyResult::TooManyAtoms)
                return fail(i, "propositional check over " + std::to_string(r.atoms) +
                               " distinct parts exceeds the cap");
            if (r.verdict != TautologyResult::Yes)
                return fail(i, "not an instance of an identically true formula");
            break;
        }
        case Step::EqAxiom:
            if (!is_equality_axiom(st.f, m.table))
                return fail(i, "not an equality axiom");
            break;
        case Step::QuantAxiom:
            if (!is_quantifier_axiom(st.f, st.variant))
                return fail(i, "not a quantifier axiom");
            break;
        case Step::BasisAxiom:
            if (!m.in_basis(st.f))
                return fail(i, "not a basis axiom");
            break;
        case Step::MP: {
            if (st.from < 0 || st.from >= i || st.impl < 0 || st.impl >= i)
                return fail(i, "detachment cites steps out of range");
            const FormulaPtr& maj = script[st.impl].f;
            if (maj->kind != Formula::Impl)
                return fail(i, "cited major premise is not an implication");
            if (!equal(maj->a, script[st.from].f))
                return fail(i, "minor premise does not match");
            if (!equal(maj->b, st.f))
                return fail(i, "conclusion does not match the implication");
            break;
        }
        case Step::Subst: {
            if (st.from < 0 || st.from >= i)
                return fail(i, "substitution cites a step out of range");
            if (st.var <= 0) return fail(i, "substitution needs a variable");
            if (st.repl.empty()) return fail(i, "substitution needs a list");
            if (!list_over(st.repl, m.table))
                return fail(i, "substitution list uses symbols outside the system");
            if (!policy.admits(st.repl))
                return fail(i, "substitution list outside the " + policy.name() + " lists");
            const FormulaPtr& src = script[st.from].f;
            if (!cf(src, st.repl, st.var))
                return fail(i, "substitution is not collision-free");
            if (!equal(st.f, sbf(src, st.repl, st.var)))
                return fail(i, "formula is not the substitution result");
            break;
        }
        case Step::Gen: {
            if (st.from < 0 || st.from >= i)
                return fail(i, "generalization cites a step out of range");
            if (st.f->kind != Formula::Forall || st.f->var != st.var ||
                !equal(st.f->a, script[st.from].f))
                return fail(i, "formula is not the cited step generalized");
            break;
        }
        case Step::Induction: {
            if (!m.sys.table.has_predicate(st.pred))
                return fail(i, "induction predicate is not part of the embedded system");
            std::set<int> distinct(st.ivars.begin(), st.ivars.end());
            if (distinct.size() != st.ivars.size())
                return fail(i, "induction variables must be distinct");
            for (int v : st.ivars)
                if (v <= 0) return fail(i, "induction variables must be positive");
            FormulaPtr g = st.g;
            if (!g) {
                if (st.f->kind != Formula::Impl)
                    return fail(i, "induction conclusion must be an implication");
                g = st.f->b;
            }
            std::vector<List> xargs;
            for (int v : st.ivars) xargs.push_back(List{Item::variable(v)});
            if (!equal(st.f, mk_impl(mk_pred(st.pred, xargs), g)))
                return fail(i, "induction conclusion must detach the predicate into the formula");
            std::set<int> used = vars_of(g);
            used.insert(st.ivars.begin(), st.ivars.end());
            for (int v : used)
                if (bsv.count(v))
                    return fail(i, "induction variables collide with the basis");
            size_t arity = st.ivars.size();
            std::set<int> needed;
            for (int k = 0; k < int(m.sys.basis.size()); ++k) {
                FormulaPtr c = rconclusion(m.sys.basis[k]);
                if (c && c->kind == Formula::Pred && c->sym == st.pred &&
                    c->args.size() == arity)
                    needed.insert(k);
            }
            for (const auto& [k, idx] : st.premises) {
                if (!needed.count(k))
                    return fail(i, "premise cited for an axiom that does not conclude in the predicate");
                if (idx < 0 || idx >= i)
                    return fail(i, "induction premise out of range");
                FormulaPtr image = induction_image(m.sys.basis[k], st.pred, st.ivars, g);
                if (!equal(script[idx].f, image))
                    return fail(i, "induction premise does not match the transformed axiom");
            }
            for (int k : needed)
                if (!st.premises.count(k))
                    return fail(i, "missing induction premise for a basis axiom");
            break;
        }
        }
    }
    return res;
}

ProofScript lift_rderivation(const std::vector<RStep>& steps) {
    ProofScript out;
    out.reserve(steps.size());
    for (const RStep& r : steps) {
        Step st;
        st.f = r.f;
        switch (r.just) {
            case RStep::EqAxiom: st.rule = Step::EqAxiom; break;
            case RStep::Basis:   st.rule = Step::BasisAxiom; break;
            case RStep::MP:
                st.rule = Step::MP;
                st.from = r.from;
                st.impl = r.impl;
                break;
            case RStep::Subst:
                st.rule = Step::Subst;
                st.from = r.from;
                st.var = r.var;
                st.repl = r.repl;
                break;
        }
        out.push_back(std::move(st));
    }
    return out;
}

std::function<bool(const FormulaPtr&)> induction_scheme(const SymbolTable& tab) {
    if (!tab.has_constant("0") || !tab.has_constant("s"))
        throw std::invalid_argument("the induction scheme needs the constants 0 and s");
    return [tab](const FormulaPtr& f) -> bool {
        // -> forall x & F(0/x) -> F F(s(x)/x)  forall x F
        if (!f || f->kind != Formula::Impl) return false;
        const FormulaPtr& l = f->a;
        const FormulaPtr& r = f->b;
        if (!r || r->kind != Formula::Forall) return false;
        int x = r->var;
        const FormulaPtr& F = r->a;
        if (!l || l->kind != Formula::Forall || l->var != x) return false;
        const FormulaPtr& body = l->a;
        if (!body || body->kind != Formula::And) return false;
        const FormulaPtr& stepf = body->b;
        if (!stepf || stepf->kind != Formula::Impl) return false;
        if (!equal(stepf->a, F)) return false;
        if (!formula_over(F, tab)) return false;
        static const ListPolicy num = numerals_policy();
        if (!num.admits_formula(F)) return false;
        List zero{Item::constant("0")};
        List succ{Item::op("s", List{Item::variable(x)})};
        return equal(body->a, sbf(F, zero, x)) && equal(stepf->b, sbf(F, succ, x));
    };
}

MathSystem pa_system() {
    MathSystem m;
    for (const char* c : {"0", "s", "+", "*"}) m.table.add_constant(c);
    const char* axioms[] = {
        "forall x1 ~ +(0 x1) , x1",
        "forall x1 forall x2 ~ +(s(x1) x2) , s(+(x1 x2))",
        "forall x1 ~ *(0 x1) , 0",
        "forall x1 forall x2 ~ *(s(x1) x2) , +(*(x1 x2) x2)",
        "forall x1 forall x2 -> ~ s(x1) , s(x2) ~ x1 , x2",
        "forall x1 ! ~ s(x1) , 0",
    };
    for (const char* a : axioms) m.basis.push_back(parse_formula(a, m.table));
    m.scheme = induction_scheme(m.table);
    m.scheme_name = "induction";
    return m;
}

ListPolicy pa_policy() { return numerals_policy(); }

} // namespace derivus
