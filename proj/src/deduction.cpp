#include "derivus/deduction.hpp"

#include <stdexcept>

namespace derivus {

namespace {

std::set<int> basis_vars(const MathSystem& m) {
    std::set<int> vs;
    for (const FormulaPtr& f : m.sys.basis)
        for (int v : vars_of(f)) vs.insert(v);
    return vs;
}

} // namespace

DeductionResult deduce(const ProofScript& proof, const MathSystem& m,
                       const FormulaPtr& phi, const ListPolicy& policy) {
    if (!free_vars(phi).empty())
        throw std::invalid_argument("deduce: the discharged formula must be a statement");
    if (!policy.admits_formula(phi))
        throw std::invalid_argument("deduce: the statement violates the list policy");
    ProofCheck pc = check_proof(proof, extend_with(m, phi), policy);
    if (!pc.ok)
        throw std::invalid_argument("deduce: input proof rejected at step " +
                                    std::to_string(pc.step + 1) + ": " + pc.message);

    ScriptBuilder b;
    std::vector<int> image(proof.size(), -1);
    const std::string phik = formula_key(phi);

    // Set up lazily at the first Induction step: a variant of phi whose
    // bound variables avoid the basis, and the proof that it is
    // equivalent to phi.
    FormulaPtr psi;
    int e_phipsi = -1;
    std::set<int> bsv = basis_vars(m);

    for (size_t i = 0; i < proof.size(); ++i) {
        const Step& st = proof[i];
        switch (st.rule) {
        case Step::PropAxiom:
        case Step::EqAxiom:
        case Step::QuantAxiom:
        case Step::BasisAxiom: {
            if (formula_key(st.f) == phik) {
                image[i] = b.prop(mk_impl(phi, phi));
                break;
            }
            int a;
            switch (st.rule) {
            case Step::PropAxiom: a = b.prop(st.f); break;
            case Step::EqAxiom: a = b.eq_axiom(st.f); break;
            case Step::QuantAxiom: a = b.quant(st.f, st.variant); break;
            default: a = b.basis(st.f); break;
            }
            int t = b.prop(mk_impl(st.f, mk_impl(phi, st.f)));
            image[i] = b.mp_chain(a, t);
            break;
        }
        case Step::MP: {
            int p_minor = image[st.from];
            int p_major = image[st.impl];
            int t = b.prop(mk_impl(b.steps[p_minor].f,
                                   mk_impl(b.steps[p_major].f, mk_impl(phi, st.f))));
            int m1 = b.mp_chain(p_minor, t);
            image[i] = b.mp_chain(p_major, m1);
            break;
        }
        case Step::Subst:
            // phi is a statement, so the substitution passes through it.
            image[i] = b.subst(image[st.from], st.var, st.repl);
            break;
        case Step::Gen: {
            int g1 = b.gen(image[st.from], st.var);
            int q = b.quant(mk_impl(b.steps[g1].f, mk_impl(phi, st.f)), 'b');
            image[i] = b.mp_chain(g1, q);
            break;
        }
        case Step::Induction: {
            if (e_phipsi < 0) {
                int next_fresh = fresh_var_above({phi}, bsv);
                if (next_fresh < 10001) next_fresh = 10001;
                auto [ps, e] = prove_freshen_bound(b, phi, bsv, next_fresh);
                psi = ps;
                e_phipsi = e;
            }
            FormulaPtr g = st.g ? st.g : st.f->b;
            FormulaPtr gpsi = mk_impl(psi, g);
            std::map<int, int> premises;
            for (const auto& [k, idx] : st.premises) {
                const FormulaPtr& fprime = proof[idx].f;
                FormulaPtr fpsi = induction_image(m.sys.basis[k], st.pred, st.ivars, gpsi);
                int t = b.prop(mk_impl(mk_impl(psi, fprime), fpsi));
                int gl = b.prop(mk_impl(b.steps[e_phipsi].f,
                                        mk_impl(mk_impl(phi, fprime), mk_impl(psi, fprime))));
                int m1 = b.mp_chain(e_phipsi, gl);
                int m2 = b.mp_chain(image[idx], m1);
                premises[k] = b.mp_chain(m2, t);
            }
            std::vector<List> xargs;
            for (int v : st.ivars) xargs.push_back({Item::variable(v)});
            FormulaPtr concl = mk_impl(mk_pred(st.pred, xargs), gpsi);
            int r1 = b.induction(concl, st.pred, st.ivars, gpsi, premises);
            int r2 = b.prop(mk_impl(concl, mk_impl(b.steps[e_phipsi].f, mk_impl(phi, st.f))));
            int r3 = b.mp_chain(r1, r2);
            image[i] = b.mp_chain(e_phipsi, r3);
            break;
        }
        }
    }

    ProofScript script = std::move(b.steps);
    // Deduplication can leave the final weakened formula mid-script;
    // restate it so the proof ends with its goal.
    if (!image.empty() && image.back() != static_cast<int>(script.size()) - 1) {
        int last = image.back();
        Step t;
        t.f = mk_impl(script[last].f, script[last].f);
        t.rule = Step::PropAxiom;
        script.push_back(std::move(t));
        Step r;
        r.f = script[last].f;
        r.rule = Step::MP;
        r.from = last;
        r.impl = static_cast<int>(script.size()) - 1;
        script.push_back(std::move(r));
        image.back() = static_cast<int>(script.size()) - 1;
    }
    return {std::move(script), std::move(image)};
}

ProofScript deduce_multi(const ProofScript& proof, const MathSystem& m,
                         const std::vector<FormulaPtr>& phis,
                         const ListPolicy& policy) {
    std::vector<MathSystem> chain;
    chain.push_back(m);
    for (const FormulaPtr& phi : phis)
        chain.push_back(extend_with(chain.back(), phi));
    ProofScript cur = proof;
    for (int i = static_cast<int>(phis.size()) - 1; i >= 0; --i)
        cur = deduce(cur, chain[i], phis[i], policy).script;
    return cur;
}

ProofScript by_contradiction(const ProofScript& proof, const MathSystem& m,
                             const FormulaPtr& phi, const ListPolicy& policy) {
    FormulaPtr notphi = mk_neg(phi);
    ProofCheck pc = check_proof(proof, extend_with(m, notphi), policy);
    if (!pc.ok)
        throw std::invalid_argument("by_contradiction: input proof rejected at step " +
                                    std::to_string(pc.step + 1) + ": " + pc.message);

    // Locate a formula appearing both plain and negated.
    std::map<std::string, int> seen;
    int at = -1, at_neg = -1;
    for (size_t i = 0; i < proof.size() && at < 0; ++i)
        seen.emplace(formula_key(proof[i].f), static_cast<int>(i));
    for (size_t i = 0; i < proof.size() && at < 0; ++i) {
        if (proof[i].f->kind != Formula::Neg) continue;
        auto it = seen.find(formula_key(proof[i].f->a));
        if (it != seen.end()) {
            at = it->second;
            at_neg = static_cast<int>(i);
        }
    }
    if (at < 0)
        throw std::invalid_argument("by_contradiction: no formula appears with its negation");

    ProofScript ext = proof;
    const FormulaPtr& contra = proof[at].f;
    Step s1;
    s1.f = mk_impl(contra, mk_impl(mk_neg(contra), phi));
    s1.rule = Step::PropAxiom;
    ext.push_back(s1);
    Step s2;
    s2.f = s1.f->b;
    s2.rule = Step::MP;
    s2.from = at;
    s2.impl = static_cast<int>(ext.size()) - 1;
    ext.push_back(s2);
    Step s3;
    s3.f = phi;
    s3.rule = Step::MP;
    s3.from = at_neg;
    s3.impl = static_cast<int>(ext.size()) - 1;
    ext.push_back(s3);

    DeductionResult dr = deduce(ext, m, notphi, policy);
    ProofScript out = std::move(dr.script);
    int k = dr.image.back();

    Step t2;
    t2.f = mk_impl(out[k].f, phi);
    t2.rule = Step::PropAxiom;
    out.push_back(t2);
    Step fin;
    fin.f = phi;
    fin.rule = Step::MP;
    fin.from = k;
    fin.impl = static_cast<int>(out.size()) - 1;
    out.push_back(fin);
    return out;
}

} // namespace derivus
