#include "derivus/zhom.hpp"

#include "derivus/builder.hpp"

#include <algorithm>
#include <stdexcept>

namespace derivus {

std::set<int> ZHomSpec::zset() const {
    std::set<int> zs;
    switch (kind) {
    case EraseOpTerms:
        for (const auto& [sym, v] : delta) zs.insert(v);
        break;
    case CollapseToAtoms:
    case CollapseToVariables:
        zs.insert(z);
        break;
    case ConstantsToVars:
        for (const auto& [sym, v] : consts) zs.insert(v);
        break;
    }
    return zs;
}

namespace {

Item map_item_consts(const Item& it, const ZHomSpec& spec) {
    switch (it.kind) {
    case Item::Const: {
        auto found = spec.consts.find(it.sym);
        return found == spec.consts.end() ? it : Item::variable(found->second);
    }
    case Item::Var:
        return it;
    case Item::Op: {
        List inner;
        for (const Item& sub : it.inner) inner.push_back(map_item_consts(sub, spec));
        return Item::op(it.sym, std::move(inner));
    }
    }
    throw std::logic_error("unreachable");
}

} // namespace

List zhom_list(const List& l, const ZHomSpec& spec) {
    switch (spec.kind) {
    case ZHomSpec::EraseOpTerms: {
        List out;
        for (const Item& it : l) {
            if (it.kind != Item::Op) {
                out.push_back(it);
                continue;
            }
            auto found = spec.delta.find(it.sym);
            if (found == spec.delta.end())
                throw std::invalid_argument("zhom: no image for operation symbol " + it.sym);
            out.push_back(Item::variable(found->second));
        }
        return out;
    }
    case ZHomSpec::CollapseToAtoms:
        if (l.size() == 1 && l[0].kind != Item::Op) return l;
        return {Item::variable(spec.z)};
    case ZHomSpec::CollapseToVariables:
        if (l.size() == 1 && l[0].kind == Item::Var) return l;
        return {Item::variable(spec.z)};
    case ZHomSpec::ConstantsToVars: {
        List out;
        for (const Item& it : l) out.push_back(map_item_consts(it, spec));
        return out;
    }
    }
    throw std::logic_error("unreachable");
}

FormulaPtr zhom_formula(const FormulaPtr& f, const ZHomSpec& spec) {
    switch (f->kind) {
    case Formula::Eq:
        return mk_eq(zhom_list(f->args[0], spec), zhom_list(f->args[1], spec));
    case Formula::Pred: {
        std::vector<List> args;
        for (const List& l : f->args) args.push_back(zhom_list(l, spec));
        return mk_pred(f->sym, std::move(args));
    }
    case Formula::Neg:
        return mk_neg(zhom_formula(f->a, spec));
    case Formula::Impl:
    case Formula::Iff:
    case Formula::And:
    case Formula::Or:
        return mk_binary(f->kind, zhom_formula(f->a, spec), zhom_formula(f->b, spec));
    case Formula::Forall:
    case Formula::Exists:
        if (spec.zset().count(f->var))
            throw std::invalid_argument("zhom: a reserved variable is quantified");
        return mk_quant(f->kind, f->var, zhom_formula(f->a, spec));
    }
    throw std::logic_error("unreachable");
}

ProofScript zhom_proof(const ProofScript& proof, const ZHomSpec& spec) {
    std::set<int> zs = spec.zset();
    ProofScript out;
    for (const Step& st : proof) {
        for (int v : vars_of(st.f))
            if (zs.count(v))
                throw std::invalid_argument("zhom: a proof step involves a reserved variable");
        Step ns = st;
        ns.f = zhom_formula(st.f, spec);
        if (st.rule == Step::Subst) {
            if (zs.count(st.var))
                throw std::invalid_argument("zhom: a substitution targets a reserved variable");
            ns.repl = zhom_list(st.repl, spec);
        }
        if (st.rule == Step::Induction && st.g) ns.g = zhom_formula(st.g, spec);
        out.push_back(std::move(ns));
    }
    return out;
}

namespace {

int fresh_var_for(const MathSystem& m, const ProofScript& proof) {
    std::vector<FormulaPtr> fs = m.basis;
    fs.insert(fs.end(), m.sys.basis.begin(), m.sys.basis.end());
    std::set<int> more;
    for (const Step& st : proof) {
        fs.push_back(st.f);
        if (st.g) fs.push_back(st.g);
        for (int v : vars_of(st.repl)) more.insert(v);
    }
    return fresh_var_above(fs, more);
}

} // namespace

ZHomSpec erase_op_terms(const MathSystem& m, const ProofScript& proof) {
    ZHomSpec spec;
    spec.kind = ZHomSpec::EraseOpTerms;
    int z = fresh_var_for(m, proof);
    for (const std::string& a : m.table.constants) spec.delta[a] = z;
    return spec;
}

ZHomSpec collapse_to_atoms(const MathSystem& m, const ProofScript& proof) {
    ZHomSpec spec;
    spec.kind = ZHomSpec::CollapseToAtoms;
    spec.z = fresh_var_for(m, proof);
    return spec;
}

ZHomSpec collapse_to_variables(const MathSystem& m, const ProofScript& proof) {
    ZHomSpec spec;
    spec.kind = ZHomSpec::CollapseToVariables;
    spec.z = fresh_var_for(m, proof);
    return spec;
}

namespace {

void collect_fresh_constants(const List& l, const SymbolTable& base, std::set<std::string>& out) {
    for (const Item& it : l) {
        if (it.kind == Item::Var) continue;
        if (!base.has_constant(it.sym)) out.insert(it.sym);
        if (it.kind == Item::Op) collect_fresh_constants(it.inner, base, out);
    }
}

} // namespace

GeneralizeResult generalize_constants(const ProofScript& proof, const MathSystem& base,
                                      const std::vector<std::pair<std::string, int>>& binding,
                                      const FormulaPtr& f, const ListPolicy& policy) {
    if (proof.empty())
        throw std::invalid_argument("generalize: empty proof");
    std::set<std::string> fresh;
    for (const Step& st : proof)
        for (const List& l : argument_lists(st.f))
            collect_fresh_constants(l, base.table, fresh);
    std::set<std::string> seen_c;
    std::set<int> seen_x;
    for (const auto& [c, x] : binding) {
        if (base.table.has_constant(c))
            throw std::invalid_argument("generalize: " + c + " already names a base constant");
        if (!seen_c.insert(c).second || !seen_x.insert(x).second)
            throw std::invalid_argument("generalize: binding entries must be distinct");
        fresh.insert(c);
    }

    std::vector<std::string> ordered(fresh.begin(), fresh.end());
    MathSystem ext = extend_symbols(base, ordered);
    ListPolicy ext_policy = extension_policy(policy, fresh);
    ProofCheck pc = check_proof(proof, ext, ext_policy);
    if (!pc.ok)
        throw std::invalid_argument("generalize: input proof rejected at step " +
                                    std::to_string(pc.step + 1) + ": " + pc.message);

    std::set<int> avoid = vars_of(f);
    std::vector<FormulaPtr> fs;
    for (const Step& st : proof) fs.push_back(st.f);
    fs.insert(fs.end(), base.sys.basis.begin(), base.sys.basis.end());
    int next = fresh_var_above(fs, avoid);

    ZHomSpec spec;
    spec.kind = ZHomSpec::ConstantsToVars;
    for (const std::string& c : ordered) spec.consts[c] = next++;

    ProofScript img = zhom_proof(proof, spec);

    FormulaPtr expected = f;
    for (const auto& [c, x] : binding)
        expected = sbf(expected, {Item::variable(spec.consts.at(c))}, x);
    if (!equal(img.back().f, expected))
        throw std::invalid_argument("generalize: the proof does not end in the instance of the formula");

    ProofScript out = std::move(img);
    int cur = static_cast<int>(out.size()) - 1;
    for (const auto& [c, x] : binding) {
        Step st;
        st.rule = Step::Subst;
        st.from = cur;
        st.var = spec.consts.at(c);
        st.repl = {Item::variable(x)};
        st.f = sbf(out[cur].f, st.repl, st.var);
        out.push_back(std::move(st));
        cur = static_cast<int>(out.size()) - 1;
    }
    for (auto it = binding.rbegin(); it != binding.rend(); ++it) {
        Step st;
        st.rule = Step::Gen;
        st.from = cur;
        st.var = it->second;
        st.f = mk_forall(it->second, out[cur].f);
        out.push_back(std::move(st));
        cur = static_cast<int>(out.size()) - 1;
    }

    FormulaPtr statement = out[cur].f;
    return {std::move(out), std::move(statement)};
}

} // namespace derivus
