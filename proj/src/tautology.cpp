#include "derivus/tautology.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>

namespace derivus {

PropPtr mk_atom(int i) {
    if (i <= 0) throw std::invalid_argument("atoms are numbered from 1");
    auto p = std::make_shared<Prop>();
    p->kind = Prop::Atom;
    p->atom = i;
    return p;
}

PropPtr mk_pneg(PropPtr a) {
    auto p = std::make_shared<Prop>();
    p->kind = Prop::Neg;
    p->a = std::move(a);
    return p;
}

PropPtr mk_pbin(Prop::Kind k, PropPtr a, PropPtr b) {
    if (k == Prop::Atom || k == Prop::Neg)
        throw std::invalid_argument("mk_pbin needs a binary connective");
    auto p = std::make_shared<Prop>();
    p->kind = k;
    p->a = std::move(a);
    p->b = std::move(b);
    return p;
}

bool eval_prop(const PropPtr& p, const std::vector<bool>& values) {
    switch (p->kind) {
    case Prop::Atom:
        if (size_t(p->atom) > values.size())
            throw std::invalid_argument("valuation is not total");
        return values[p->atom - 1];
    case Prop::Neg:  return !eval_prop(p->a, values);
    case Prop::Impl: return !eval_prop(p->a, values) || eval_prop(p->b, values);
    case Prop::Iff:  return eval_prop(p->a, values) == eval_prop(p->b, values);
    case Prop::And:  return eval_prop(p->a, values) && eval_prop(p->b, values);
    case Prop::Or:   return eval_prop(p->a, values) || eval_prop(p->b, values);
    }
    return false;
}

static PropPtr abstract_rec(const FormulaPtr& f, std::map<std::string, int>& ids,
                            std::vector<FormulaPtr>& atoms) {
    switch (f->kind) {
    case Formula::Neg:
        return mk_pneg(abstract_rec(f->a, ids, atoms));
    case Formula::Impl:
        return mk_pbin(Prop::Impl, abstract_rec(f->a, ids, atoms),
                       abstract_rec(f->b, ids, atoms));
    case Formula::Iff:
        return mk_pbin(Prop::Iff, abstract_rec(f->a, ids, atoms),
                       abstract_rec(f->b, ids, atoms));
    case Formula::And:
        return mk_pbin(Prop::And, abstract_rec(f->a, ids, atoms),
                       abstract_rec(f->b, ids, atoms));
    case Formula::Or:
        return mk_pbin(Prop::Or, abstract_rec(f->a, ids, atoms),
                       abstract_rec(f->b, ids, atoms));
    default: {
        // Prime or quantified subformulas become the atoms.
        std::string key = formula_key(f);
        auto it = ids.find(key);
        if (it != ids.end()) return mk_atom(it->second);
        atoms.push_back(f);
        int id = int(atoms.size());
        ids[key] = id;
        return mk_atom(id);
    }
    }
}

Skeleton abstract_formula(const FormulaPtr& f) {
    Skeleton sk;
    std::map<std::string, int> ids;
    sk.shape = abstract_rec(f, ids, sk.atoms);
    return sk;
}

FormulaPtr concretize(const PropPtr& shape, const std::vector<FormulaPtr>& atoms) {
    switch (shape->kind) {
    case Prop::Atom:
        if (size_t(shape->atom) > atoms.size())
            throw std::invalid_argument("missing formula for an atom");
        return atoms[shape->atom - 1];
    case Prop::Neg:  return mk_neg(concretize(shape->a, atoms));
    case Prop::Impl: return mk_impl(concretize(shape->a, atoms), concretize(shape->b, atoms));
    case Prop::Iff:  return mk_iff(concretize(shape->a, atoms), concretize(shape->b, atoms));
    case Prop::And:  return mk_and(concretize(shape->a, atoms), concretize(shape->b, atoms));
    case Prop::Or:   return mk_or(concretize(shape->a, atoms), concretize(shape->b, atoms));
    }
    return nullptr;
}

bool identically_true(const PropPtr& shape, int atom_count) {
    if (atom_count < 0 || atom_count > 30)
        throw std::invalid_argument("atom count out of range");
    std::vector<bool> values(atom_count);
    for (uint32_t mask = 0; mask < (uint32_t(1) << atom_count); ++mask) {
        for (int i = 0; i < atom_count; ++i) values[i] = (mask >> i) & 1;
        if (!eval_prop(shape, values)) return false;
    }
    return true;
}

int default_atom_cap() {
    static const int cap = [] {
        const char* env = std::getenv("DERIVUS_MAX_ATOMS");
        if (!env || !*env) return 20;
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end || v < 1 || v > 30) return 20;
        return int(v);
    }();
    return cap;
}

TautologyResult is_prop_axiom(const FormulaPtr& f, int max_atoms) {
    if (max_atoms < 0) max_atoms = default_atom_cap();
    Skeleton sk = abstract_formula(f);
    TautologyResult r;
    r.atoms = int(sk.atoms.size());
    if (r.atoms > max_atoms) {
        r.verdict = TautologyResult::TooManyAtoms;
        return r;
    }
    r.verdict = identically_true(sk.shape, r.atoms) ? TautologyResult::Yes
                                                    : TautologyResult::No;
    return r;
}

} // namespace derivus
