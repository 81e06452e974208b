#pragma once

#include "derivus/formula.hpp"

#include <memory>
#include <vector>

namespace derivus {

// ---------- Propositional skeletons ----------
//
// A formula is abstracted by replacing its maximal prime or quantified
// subformulas with propositional atoms; structurally equal subformulas
// share an atom.  The formula is a propositional axiom iff its skeleton
// is identically true, checked by enumerating all 2^j valuations.

struct Prop;
using PropPtr = std::shared_ptr<const Prop>;

struct Prop {
    enum Kind { Atom, Neg, Impl, Iff, And, Or };
    Kind kind = Atom;
    int atom = 0;        // 1-based
    PropPtr a, b;
};

PropPtr mk_atom(int i);
PropPtr mk_pneg(PropPtr a);
PropPtr mk_pbin(Prop::Kind k, PropPtr a, PropPtr b);

// Valuation values[i-1] is the truth value of atom i.
bool eval_prop(const PropPtr& p, const std::vector<bool>& values);

struct Skeleton {
    PropPtr shape;
    std::vector<FormulaPtr> atoms;   // atoms[i-1] realizes atom i
};

Skeleton abstract_formula(const FormulaPtr& f);

// Substitutes the skeleton's atoms back; inverse of abstract_formula.
FormulaPtr concretize(const PropPtr& shape, const std::vector<FormulaPtr>& atoms);

bool identically_true(const PropPtr& shape, int atom_count);

struct TautologyResult {
    enum Verdict { Yes, No, TooManyAtoms };
    Verdict verdict = No;
    int atoms = 0;
};

// Atom cap from DERIVUS_MAX_ATOMS, default 20.
int default_atom_cap();

TautologyResult is_prop_axiom(const FormulaPtr& f, int max_atoms = -1);

} // namespace derivus
