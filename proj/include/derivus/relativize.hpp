#pragma once

#include "derivus/kernel.hpp"

#include <string>

namespace derivus {

// ---------- Relativized quantification ----------
//
// Confines a formula's quantifiers to the extension of a predicate p:
// forall becomes p-guarded implication, exists a p-guarded conjunction.
// Prime formulas are untouched, so for equation-only systems the
// translation commutes with substitution.

FormulaPtr relativize(const FormulaPtr& f, const std::string& p);

// -> p x_1 ... -> p x_n F over the free variables of F, first
// occurrence first.
FormulaPtr guard_block(const FormulaPtr& f, const std::string& p);

// Partial inverse of relativize for predicate-free f; null when the
// guards are not in place.
FormulaPtr unrelativize(const FormulaPtr& f, const std::string& p);

// Arithmetic with quantifiers confined to N0: the closure axioms for
// N0 plus the guarded translations of the arithmetic basis, induction
// instances included via the scheme.
MathSystem pa_n0_system();

} // namespace derivus
