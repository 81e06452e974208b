#pragma once

#include "derivus/formula.hpp"

namespace derivus {

// ---------- Prenex normal form ----------
//
// Every formula has an equivalent with all quantifiers in front and a
// matrix built from -> and ! alone.  Three passes: rewrite <-> & | away,
// give every binder a fresh variable, then pull the quantifiers out
// through ! and -> (flipping them on the left of an arrow and under a
// negation).

// <-> & | eliminated in favour of -> and !.
FormulaPtr strip_extra_connectives(const FormulaPtr& f);

// Every bound variable distinct and foreign to the rest of the formula.
FormulaPtr freshen_bound_vars(const FormulaPtr& f);

FormulaPtr prenex(const FormulaPtr& f);

// Quantifier prefix followed by a quantifier-free ->/! matrix?
bool is_prenex(const FormulaPtr& f);

} // namespace derivus
