#pragma once

#include "derivus/system.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace derivus {

using BigInt = boost::multiprecision::cpp_int;

// ---------- Special systems ----------
//
// A system is special when no basis axiom involves an equation and
// every premise argument list occurs as a sublist of some conclusion
// argument list of the same axiom.  For those systems derivability of
// elementary prime formulas is decidable: a derivation only ever needs
// argument lists that are sublists of the goal's.

bool is_special(const RecursiveSystem& s);

struct ComplexityProfile {
    int k = 0;       // most distinct variables in one argument list
    int alpha = 0;   // most argument lists in one prime subformula
    int rho = 0;     // most prime subformulas in one axiom
    int basis = 0;
};

ComplexityProfile profile_of(const RecursiveSystem& s);

BigInt binomial(int n, int k);

// Largest instantiation count per variable set: max C(n-1,j-1) over
// j = 1..k, clamped at j <= n; zero variables give zero.
BigInt gamma_bound(int n, int k);

// Upper bound on the number of steps a restricted derivation of a goal
// with argument lists of length <= n can need.
BigInt derivation_length_bound(const ComplexityProfile& p, int n);

struct DecideResult {
    bool derivable = false;
    std::vector<RStep> derivation;   // when derivable
};

// Requires a special system and an elementary prime goal; the answer
// is definitive either way.
DecideResult decide(const RecursiveSystem& s, const FormulaPtr& goal);

} // namespace derivus
