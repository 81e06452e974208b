#pragma once

#include "derivus/kernel.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace derivus {

// ---------- Sign character ----------
//
// For a system whose basis is exactly the embedded one, every provable
// formula carries sign +1, computed from the stable part of the basis:
// axioms whose conclusion predicate already feeds one of their own
// premises are dropped, then formulas mentioning a predicate arity
// without a surviving conclusion are cancelled until nothing changes.

std::vector<FormulaPtr> chi_fixpoint_basis(const RecursiveSystem& s);

// The pairs (p, arity) occurring in the fixpoint basis.
std::set<std::pair<std::string, int>> chi_support(const RecursiveSystem& s);

// +1 or -1.  `embedded` decides which predicates belong to the system;
// the rest sign negative.
int chi_sign(const FormulaPtr& f,
             const std::set<std::pair<std::string, int>>& support,
             const SymbolTable& embedded);

// ---------- Linter ----------

struct LintFinding {
    int step = -1;
    int other = -1;   // partner of a complementary pair, else -1
    std::string message;
};

// Flags negative-sign steps (when the sign character applies) and any
// formula appearing alongside its negation.
std::vector<LintFinding> chi_lint(const ProofScript& script, const MathSystem& m);

} // namespace derivus
