#pragma once

#include "derivus/formula.hpp"
#include "derivus/parse.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace derivus {

// ---------- Recursive systems ----------

struct RecursiveSystem {
    SymbolTable table;
    std::vector<FormulaPtr> basis;
};

// Checks the basis: every axiom an R-formula whose symbols live in the
// table.  Throws std::invalid_argument on violation.
void validate_system(const RecursiveSystem& s);

// Is F a formula over the table (all constants and predicates known)?
bool formula_over(const FormulaPtr& f, const SymbolTable& tab);
bool list_over(const List& l, const SymbolTable& tab);

// The three schemes of the R-axioms of equality, taken literally:
//   (a)  ~ x,x
//   (b)  -> SbF(~l,m ; x ; y) -> ~ x,y  ~ l,m        (x,y variables)
//   (c)  -> ~ x1,y1 ... -> ~ xn,yn -> p x1..xn p y1..yn
bool is_equality_raxiom(const FormulaPtr& f, const SymbolTable& tab);

// Instances of the equality schemes that are still derivable after
// closing scheme variables under substitution (used by goal checks):
//   refl      ~ l,l
//   (b) inst  -> E1 -> ~ k1,k2 E2  with E1 = E2 rewriting k1 for some
//             occurrences of k2
//   (c) inst  -> ~ a1,b1 ... -> ~ an,bn -> p a1..an  p b1..bn
bool is_equality_instance(const FormulaPtr& f, const SymbolTable& tab);

// ---------- R-derivations ----------

struct RStep {
    enum Just { EqAxiom, Basis, MP, Subst };
    FormulaPtr f;
    Just just = EqAxiom;
    int from = -1;       // Basis: axiom index; MP: minor step; Subst: source step
    int impl = -1;       // MP: step holding -> F G
    int var = 0;         // Subst
    List repl;           // Subst
};

struct CheckResult {
    bool ok = true;
    int step = -1;
    std::string message;
};

CheckResult check_rderivation(const std::vector<RStep>& steps,
                              const RecursiveSystem& s);

// ---------- Pattern matching ----------
//
// Variables in the pattern bind nonempty lists; bindings are
// consistent across the whole match.

using Binding = std::map<int, List>;

bool match_list(const List& pat, const List& inst, Binding& b);
bool match_prime(const FormulaPtr& pat, const FormulaPtr& inst, Binding& b);
// Enumerates all bindings instead of stopping at the first.
void match_list_all(const List& pat, const List& inst, const Binding& b,
                    std::vector<Binding>& out);
void match_prime_all(const FormulaPtr& pat, const FormulaPtr& inst,
                     const Binding& b, std::vector<Binding>& out);

// Applies a binding; unbound variables stay.
List apply_binding(const List& l, const Binding& b);
FormulaPtr apply_binding(const FormulaPtr& f, const Binding& b);

// Is inst a substitution instance of the R-formula pat?
bool instance_of(const FormulaPtr& pat, const FormulaPtr& inst);

// ---------- Symbol projection ----------
//
// gamma fixes the system's own symbols and maps the extras into them;
// images of derivations stay derivations.
List project_list(const List& l, const std::map<std::string, std::string>& gamma);
FormulaPtr project_formula(const FormulaPtr& f,
                           const std::map<std::string, std::string>& gamma);
std::vector<RStep> project_derivation(const std::vector<RStep>& steps,
                                      const RecursiveSystem& target,
                                      const std::map<std::string, std::string>& gamma);

// ---------- Avoidance of equations ----------

// Removes the steps containing an equation and the steps -> F F with F
// prime; the remainder is again a derivation (only valid when the
// basis is equation-free).
std::vector<RStep> strip_equation_steps(const std::vector<RStep>& steps,
                                        const RecursiveSystem& s);

// Builds S* over P_S + eq*: basis images plus the equation-free
// simulation of the equality axioms.
RecursiveSystem eliminate_equations(const RecursiveSystem& s,
                                    const std::string& star = "eq*");

} // namespace derivus
