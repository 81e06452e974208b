#pragma once

#include "derivus/policy.hpp"
#include "derivus/system.hpp"
#include "derivus/tautology.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace derivus {

// ---------- Mathematical systems ----------
//
// A mathematical system extends a recursive system with first-order
// formulas: the axioms are the propositional tautologies, the equality
// and quantifier axioms, and the basis (which contains the embedded
// system's basis and may include a scheme recognizer for axiom
// families such as arithmetic induction).

struct MathSystem {
    RecursiveSystem sys;              // the embedded recursive system
    SymbolTable table;                // extends sys.table
    std::vector<FormulaPtr> basis;    // extensional part, sys.basis included
    std::function<bool(const FormulaPtr&)> scheme;   // optional, pure, total
    std::string scheme_name;          // for file round-trips

    bool in_basis(const FormulaPtr& f) const;
    // True when the basis adds nothing beyond the embedded system's.
    bool basis_is_embedded() const;
};

// B_M = B_S, same alphabets.
MathSystem wrap_system(const RecursiveSystem& s);

// Throws std::invalid_argument on broken invariants.
void validate_msystem(const MathSystem& m);

MathSystem extend_with(const MathSystem& m, const FormulaPtr& statement);
MathSystem extend_symbols(const MathSystem& m, const std::vector<std::string>& constants);

// ---------- Axiom recognizers ----------

// ~x,x | -> SbF(~l,m;x;y) -> ~x,y ~l,m | congruence chains.
bool is_equality_axiom(const FormulaPtr& f, const SymbolTable& tab);

// 0 accepts any of the three shapes, 'a'..'c' one specific shape.
bool is_quantifier_axiom(const FormulaPtr& f, char variant = 0);

// ---------- Proof scripts ----------

struct Step {
    enum Rule { PropAxiom, EqAxiom, QuantAxiom, BasisAxiom, MP, Subst, Gen, Induction };

    FormulaPtr f;
    Rule rule = PropAxiom;
    char variant = 0;                 // QuantAxiom: a, b, c, or 0 for any
    int from = -1;                    // MP minor / Subst / Gen source
    int impl = -1;                    // MP major
    int var = 0;                      // Subst / Gen variable
    List repl;                        // Subst list
    std::string pred;                 // Induction predicate
    std::vector<int> ivars;           // Induction variables
    FormulaPtr g;                     // Induction formula
    std::map<int, int> premises;      // basis-axiom index -> step index
};

using ProofScript = std::vector<Step>;

struct ProofCheck {
    bool ok = true;
    int step = -1;
    std::string message;
};

// The image of a basis R-axiom under the Induction Rule: every i-ary
// p-subformula p l_1,...,l_i becomes G l_1/x_1 ... l_i/x_i.
FormulaPtr induction_image(const FormulaPtr& axiom, const std::string& p,
                           const std::vector<int>& xs, const FormulaPtr& g);

ProofCheck check_proof(const ProofScript& script, const MathSystem& m,
                       const ListPolicy& policy = {}, int atom_cap = -1);

// Re-justifies an R-derivation step for step.
ProofScript lift_rderivation(const std::vector<RStep>& steps);

// The axiom family -> forall x & F(0/x) -> F F(s(x)/x)  forall x F
// for F with numeral argument lists; needs the constants 0 and s.
std::function<bool(const FormulaPtr&)> induction_scheme(const SymbolTable& tab);

// Peano arithmetic: empty embedded system, six axioms plus the
// induction scheme, numeral argument lists.
MathSystem pa_system();
ListPolicy pa_policy();

} // namespace derivus
