#pragma once

#include "derivus/kernel.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>

namespace derivus {

// ---------- Script construction ----------
//
// Emits proof steps with deduplication by formula: pushing a formula
// that is already a step returns the earlier index, so tactics can be
// layered without bloating the script.

struct ScriptBuilder {
    ProofScript steps;
    std::map<std::string, int> index;

    int have(const FormulaPtr& f) const;
    int push(Step st);

    int prop(FormulaPtr f);
    int eq_axiom(FormulaPtr f);
    int quant(FormulaPtr f, char variant = 0);
    int basis(FormulaPtr f);
    int mp(FormulaPtr g, int minor, int major);
    // Reads the conclusion off the cited implication.
    int mp_chain(int minor, int major);
    int subst(int from, int var, List repl);
    int gen(int from, int var);
    int induction(FormulaPtr f, std::string pred, std::vector<int> ivars,
                  FormulaPtr g, std::map<int, int> premises);
};

// ---------- Equivalence tactics ----------
//
// Each emits the steps deriving its result and returns the step index.

// <-> F F
int iff_refl(ScriptBuilder& b, const FormulaPtr& f);
// from <-> A B and <-> B C: <-> A C
int iff_trans(ScriptBuilder& b, int e1, int e2);
// from <-> F F': <-> !F !F'
int iff_neg(ScriptBuilder& b, int e);
// from <-> F F' and <-> G G': <-> J F G  J F' G'
int iff_binary(ScriptBuilder& b, Formula::Kind k, int e1, int e2);
// from <-> F F': <-> forall x F forall x F'   (and the exists version)
int iff_forall(ScriptBuilder& b, int e, int x);
int iff_exists(ScriptBuilder& b, int e, int x);

// -> forall x -> F G  -> forall x F forall x G
int prove_impl_distribution(ScriptBuilder& b, const FormulaPtr& f,
                            const FormulaPtr& g, int x);
// <-> Q x F  Q y F(y/x)   for y not occurring in F
int prove_forall_rename(ScriptBuilder& b, const FormulaPtr& f, int x, int y);
int prove_exists_rename(ScriptBuilder& b, const FormulaPtr& f, int x, int y);

// Renames every bound variable lying in `bad` to a fresh one drawn from
// the counter; returns the renamed formula and the index of <-> f f'.
std::pair<FormulaPtr, int> prove_freshen_bound(ScriptBuilder& b, const FormulaPtr& f,
                                               const std::set<int>& bad,
                                               int& next_fresh);

// First variable index strictly above everything in the formulas and sets.
int fresh_var_above(const std::vector<FormulaPtr>& fs, const std::set<int>& more);

} // namespace derivus
