#pragma once

#include "derivus/kernel.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace derivus {

// ---------- Z-homomorphisms ----------
//
// List mappings with a reserved variable set Z: lists stay fixed on
// everything outside Z, the reserved variables never occur in inputs,
// and substitution commutes with the map.  Applied formula-wise they
// carry proofs to proofs with the same step justifications, which is
// how facts about one system are transported to a simpler one.

struct ZHomSpec {
    enum Kind {
        EraseOpTerms,        // maximal operation terms become a reserved variable
        CollapseToAtoms,     // any list that is not a single atom becomes [z]
        CollapseToVariables, // any list that is not a single variable becomes [z]
        ConstantsToVars      // selected constants become reserved variables
    };

    Kind kind = CollapseToAtoms;
    int z = 0;                           // shared reserved variable
    std::map<std::string, int> delta;    // EraseOpTerms: op symbol -> variable
    std::map<std::string, int> consts;   // ConstantsToVars: constant -> variable

    std::set<int> zset() const;
};

List zhom_list(const List& l, const ZHomSpec& spec);
FormulaPtr zhom_formula(const FormulaPtr& f, const ZHomSpec& spec);

// Maps every step formula, substitution list, and induction formula.
// Throws if a step involves a reserved variable.
ProofScript zhom_proof(const ProofScript& proof, const ZHomSpec& spec);

// Ready-made specs with reserved variables fresh for the system and
// for the proof they are about to transport.
ZHomSpec erase_op_terms(const MathSystem& m, const ProofScript& proof = {});
ZHomSpec collapse_to_atoms(const MathSystem& m, const ProofScript& proof = {});
ZHomSpec collapse_to_variables(const MathSystem& m, const ProofScript& proof = {});

// ---------- Fresh-constant generalization ----------
//
// From a proof of F c_1/x_1 ... c_m/x_m using constants outside the
// base alphabet, a proof of forall x_1 ... forall x_m F in the base
// system: the constants become reserved variables, which are then
// substituted away and generalized.

struct GeneralizeResult {
    ProofScript script;
    FormulaPtr statement;
};

GeneralizeResult generalize_constants(const ProofScript& proof, const MathSystem& base,
                                      const std::vector<std::pair<std::string, int>>& binding,
                                      const FormulaPtr& f, const ListPolicy& policy = {});

} // namespace derivus
