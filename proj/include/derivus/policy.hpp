#pragma once

#include "derivus/formula.hpp"

#include <memory>
#include <set>
#include <string>

namespace derivus {

// ---------- Restricted argument lists ----------
//
// A policy is a substitution-closed set of lists containing all
// variables.  Proofs in a restricted system keep every argument list
// and every substitution list inside the policy.

struct ListPolicy {
    enum Kind {
        All,             // every nonempty list
        StringsOnly,     // no operation terms
        AtomsOnly,       // one constant or variable
        VariablesOnly,   // one variable
        Numerals,        // terms over 0, s, +, *
        SymbolExtension  // base lists with new constants substituted in
    };

    Kind kind = All;
    std::shared_ptr<const ListPolicy> base;   // SymbolExtension
    std::set<std::string> fresh;              // SymbolExtension constants

    bool admits(const List& l) const;
    // Every argument list of the formula is admitted.
    bool admits_formula(const FormulaPtr& f) const;
    std::string name() const;
};

ListPolicy strings_policy();
ListPolicy atoms_policy();
ListPolicy variables_policy();
ListPolicy numerals_policy();
ListPolicy extension_policy(ListPolicy base, std::set<std::string> fresh);

} // namespace derivus
