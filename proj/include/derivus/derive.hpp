#pragma once

#include "derivus/system.hpp"

namespace derivus {

// ---------- Forward search for R-derivability ----------
//
// Saturates elementary consequences of the basis, growing a pool of
// candidate lists from the goal and from everything derived.  Found
// answers come with a checkable derivation; exhaustion is reported as
// Unknown, never as no.

struct DeriveBudget {
    int rounds = 8;
    int max_facts = 10000;
    int max_list_len = 0;   // 0: sized from the goal and the basis
    // Freeze the candidate pool to the sublist closure of the goal and
    // the elementary basis arguments, and drop facts with arguments
    // outside it.  Prunes the search to the goal-directed fragment;
    // complete for predicates that only ever recurse into sublists.
    bool pool_fixed = false;
};

enum class DeriveStatus { Found, Unknown };

struct DeriveResult {
    DeriveStatus status = DeriveStatus::Unknown;
    std::vector<RStep> derivation;     // Found only
    // Budget actually in force, echoed for reporting.
    int rounds = 0;
    int max_facts = 0;
    int max_list_len = 0;
    int facts_seen = 0;
};

DeriveResult derive(const RecursiveSystem& s, const FormulaPtr& goal,
                    const DeriveBudget& budget = {});

} // namespace derivus
