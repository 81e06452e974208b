#pragma once

#include "derivus/builder.hpp"

#include <vector>

namespace derivus {

// ---------- Deduction transform ----------
//
// From a proof of F in M extended with the statement phi, builds a
// proof of -> phi F in M itself.  `image` maps every input step to the
// output step carrying its weakened formula.

struct DeductionResult {
    ProofScript script;
    std::vector<int> image;
};

DeductionResult deduce(const ProofScript& proof, const MathSystem& m,
                       const FormulaPtr& phi, const ListPolicy& policy = {});

// Iterated form: from a proof of F in M extended with the statements
// phi_1,...,phi_k, a proof of -> phi_1 ... -> phi_k F in M.
ProofScript deduce_multi(const ProofScript& proof, const MathSystem& m,
                         const std::vector<FormulaPtr>& phis,
                         const ListPolicy& policy = {});

// From a proof deriving both some formula and its negation in M
// extended with !phi, a proof of phi in M.
ProofScript by_contradiction(const ProofScript& proof, const MathSystem& m,
                             const FormulaPtr& phi, const ListPolicy& policy = {});

} // namespace derivus
