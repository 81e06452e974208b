#pragma once

#include "derivus/list.hpp"

#include <memory>
#include <string>
#include <vector>
#include <set>

namespace derivus {

// ---------- Formulas ----------
//
// Prime formulas are equations ~lambda,mu and predicate applications
// p lambda_1,...,lambda_n (n >= 0).  Compound formulas use -> ! <-> & |
// and the quantifiers.  R-formulas are the quantifier-free implication
// chains -> F_1 ... -> F_k C with all parts prime.

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    enum Kind { Eq, Pred, Neg, Impl, Iff, And, Or, Forall, Exists };
    Kind kind = Pred;
    std::string sym;             // Pred
    std::vector<List> args;      // Eq: two entries; Pred: n entries
    FormulaPtr a, b;             // Neg/quantifier: a; binary: a and b
    int var = 0;                 // quantifier variable
};

FormulaPtr mk_eq(List l, List r);
FormulaPtr mk_pred(std::string p, std::vector<List> args);
FormulaPtr mk_neg(FormulaPtr f);
FormulaPtr mk_impl(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_iff(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_and(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_or(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_forall(int x, FormulaPtr f);
FormulaPtr mk_exists(int x, FormulaPtr f);
FormulaPtr mk_quant(Formula::Kind k, int x, FormulaPtr f);
FormulaPtr mk_binary(Formula::Kind k, FormulaPtr a, FormulaPtr b);

bool equal(const FormulaPtr& a, const FormulaPtr& b);

bool is_prime(const FormulaPtr& f);
bool is_rformula(const FormulaPtr& f);
bool is_elementary_formula(const FormulaPtr& f);

// Premises and conclusion of an R-formula.
std::vector<FormulaPtr> rpremises(const FormulaPtr& f);
FormulaPtr rconclusion(const FormulaPtr& f);

std::set<int> vars_of(const FormulaPtr& f);
std::set<int> free_vars(const FormulaPtr& f);
// Free variables ordered by first occurrence.
std::vector<int> free_vars_ordered(const FormulaPtr& f);

// All argument lists of the prime subformulas, outermost first.
std::vector<List> argument_lists(const FormulaPtr& f);

// F mu/x: substitution for the free occurrences of x.
FormulaPtr sbf(const FormulaPtr& f, const List& mu, int x);

// Collision-free check for sbf.
bool cf(const FormulaPtr& f, const List& mu, int x);

std::string render_formula(const FormulaPtr& f);
std::string formula_key(const FormulaPtr& f);

} // namespace derivus
