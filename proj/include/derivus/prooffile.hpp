#pragma once

#include "derivus/kernel.hpp"

#include <string>

namespace derivus {

// ---------- Mathematical system files ----------
//
//   # comment
//   constants: 0 s + *          full alphabet
//   predicates: N0              full predicate list
//   s-constants:                embedded system's alphabet (prefix of the
//   s-predicates:               full one; defaults: the full lists)
//   scheme: induction           numeral induction axiom family
//   s: N0 0                     embedded basis axiom (also part of the basis)
//   -> N0 x1 N0 s(x1)           basis axiom
//
// Headers may appear in any order but before use; axiom lines follow.

MathSystem parse_msystem(const std::string& text);
MathSystem load_msystem_file(const std::string& path);

// ---------- Proof files ----------
//
// One step per line, formula first, justification after a semicolon:
//
//   <formula> ; prop
//   <formula> ; eq
//   <formula> ; quant [a|b|c]
//   <formula> ; basis
//   <formula> ; mp <minor> <major>
//   <formula> ; subst <step> <var> <list>
//   <formula> ; gen <step> <var>
//   <formula> ; ind <pred> <var...> ; <axiom>=<step> ...
//
// Step and axiom references are 1-based line positions.

ProofScript parse_proof(const std::string& text, const SymbolTable& tab);
ProofScript load_proof_file(const std::string& path, const SymbolTable& tab);

std::string render_step(const Step& st);
std::string render_proof(const ProofScript& script);

// all | strings | atoms | vars | numerals
ListPolicy policy_by_name(const std::string& name);

} // namespace derivus
