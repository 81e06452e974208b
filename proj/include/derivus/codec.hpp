#pragma once

#include "derivus/decide.hpp"
#include "derivus/derive.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace derivus {

// ---------- The universal alphabet ----------
//
// Eleven symbols encode every recursive system: letters that index
// constants, variables and predicates by accent count, a blank, the
// accent, a separator star, and the markers standing for the structural
// signs of R-formulas.  Six more markers cover the connectives and
// quantifiers of full formulas.

enum class USym : uint8_t {
    LetterA, LetterV, LetterP, Blank, Accent, Star,
    EqMark, LParMark, RParMark, CommaMark, ImplMark,
    NegMark, IffMark, AndMark, OrMark, ForallMark, ExistsMark,
};

constexpr int rs_alphabet = 11;     // LetterA .. ImplMark
constexpr int full_alphabet = 17;

using UString = std::vector<USym>;

// ASCII spelling of one symbol.  First characters are pairwise
// distinct, so concatenated spellings read back unambiguously.
const std::string& spelling(USym s);
std::string spell(const UString& s);

struct CodecError : std::runtime_error {
    size_t pos;
    CodecError(const std::string& msg, size_t p);
};

// Greedy inverse of spell; skips whitespace between symbols.
UString read_ustring(const std::string& text, int alphabet = full_alphabet);

UString accents(int n);
// A non-negative count: blank for zero, accents otherwise.
UString number_u(int n);

// ---------- Encoding of systems and formulas ----------
//
// Symbols encode positionally: the i-th constant becomes LetterA with
// i accents, predicates and variables likewise with LetterP/LetterV.

UString encode_list_u(const List& l, const SymbolTable& tab);
UString encode_rformula(const FormulaPtr& f, const SymbolTable& tab);
UString encode_rsystem(const RecursiveSystem& sys);

// Inverse; decoded symbols get positional names a1.., p1..
RecursiveSystem decode_rsystem(const UString& s);

// Full formulas with connectives and quantifiers.
UString encode_formula_u(const FormulaPtr& f, const SymbolTable& tab);
FormulaPtr decode_formula_u(const UString& s, const SymbolTable& tab);

// ---------- The universal system ----------

// The fixed system whose constants are the eleven symbols above and
// whose Omega_s predicate holds on yx exactly when the formula encoded
// by x is derivable in the system encoded by y.
const RecursiveSystem& universal_system();

// Strings over the universal alphabet mirror lists over the universal
// system's own constants, symbol by symbol.
List ustring_to_list(const UString& s);
UString list_to_ustring(const List& l);

// ---------- Statements, theorems, diagonalization ----------

struct Statement {
    RecursiveSystem sys;    // decoded from the basis-string prefix
    FormulaPtr goal;        // over table extended as the suffix demands
    bool goal_in_system;    // goal uses only symbols of sys
    int arity;
    size_t split;           // symbols in the basis-string prefix
};

// z = y x with y a basis string (everything up to the last star) and
// x an elementary prime formula encoding.  Empty result: not a
// statement.
std::optional<Statement> classify(const UString& z);

// y q with y a basis string and q a predicate encoding.
bool is_statement(const UString& z);
bool is_predicate_string(const UString& p);

// The symbol-to-accent-block homomorphism and the self-application.
UString g11(const UString& s);
UString diag(const UString& p);

enum class Answer { Yes, No, Unknown };
enum class TheoremEngine {
    Decoded,    // decode and run the engine (decider when special)
    Internal,   // derive Omega_s inside the universal system itself
};

Answer is_theorem(const UString& z, const DeriveBudget& budget = {},
                  TheoremEngine engine = TheoremEngine::Decoded);

} // namespace derivus
