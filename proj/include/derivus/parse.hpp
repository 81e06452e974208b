#pragma once

#include "derivus/formula.hpp"
#include "derivus/symbols.hpp"
#include "derivus/token.hpp"

#include <stdexcept>

namespace derivus {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Token cursor over a formula or list text.
struct TokenStream {
    std::vector<std::string> toks;
    size_t pos = 0;

    explicit TokenStream(const std::string& text) : toks(tokenize(text)) {}
    bool done() const { return pos >= toks.size(); }
    const std::string& peek() const;
    std::string next();
    void expect(const std::string& t);
};

// Lists stop at reserved tokens, predicate symbols, ',', ')' and EOF.
List parse_list(TokenStream& ts, const SymbolTable& tab);
FormulaPtr parse_formula(TokenStream& ts, const SymbolTable& tab);

List parse_list(const std::string& text, const SymbolTable& tab);
FormulaPtr parse_formula(const std::string& text, const SymbolTable& tab);

} // namespace derivus
