#pragma once

#include <string>
#include <vector>

namespace derivus {

// ---------- Tokens ----------
//
// Whitespace separates tokens.  The characters ( ) , ~ additionally
// split on their own, except when immediately followed by an
// underscore: (_ )_ ,_ ~_ are ordinary symbol names (used by the
// universal alphabets).

std::vector<std::string> tokenize(const std::string& text);

// Reserved tokens that can never be symbol names.
bool is_reserved_token(const std::string& t);

// x<digits> forms are variables.
bool is_var_token(const std::string& t);
int var_index(const std::string& t);   // 0 if not a variable token

// A symbol name is usable if it survives tokenization as itself and is
// neither reserved nor variable-shaped.
bool is_valid_symbol(const std::string& t);

} // namespace derivus
