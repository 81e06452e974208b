#include "derivus/token.hpp"

#include <cctype>

namespace derivus {

static bool splits_alone(char c) {
    return c == '(' || c == ')' || c == ',' || c == '~';
}

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            out.push_back(cur);
            cur.clear();
        }
    };
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            flush();
            continue;
        }
        if (c == '#') {             // comment to end of line
            flush();
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        if (splits_alone(c)) {
            if (i + 1 < text.size() && text[i + 1] == '_') {
                cur.push_back(c);
                cur.push_back('_');
                ++i;
                continue;
            }
            flush();
            out.push_back(std::string(1, c));
            continue;
        }
        cur.push_back(c);
    }
    flush();
    return out;
}

bool is_reserved_token(const std::string& t) {
    return t == "~" || t == "->" || t == "!" || t == "<->" || t == "&" ||
           t == "|" || t == "forall" || t == "exists" || t == "(" ||
           t == ")" || t == ",";
}

bool is_var_token(const std::string& t) {
    if (t.size() < 2 || t[0] != 'x') return false;
    for (size_t i = 1; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return t[1] != '0';
}

int var_index(const std::string& t) {
    if (!is_var_token(t)) return 0;
    return std::stoi(t.substr(1));
}

bool is_valid_symbol(const std::string& t) {
    if (t.empty() || is_reserved_token(t) || is_var_token(t)) return false;
    std::vector<std::string> toks = tokenize(t);
    return toks.size() == 1 && toks[0] == t;
}

} // namespace derivus
