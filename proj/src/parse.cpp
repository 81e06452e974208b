#include "derivus/parse.hpp"

#include <algorithm>

namespace derivus {

bool SymbolTable::has_constant(const std::string& s) const {
    return std::find(constants.begin(), constants.end(), s) != constants.end();
}

bool SymbolTable::has_predicate(const std::string& s) const {
    return std::find(predicates.begin(), predicates.end(), s) != predicates.end();
}

int SymbolTable::constant_index(const std::string& s) const {
    auto it = std::find(constants.begin(), constants.end(), s);
    return it == constants.end() ? 0 : int(it - constants.begin()) + 1;
}

int SymbolTable::predicate_index(const std::string& s) const {
    auto it = std::find(predicates.begin(), predicates.end(), s);
    return it == predicates.end() ? 0 : int(it - predicates.begin()) + 1;
}

void SymbolTable::add_constant(const std::string& s) {
    if (!is_valid_symbol(s))
        throw std::invalid_argument("bad constant name: " + s);
    if (has_constant(s) || has_predicate(s))
        throw std::invalid_argument("duplicate symbol: " + s);
    constants.push_back(s);
}

void SymbolTable::add_predicate(const std::string& s) {
    if (!is_valid_symbol(s))
        throw std::invalid_argument("bad predicate name: " + s);
    if (has_constant(s) || has_predicate(s))
        throw std::invalid_argument("duplicate symbol: " + s);
    predicates.push_back(s);
}

bool SymbolTable::extended_by(const SymbolTable& other) const {
    if (other.constants.size() < constants.size()) return false;
    if (other.predicates.size() < predicates.size()) return false;
    return std::equal(constants.begin(), constants.end(), other.constants.begin()) &&
           std::equal(predicates.begin(), predicates.end(), other.predicates.begin());
}

const std::string& TokenStream::peek() const {
    if (done()) throw ParseError("unexpected end of input");
    return toks[pos];
}

std::string TokenStream::next() {
    if (done()) throw ParseError("unexpected end of input");
    return toks[pos++];
}

void TokenStream::expect(const std::string& t) {
    std::string got = next();
    if (got != t) throw ParseError("expected '" + t + "', got '" + got + "'");
}

static bool ends_list(const std::string& t, const SymbolTable& tab) {
    return is_reserved_token(t) ? t != "(" : tab.has_predicate(t);
    // "(" never starts a list item on its own; it only follows an
    // operational symbol, which is consumed with it.
}

List parse_list(TokenStream& ts, const SymbolTable& tab) {
    List out;
    while (!ts.done()) {
        const std::string& t = ts.peek();
        if (ends_list(t, tab)) break;
        if (is_var_token(t)) {
            out.push_back(Item::variable(var_index(ts.next())));
            continue;
        }
        if (!tab.has_constant(t))
            throw ParseError("unknown symbol in list: " + t);
        std::string sym = ts.next();
        if (!ts.done() && ts.peek() == "(") {
            ts.next();
            List inner = parse_list(ts, tab);
            ts.expect(")");
            if (inner.empty()) throw ParseError("empty operational term: " + sym);
            out.push_back(Item::op(sym, std::move(inner)));
        } else {
            out.push_back(Item::constant(sym));
        }
    }
    if (out.empty()) throw ParseError("empty list");
    return out;
}

static FormulaPtr parse_prime_pred(TokenStream& ts, const SymbolTable& tab) {
    std::string p = ts.next();
    std::vector<List> args;
    if (!ts.done() && !ends_list(ts.peek(), tab) && ts.peek() != ")") {
        args.push_back(parse_list(ts, tab));
        while (!ts.done() && ts.peek() == ",") {
            ts.next();
            args.push_back(parse_list(ts, tab));
        }
    }
    return mk_pred(p, std::move(args));
}

FormulaPtr parse_formula(TokenStream& ts, const SymbolTable& tab) {
    const std::string& t = ts.peek();
    if (t == "~") {
        ts.next();
        List l = parse_list(ts, tab);
        ts.expect(",");
        List r = parse_list(ts, tab);
        return mk_eq(std::move(l), std::move(r));
    }
    if (t == "->" || t == "<->" || t == "&" || t == "|") {
        std::string op = ts.next();
        FormulaPtr a = parse_formula(ts, tab);
        FormulaPtr b = parse_formula(ts, tab);
        Formula::Kind k = op == "->" ? Formula::Impl
                        : op == "<->" ? Formula::Iff
                        : op == "&" ? Formula::And : Formula::Or;
        return mk_binary(k, std::move(a), std::move(b));
    }
    if (t == "!") {
        ts.next();
        return mk_neg(parse_formula(ts, tab));
    }
    if (t == "forall" || t == "exists") {
        std::string q = ts.next();
        std::string v = ts.next();
        if (!is_var_token(v)) throw ParseError("quantifier needs a variable, got: " + v);
        FormulaPtr body = parse_formula(ts, tab);
        return mk_quant(q == "forall" ? Formula::Forall : Formula::Exists,
                        var_index(v), std::move(body));
    }
    if (tab.has_predicate(t)) return parse_prime_pred(ts, tab);
    throw ParseError("cannot start a formula with: " + t);
}

List parse_list(const std::string& text, const SymbolTable& tab) {
    TokenStream ts(text);
    List l = parse_list(ts, tab);
    if (!ts.done()) throw ParseError("trailing tokens after list: " + ts.peek());
    return l;
}

FormulaPtr parse_formula(const std::string& text, const SymbolTable& tab) {
    TokenStream ts(text);
    FormulaPtr f = parse_formula(ts, tab);
    if (!ts.done()) throw ParseError("trailing tokens after formula: " + ts.peek());
    return f;
}

} // namespace derivus
