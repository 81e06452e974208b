#include "derivus/policy.hpp"

#include <stdexcept>

namespace derivus {

static bool is_numeral_item(const Item& it);

static bool is_numeral_list(const List& l, size_t want) {
    if (l.size() != want) return false;
    for (const Item& it : l)
        if (!is_numeral_item(it)) return false;
    return true;
}

static bool is_numeral_item(const Item& it) {
    switch (it.kind) {
    case Item::Var:   return true;
    case Item::Const: return it.sym == "0";
    case Item::Op:
        if (it.sym == "s") return is_numeral_list(it.inner, 1);
        if (it.sym == "+" || it.sym == "*") return is_numeral_list(it.inner, 2);
        return false;
    }
    return false;
}

static bool has_op(const List& l) {
    for (const Item& it : l)
        if (it.kind == Item::Op) return true;
    return false;
}

// Replaces each fresh constant by a variable so the base policy can
// judge the remaining shape; lists built by substituting fresh
// constants into base lists are exactly the ones that survive this.
static List strip_fresh(const List& l, const std::set<std::string>& fresh, int from) {
    List out;
    for (const Item& it : l) {
        if (it.kind == Item::Const && fresh.count(it.sym)) {
            auto pos = fresh.find(it.sym);
            int idx = int(std::distance(fresh.begin(), pos));
            out.push_back(Item::variable(from + idx));
        } else if (it.kind == Item::Op) {
            out.push_back(Item::op(it.sym, strip_fresh(it.inner, fresh, from)));
        } else {
            out.push_back(it);
        }
    }
    return out;
}

bool ListPolicy::admits(const List& l) const {
    if (l.empty()) return false;
    switch (kind) {
    case All:
        return true;
    case StringsOnly:
        return !has_op(l);
    case AtomsOnly:
        return l.size() == 1 && l[0].kind != Item::Op;
    case VariablesOnly:
        return l.size() == 1 && l[0].kind == Item::Var;
    case Numerals:
        return is_numeral_list(l, 1);
    case SymbolExtension: {
        if (!base) throw std::logic_error("extension policy has no base");
        std::set<int> used = vars_of(l);
        int from = used.empty() ? 1 : *used.rbegin() + 1;
        return base->admits(strip_fresh(l, fresh, from));
    }
    }
    return false;
}

bool ListPolicy::admits_formula(const FormulaPtr& f) const {
    for (const List& l : argument_lists(f))
        if (!admits(l)) return false;
    return true;
}

std::string ListPolicy::name() const {
    switch (kind) {
    case All:             return "all";
    case StringsOnly:     return "strings";
    case AtomsOnly:       return "atoms";
    case VariablesOnly:   return "vars";
    case Numerals:        return "numerals";
    case SymbolExtension: return base->name() + "+constants";
    }
    return "?";
}

ListPolicy strings_policy()   { return {ListPolicy::StringsOnly, nullptr, {}}; }
ListPolicy atoms_policy()     { return {ListPolicy::AtomsOnly, nullptr, {}}; }
ListPolicy variables_policy() { return {ListPolicy::VariablesOnly, nullptr, {}}; }
ListPolicy numerals_policy()  { return {ListPolicy::Numerals, nullptr, {}}; }

ListPolicy extension_policy(ListPolicy base, std::set<std::string> fresh) {
    ListPolicy p;
    p.kind = ListPolicy::SymbolExtension;
    p.base = std::make_shared<ListPolicy>(std::move(base));
    p.fresh = std::move(fresh);
    return p;
}

} // namespace derivus
