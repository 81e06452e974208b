#pragma once

#include <string>
#include <vector>
#include <set>

namespace derivus {

// ---------- Lists ----------
//
// A list is a nonempty sequence of items over an alphabet of constant
// symbols plus the variables x1, x2, ...  An item is a constant, a
// variable, or an operational term f(lambda) whose argument is itself a
// list.  Concatenation is flat and associative.

struct Item;
using List = std::vector<Item>;

struct Item {
    enum Kind { Const, Var, Op };
    Kind kind = Const;
    std::string sym;   // Const and Op symbol
    int var = 0;       // Var index, >= 1
    List inner;        // Op argument, nonempty

    static Item constant(std::string s);
    static Item variable(int v);
    static Item op(std::string s, List arg);
};

bool operator==(const Item& a, const Item& b);
inline bool operator!=(const Item& a, const Item& b) { return !(a == b); }
bool operator==(const List& a, const List& b);

// Total item/list count, operational terms counted with their contents.
int symbol_count(const List& l);

// No variables anywhere.
bool is_elementary(const List& l);

bool is_single_var(const List& l, int v);

void collect_vars(const List& l, std::set<int>& out);
std::set<int> vars_of(const List& l);

// lambda mu/x: every occurrence of the variable x replaced by mu.
List sbl(const List& lam, const List& mu, int x);

// All sublists: contiguous top-level runs plus recursion into
// operational terms; result deduplicated, order deterministic.
std::vector<List> sublists(const List& l);
void collect_sublists(const List& l, std::vector<List>& out);

// Does pat occur in l as a contiguous item-aligned segment, at top
// level or inside an operational term?
bool occurs_in(const List& pat, const List& l);

// All lists obtained from l by replacing exactly one occurrence of
// `from` (contiguous, any depth) with `to`.
std::vector<List> replace_one(const List& l, const List& from, const List& to);

// Can `inst` be obtained from `gen` by replacing zero or more
// non-overlapping occurrences of `from` with `to`?  (Checks that
// `gen` with those occurrences rewritten equals `inst`.)
bool rewrites_to(const List& gen, const List& inst,
                 const List& from, const List& to);

std::string render_list(const List& l);

// Key for ordering and dedup.
std::string list_key(const List& l);

} // namespace derivus
