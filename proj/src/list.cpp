#include "derivus/list.hpp"

#include <algorithm>
#include <stdexcept>

namespace derivus {

Item Item::constant(std::string s) {
    Item it;
    it.kind = Const;
    it.sym = std::move(s);
    return it;
}

Item Item::variable(int v) {
    Item it;
    it.kind = Var;
    it.var = v;
    return it;
}

Item Item::op(std::string s, List arg) {
    if (arg.empty()) throw std::invalid_argument("operational term needs a nonempty argument");
    Item it;
    it.kind = Op;
    it.sym = std::move(s);
    it.inner = std::move(arg);
    return it;
}

bool operator==(const Item& a, const Item& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
    case Item::Const: return a.sym == b.sym;
    case Item::Var:   return a.var == b.var;
    case Item::Op:    return a.sym == b.sym && a.inner == b.inner;
    }
    return false;
}

bool operator==(const List& a, const List& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

int symbol_count(const List& l) {
    int n = 0;
    for (const Item& it : l) {
        ++n;
        if (it.kind == Item::Op) n += symbol_count(it.inner);
    }
    return n;
}

bool is_elementary(const List& l) {
    for (const Item& it : l) {
        if (it.kind == Item::Var) return false;
        if (it.kind == Item::Op && !is_elementary(it.inner)) return false;
    }
    return true;
}

bool is_single_var(const List& l, int v) {
    return l.size() == 1 && l[0].kind == Item::Var && l[0].var == v;
}

void collect_vars(const List& l, std::set<int>& out) {
    for (const Item& it : l) {
        if (it.kind == Item::Var) out.insert(it.var);
        else if (it.kind == Item::Op) collect_vars(it.inner, out);
    }
}

std::set<int> vars_of(const List& l) {
    std::set<int> s;
    collect_vars(l, s);
    return s;
}

List sbl(const List& lam, const List& mu, int x) {
    List out;
    for (const Item& it : lam) {
        if (it.kind == Item::Var && it.var == x) {
            out.insert(out.end(), mu.begin(), mu.end());
        } else if (it.kind == Item::Op) {
            out.push_back(Item::op(it.sym, sbl(it.inner, mu, x)));
        } else {
            out.push_back(it);
        }
    }
    return out;
}

void collect_sublists(const List& l, std::vector<List>& out) {
    size_t n = l.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j <= n; ++j)
            out.emplace_back(l.begin() + i, l.begin() + j);
    for (const Item& it : l)
        if (it.kind == Item::Op) collect_sublists(it.inner, out);
}

std::vector<List> sublists(const List& l) {
    std::vector<List> all;
    collect_sublists(l, all);
    std::sort(all.begin(), all.end(), [](const List& a, const List& b) {
        int ca = symbol_count(a), cb = symbol_count(b);
        if (ca != cb) return ca < cb;
        return list_key(a) < list_key(b);
    });
    all.erase(std::unique(all.begin(), all.end(),
                          [](const List& a, const List& b) { return a == b; }),
              all.end());
    return all;
}

static bool segment_at(const List& l, size_t pos, const List& pat) {
    if (pos + pat.size() > l.size()) return false;
    for (size_t k = 0; k < pat.size(); ++k)
        if (l[pos + k] != pat[k]) return false;
    return true;
}

bool occurs_in(const List& pat, const List& l) {
    if (pat.empty()) return false;
    for (size_t i = 0; i + pat.size() <= l.size(); ++i)
        if (segment_at(l, i, pat)) return true;
    for (const Item& it : l)
        if (it.kind == Item::Op && occurs_in(pat, it.inner)) return true;
    return false;
}

std::vector<List> replace_one(const List& l, const List& from, const List& to) {
    std::vector<List> out;
    if (from.empty()) return out;
    for (size_t i = 0; i + from.size() <= l.size(); ++i) {
        if (!segment_at(l, i, from)) continue;
        List r(l.begin(), l.begin() + i);
        r.insert(r.end(), to.begin(), to.end());
        r.insert(r.end(), l.begin() + i + from.size(), l.end());
        out.push_back(std::move(r));
    }
    for (size_t i = 0; i < l.size(); ++i) {
        if (l[i].kind != Item::Op) continue;
        for (List& in : replace_one(l[i].inner, from, to)) {
            List r = l;
            r[i] = Item::op(l[i].sym, std::move(in));
            out.push_back(std::move(r));
        }
    }
    return out;
}

// Match positions of gen against inst, optionally rewriting an
// occurrence of `from` into `to` wherever one starts.
static bool rew_items(const List& gen, size_t gi, const List& inst, size_t ii,
                      const List& from, const List& to);

static bool rew_item_single(const Item& g, const Item& i,
                            const List& from, const List& to) {
    if (g.kind == Item::Op && i.kind == Item::Op && g.sym == i.sym)
        return rew_items(g.inner, 0, i.inner, 0, from, to);
    return g == i;
}

static bool rew_items(const List& gen, size_t gi, const List& inst, size_t ii,
                      const List& from, const List& to) {
    if (gi == gen.size() && ii == inst.size()) return true;
    if (gi < gen.size() && segment_at(gen, gi, from) &&
        ii + to.size() <= inst.size() && segment_at(inst, ii, to) &&
        rew_items(gen, gi + from.size(), inst, ii + to.size(), from, to))
        return true;
    if (gi < gen.size() && ii < inst.size() &&
        rew_item_single(gen[gi], inst[ii], from, to))
        return rew_items(gen, gi + 1, inst, ii + 1, from, to);
    return false;
}

bool rewrites_to(const List& gen, const List& inst,
                 const List& from, const List& to) {
    if (from.empty()) return gen == inst;
    return rew_items(gen, 0, inst, 0, from, to);
}

static void render_into(const List& l, std::string& out) {
    for (const Item& it : l) {
        if (!out.empty() && out.back() != ' ') out.push_back(' ');
        switch (it.kind) {
        case Item::Const:
            out += it.sym;
            break;
        case Item::Var:
            out += "x" + std::to_string(it.var);
            break;
        case Item::Op:
            out += it.sym;
            out += " (";
            render_into(it.inner, out);
            out += " )";
            break;
        }
    }
}

std::string render_list(const List& l) {
    std::string out;
    render_into(l, out);
    return out;
}

std::string list_key(const List& l) {
    return render_list(l);
}

} // namespace derivus
