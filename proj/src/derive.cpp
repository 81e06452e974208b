#include "derivus/derive.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

namespace derivus {

namespace {

// ---------- Occurrence positions ----------
//
// A position addresses a contiguous segment: a chain of operational
// items descended into, then a start offset.

struct ListPos {
    std::vector<int> path;
    int offset = 0;
};

bool segment_at(const List& l, size_t pos, const List& pat) {
    if (pos + pat.size() > l.size()) return false;
    for (size_t k = 0; k < pat.size(); ++k)
        if (l[pos + k] != pat[k]) return false;
    return true;
}

void positions_into(const List& l, const List& pat, std::vector<int>& path,
                    std::vector<ListPos>& out) {
    for (size_t i = 0; i + pat.size() <= l.size(); ++i)
        if (segment_at(l, i, pat)) out.push_back({path, int(i)});
    for (size_t i = 0; i < l.size(); ++i) {
        if (l[i].kind != Item::Op) continue;
        path.push_back(int(i));
        positions_into(l[i].inner, pat, path, out);
        path.pop_back();
    }
}

std::vector<ListPos> positions_of(const List& l, const List& pat) {
    std::vector<ListPos> out;
    std::vector<int> path;
    positions_into(l, pat, path, out);
    return out;
}

List replace_at(const List& l, const ListPos& pos, size_t depth, size_t fromLen,
                const List& to) {
    List out = l;
    if (depth == pos.path.size()) {
        out.erase(out.begin() + pos.offset, out.begin() + pos.offset + fromLen);
        out.insert(out.begin() + pos.offset, to.begin(), to.end());
        return out;
    }
    int i = pos.path[depth];
    out[i] = Item::op(l[i].sym, replace_at(l[i].inner, pos, depth + 1, fromLen, to));
    return out;
}

// Positions must be pairwise disjoint; applied deepest-and-rightmost
// first so earlier offsets stay valid.
List replace_many(const List& l, std::vector<ListPos> ps, size_t fromLen,
                  const List& to) {
    std::sort(ps.begin(), ps.end(), [](const ListPos& a, const ListPos& b) {
        return std::make_pair(a.path, a.offset) > std::make_pair(b.path, b.offset);
    });
    List out = l;
    for (const ListPos& p : ps) out = replace_at(out, p, 0, fromLen, to);
    return out;
}

bool positions_disjoint(const ListPos& a, const ListPos& b, size_t fromLen) {
    size_t common = std::min(a.path.size(), b.path.size());
    size_t i = 0;
    while (i < common && a.path[i] == b.path[i]) ++i;
    if (i < common) return true;   // diverge inside a shared level
    if (a.path.size() == b.path.size())
        return size_t(a.offset) + fromLen <= size_t(b.offset) ||
               size_t(b.offset) + fromLen <= size_t(a.offset);
    // One descends below the other: overlap iff the descent enters the
    // replaced segment of the shallower one.
    const ListPos& shallow = a.path.size() < b.path.size() ? a : b;
    const ListPos& deep = a.path.size() < b.path.size() ? b : a;
    int item = deep.path[shallow.path.size()];
    return item < shallow.offset || size_t(item) >= size_t(shallow.offset) + fromLen;
}

// ---------- Facts ----------

struct Prov {
    enum Kind { Axiom, Refl, Rewrite, Cong } kind = Axiom;
    int axiom = -1;                 // Axiom
    Binding sigma;                  // Axiom
    std::vector<int> premises;      // Axiom
    int side = 0;                   // Rewrite: which argument of src
    ListPos pos;                    // Rewrite
    int eq = -1, src = -1;          // Rewrite, Cong
    int cpos = 0;                   // Cong: argument index replaced
};

struct Fact {
    FormulaPtr f;
    Prov prov;
};

int max_var_of(const FormulaPtr& f) {
    int m = 0;
    for (int v : vars_of(f)) m = std::max(m, v);
    return m;
}

struct Engine {
    const RecursiveSystem& sys;
    DeriveBudget budget;
    int cap = 0;

    std::vector<Fact> facts;
    std::map<std::string, int> fact_ids;
    std::vector<List> pool;
    std::set<std::string> pool_keys;
    std::map<std::string, std::vector<int>> by_head;   // "p/n" or "~" -> fact ids
    std::map<std::string, std::vector<int>> eq_by_lhs; // lhs key -> eq fact ids
    bool exhausted = false;
    bool equality_active = false;
    bool pool_frozen = false;

    // Emission state.
    std::vector<RStep> steps;
    std::map<std::string, int> step_ids;
    std::map<int, int> emitted;     // fact id -> step
    int fresh = 0;

    Engine(const RecursiveSystem& s, const DeriveBudget& b) : sys(s), budget(b) {}

    static std::string head_key(const FormulaPtr& f) {
        if (f->kind == Formula::Eq) return "~";
        return f->sym + "/" + std::to_string(f->args.size());
    }

    void add_pool(const List& l) {
        if (pool_frozen) return;
        if (symbol_count(l) > cap) return;
        if (int(pool.size()) >= budget.max_facts) return;
        if (pool_keys.insert(list_key(l)).second) pool.push_back(l);
    }

    void add_pool_sublists(const List& l) {
        for (const List& s : sublists(l)) add_pool(s);
    }

    int add_fact(const FormulaPtr& f, Prov prov) {
        for (const List& a : f->args)
            if (symbol_count(a) > cap) return -1;
        if (pool_frozen)
            for (const List& a : f->args)
                if (!pool_keys.count(list_key(a))) return -1;
        std::string key = formula_key(f);
        auto it = fact_ids.find(key);
        if (it != fact_ids.end()) return it->second;
        if (int(facts.size()) >= budget.max_facts) {
            exhausted = true;
            return -1;
        }
        int id = int(facts.size());
        facts.push_back({f, std::move(prov)});
        fact_ids[key] = id;
        by_head[head_key(f)].push_back(id);
        if (f->kind == Formula::Eq) eq_by_lhs[list_key(f->args[0])].push_back(id);
        for (const List& a : f->args) add_pool_sublists(a);
        return id;
    }

    // ---------- Saturation ----------

    void join_axiom(int ax, size_t nf, size_t np) {
        const FormulaPtr& axiom = sys.basis[ax];
        std::vector<FormulaPtr> prem = rpremises(axiom);
        FormulaPtr concl = rconclusion(axiom);

        std::function<void(size_t, Binding&, std::vector<int>&)> go =
            [&](size_t i, Binding& b, std::vector<int>& used) {
            if (exhausted) return;
            if (i == prem.size()) {
                // Enumerate leftovers of the conclusion over the pool.
                std::set<int> cv = vars_of(concl);
                std::vector<int> unbound;
                for (int v : cv)
                    if (!b.count(v)) unbound.push_back(v);
                std::function<void(size_t, Binding&)> fill = [&](size_t j, Binding& b2) {
                    if (exhausted) return;
                    if (j == unbound.size()) {
                        FormulaPtr inst = apply_binding(concl, b2);
                        Prov p;
                        p.kind = Prov::Axiom;
                        p.axiom = ax;
                        p.sigma = b2;
                        p.premises = used;
                        add_fact(inst, std::move(p));
                        return;
                    }
                    for (size_t t = 0; t < np; ++t) {
                        b2[unbound[j]] = pool[t];
                        fill(j + 1, b2);
                        b2.erase(unbound[j]);
                    }
                };
                fill(0, b);
                return;
            }
            auto found = by_head.find(head_key(prem[i]));
            if (found == by_head.end()) return;
            std::vector<int> cands = found->second;   // adds would invalidate
            for (int id : cands) {
                if (size_t(id) >= nf) break;
                FormulaPtr fact = facts[id].f;
                std::vector<Binding> alts;
                match_prime_all(prem[i], fact, b, alts);
                for (Binding& alt : alts) {
                    used.push_back(id);
                    go(i + 1, alt, used);
                    used.pop_back();
                }
            }
        };
        Binding b;
        std::vector<int> used;
        go(0, b, used);
    }

    void equality_round(size_t nf, size_t np) {
        // Reflexivity over the pool.
        for (size_t t = 0; t < np; ++t) {
            Prov p;
            p.kind = Prov::Refl;
            add_fact(mk_eq(pool[t], pool[t]), std::move(p));
        }
        // Rewriting of equation facts by equation facts.
        auto eqs = by_head.find("~");
        if (eqs == by_head.end()) return;
        std::vector<int> eq_ids = eqs->second;
        for (int s : eq_ids) {
            if (size_t(s) >= nf) break;
            FormulaPtr sf = facts[s].f;
            for (int side = 0; side < 2; ++side) {
                for (const List& sub : sublists(sf->args[side])) {
                    auto rs = eq_by_lhs.find(list_key(sub));
                    if (rs == eq_by_lhs.end()) continue;
                    std::vector<int> rewriters = rs->second;
                    for (int e : rewriters) {
                        if (size_t(e) >= nf) break;
                        FormulaPtr ef = facts[e].f;
                        if (ef->args[0] == ef->args[1]) continue;
                        std::vector<ListPos> ps = positions_of(sf->args[side], ef->args[0]);
                        for (const ListPos& ppos : ps) {
                            List repl = replace_at(sf->args[side], ppos, 0,
                                                   ef->args[0].size(), ef->args[1]);
                            FormulaPtr nf2 = side == 0 ? mk_eq(repl, sf->args[1])
                                                       : mk_eq(sf->args[0], repl);
                            Prov p;
                            p.kind = Prov::Rewrite;
                            p.side = side;
                            p.pos = ppos;
                            p.eq = e;
                            p.src = s;
                            add_fact(nf2, std::move(p));
                            if (exhausted) return;
                        }
                    }
                }
            }
        }
        // Congruence on predicate facts, one argument at a time.
        for (size_t s = 0; s < nf; ++s) {
            FormulaPtr sf = facts[s].f;
            if (sf->kind != Formula::Pred || sf->args.empty()) continue;
            for (size_t i = 0; i < sf->args.size(); ++i) {
                auto rs = eq_by_lhs.find(list_key(sf->args[i]));
                if (rs == eq_by_lhs.end()) continue;
                std::vector<int> rewriters = rs->second;
                for (int e : rewriters) {
                    if (size_t(e) >= nf) break;
                    FormulaPtr ef = facts[e].f;
                    if (ef->args[0] == ef->args[1]) continue;
                    std::vector<List> as = sf->args;
                    as[i] = ef->args[1];
                    Prov p;
                    p.kind = Prov::Cong;
                    p.cpos = int(i);
                    p.eq = e;
                    p.src = int(s);
                    add_fact(mk_pred(sf->sym, std::move(as)), std::move(p));
                    if (exhausted) return;
                }
            }
        }
    }

    void saturate(const FormulaPtr& goal) {
        for (const List& a : goal->args) add_pool_sublists(a);
        argument_pool_from_basis();
        pool_frozen = budget.pool_fixed;
        equality_active = goal->kind == Formula::Eq;
        for (const FormulaPtr& ax : sys.basis) {
            std::vector<FormulaPtr> parts = rpremises(ax);
            parts.push_back(rconclusion(ax));
            for (const FormulaPtr& g : parts)
                if (g->kind == Formula::Eq) equality_active = true;
        }
        std::string goal_key = is_prime(goal) ? formula_key(goal) : std::string();

        for (int round = 0; round < budget.rounds; ++round) {
            size_t nf = facts.size(), np = pool.size();
            for (size_t ax = 0; ax < sys.basis.size(); ++ax)
                join_axiom(int(ax), nf, np);
            if (equality_active) equality_round(nf, np);
            if (!goal_key.empty() && fact_ids.count(goal_key)) return;
            if (facts.size() == nf && pool.size() == np) return;   // closed
            if (exhausted) return;
        }
    }

    void argument_pool_from_basis() {
        for (const FormulaPtr& ax : sys.basis) {
            std::vector<FormulaPtr> parts = rpremises(ax);
            parts.push_back(rconclusion(ax));
            for (const FormulaPtr& g : parts)
                for (const List& a : g->args)
                    if (is_elementary(a)) add_pool_sublists(a);
        }
    }

    // ---------- Emission ----------

    int push_step(RStep st) {
        std::string key = formula_key(st.f);
        auto it = step_ids.find(key);
        if (it != step_ids.end()) return it->second;
        int id = int(steps.size());
        steps.push_back(std::move(st));
        step_ids[key] = id;
        return id;
    }

    int emit_eq_axiom(const FormulaPtr& f) {
        RStep st;
        st.f = f;
        st.just = RStep::EqAxiom;
        return push_step(std::move(st));
    }

    int emit_subst(int from, int var, List repl) {
        RStep st;
        st.f = sbf(steps[from].f, repl, var);
        st.just = RStep::Subst;
        st.from = from;
        st.var = var;
        st.repl = std::move(repl);
        return push_step(std::move(st));
    }

    int emit_mp(int minor, int impl) {
        RStep st;
        st.f = steps[impl].f->b;
        st.just = RStep::MP;
        st.from = minor;
        st.impl = impl;
        return push_step(std::move(st));
    }

    // Simultaneous substitution via a fresh-variable detour when the
    // replacement lists mention variables still waiting their turn.
    int emit_subst_chain(int base, const Binding& sigma) {
        std::vector<int> vars;
        std::set<int> pending;
        for (const auto& [v, l] : sigma) {
            vars.push_back(v);
            pending.insert(v);
        }
        bool collide = false;
        for (const auto& [v, l] : sigma)
            for (int u : vars_of(l))
                if (pending.count(u) && u != v) collide = true;
        int cur = base;
        if (!collide) {
            for (int v : vars)
                if (vars_of(steps[cur].f).count(v))
                    cur = emit_subst(cur, v, sigma.at(v));
            return cur;
        }
        std::map<int, int> temp;
        for (int v : vars) {
            temp[v] = ++fresh;
            if (vars_of(steps[cur].f).count(v))
                cur = emit_subst(cur, v, {Item::variable(temp[v])});
        }
        for (int v : vars)
            if (vars_of(steps[cur].f).count(temp[v]))
                cur = emit_subst(cur, temp[v], sigma.at(v));
        return cur;
    }

    int emit_basis_instance(int ax, const Binding& sigma) {
        RStep st;
        st.f = sys.basis[ax];
        st.just = RStep::Basis;
        st.from = ax;
        int cur = push_step(std::move(st));
        return emit_subst_chain(cur, sigma);
    }

    int emit_refl(const List& l) {
        int x = ++fresh;
        List vx = {Item::variable(x)};
        int ax = emit_eq_axiom(mk_eq(vx, vx));
        if (l == vx) return ax;
        return emit_subst(ax, x, l);
    }

    // -> E1 -> ~k1,k2 E2 where E2 equals E1 with the marked occurrences
    // of k1 replaced by k2.
    int emit_eq_b_instance(const FormulaPtr& e1, const List& k1, const List& k2,
                           const std::vector<ListPos>& pos0,
                           const std::vector<ListPos>& pos1) {
        int X = ++fresh, Y = ++fresh;
        List vy = {Item::variable(Y)};
        List pl = replace_many(e1->args[0], pos0, k1.size(), vy);
        List pr = replace_many(e1->args[1], pos1, k1.size(), vy);
        FormulaPtr concl = mk_eq(pl, pr);
        FormulaPtr prem1 = sbf(concl, {Item::variable(X)}, Y);
        FormulaPtr ax = mk_impl(prem1, mk_impl(mk_eq({Item::variable(X)}, vy), concl));
        int cur = emit_eq_axiom(ax);
        cur = emit_subst(cur, X, k1);
        cur = emit_subst(cur, Y, k2);
        return cur;
    }

    // -> ~a1,b1 ... -> ~an,bn -> p a.. p b..
    int emit_eq_c_instance(const std::string& p, const std::vector<List>& as,
                           const std::vector<List>& bs) {
        size_t n = as.size();
        std::vector<int> xs(n), ys(n);
        for (size_t i = 0; i < n; ++i) xs[i] = ++fresh;
        for (size_t i = 0; i < n; ++i) ys[i] = ++fresh;
        std::vector<List> xl, yl;
        for (size_t i = 0; i < n; ++i) xl.push_back({Item::variable(xs[i])});
        for (size_t i = 0; i < n; ++i) yl.push_back({Item::variable(ys[i])});
        FormulaPtr g = mk_impl(mk_pred(p, xl), mk_pred(p, yl));
        for (size_t i = n; i >= 1; --i)
            g = mk_impl(mk_eq(xl[i - 1], yl[i - 1]), g);
        int cur = emit_eq_axiom(g);
        for (size_t i = 0; i < n; ++i) cur = emit_subst(cur, xs[i], as[i]);
        for (size_t i = 0; i < n; ++i) cur = emit_subst(cur, ys[i], bs[i]);
        return cur;
    }

    int emit_fact(int id) {
        auto done = emitted.find(id);
        if (done != emitted.end()) return done->second;
        const Fact& fa = facts[id];
        int out = -1;
        switch (fa.prov.kind) {
        case Prov::Axiom: {
            std::vector<int> ps;
            for (int pid : fa.prov.premises) ps.push_back(emit_fact(pid));
            int cur = emit_basis_instance(fa.prov.axiom, fa.prov.sigma);
            for (int pstep : ps) cur = emit_mp(pstep, cur);
            out = cur;
            break;
        }
        case Prov::Refl:
            out = emit_refl(fa.f->args[0]);
            break;
        case Prov::Rewrite: {
            int src = emit_fact(fa.prov.src);
            int eq = emit_fact(fa.prov.eq);
            const FormulaPtr& e1 = facts[fa.prov.src].f;
            const FormulaPtr& ef = facts[fa.prov.eq].f;
            std::vector<ListPos> p0, p1;
            (fa.prov.side == 0 ? p0 : p1).push_back(fa.prov.pos);
            int impl = emit_eq_b_instance(e1, ef->args[0], ef->args[1], p0, p1);
            int cur = emit_mp(src, impl);
            out = emit_mp(eq, cur);
            break;
        }
        case Prov::Cong: {
            int src = emit_fact(fa.prov.src);
            int eq = emit_fact(fa.prov.eq);
            const FormulaPtr& sf = facts[fa.prov.src].f;
            int cur = emit_eq_c_instance(sf->sym, sf->args, fa.f->args);
            for (size_t i = 0; i < sf->args.size(); ++i) {
                int estep = int(i) == fa.prov.cpos ? eq : emit_refl(sf->args[i]);
                cur = emit_mp(estep, cur);
            }
            out = emit_mp(src, cur);
            break;
        }
        }
        emitted[id] = out;
        return out;
    }

    // ---------- Non-elementary goals ----------

    std::optional<Binding> instance_binding(const FormulaPtr& pat, const FormulaPtr& inst) {
        std::vector<FormulaPtr> pp = rpremises(pat), ip = rpremises(inst);
        if (pp.size() != ip.size()) return std::nullopt;
        FormulaPtr pc = rconclusion(pat), ic = rconclusion(inst);
        std::optional<Binding> res;
        std::function<bool(size_t, Binding&)> go = [&](size_t i, Binding& b) -> bool {
            if (i == pp.size()) {
                std::vector<Binding> fin;
                match_prime_all(pc, ic, b, fin);
                if (fin.empty()) return false;
                res = fin.front();
                return true;
            }
            std::vector<Binding> alts;
            match_prime_all(pp[i], ip[i], b, alts);
            for (Binding& alt : alts)
                if (go(i + 1, alt)) return true;
            return false;
        };
        Binding b;
        go(0, b);
        return res;
    }

    std::optional<int> emit_equality_instance(const FormulaPtr& g) {
        if (is_equality_raxiom(g, sys.table)) return emit_eq_axiom(g);
        if (g->kind == Formula::Eq && g->args[0] == g->args[1])
            return emit_refl(g->args[0]);
        if (g->kind == Formula::Impl && g->a->kind == Formula::Eq &&
            g->b->kind == Formula::Impl && g->b->a->kind == Formula::Eq &&
            g->b->b->kind == Formula::Eq) {
            const List& k1 = g->b->a->args[0];
            const List& k2 = g->b->a->args[1];
            const FormulaPtr& e2 = g->b->b;
            const FormulaPtr& e1 = g->a;
            auto w = rewrite_witness(e1, e2, k1, k2);
            if (w) return emit_eq_b_instance(e1, k1, k2, w->first, w->second);
        }
        // (c) instances
        std::vector<FormulaPtr> parts = rpremises(g);
        FormulaPtr concl = rconclusion(g);
        size_t n = parts.empty() ? 0 : parts.size() - 1;
        if (n >= 1) {
            FormulaPtr major = parts.back();
            if (major->kind == Formula::Pred && concl->kind == Formula::Pred &&
                major->sym == concl->sym && sys.table.has_predicate(major->sym) &&
                major->args.size() == n && concl->args.size() == n) {
                bool ok = true;
                for (size_t i = 0; i < n && ok; ++i)
                    ok = parts[i]->kind == Formula::Eq &&
                         parts[i]->args[0] == major->args[i] &&
                         parts[i]->args[1] == concl->args[i];
                if (ok) return emit_eq_c_instance(major->sym, major->args, concl->args);
            }
        }
        return std::nullopt;
    }

    // Disjoint occurrence sets per side turning gen into inst by
    // replacing `from` with `to`.
    std::optional<std::pair<std::vector<ListPos>, std::vector<ListPos>>>
    rewrite_witness(const FormulaPtr& gen, const FormulaPtr& inst,
                    const List& from, const List& to) {
        std::vector<ListPos> w0, w1;
        if (find_rewrite(gen->args[0], inst->args[0], from, to, w0) &&
            find_rewrite(gen->args[1], inst->args[1], from, to, w1))
            return std::make_pair(w0, w1);
        return std::nullopt;
    }

    bool find_rewrite(const List& gen, const List& inst, const List& from,
                      const List& to, std::vector<ListPos>& out) {
        std::vector<int> path;
        return find_rw(gen, inst, from, to, path, out);
    }

    bool find_rw(const List& gen, const List& inst, const List& from,
                 const List& to, std::vector<int>& path, std::vector<ListPos>& out) {
        return find_rw_at(gen, 0, inst, 0, from, to, path, out);
    }

    bool find_rw_at(const List& gen, size_t gi, const List& inst, size_t ii,
                    const List& from, const List& to, std::vector<int>& path,
                    std::vector<ListPos>& out) {
        if (gi == gen.size() && ii == inst.size()) return true;
        if (gi < gen.size() && segment_at(gen, gi, from) &&
            ii + to.size() <= inst.size() && segment_at(inst, ii, to)) {
            out.push_back({path, int(gi)});
            if (find_rw_at(gen, gi + from.size(), inst, ii + to.size(), from, to,
                           path, out))
                return true;
            out.pop_back();
        }
        if (gi < gen.size() && ii < inst.size()) {
            const Item& g = gen[gi];
            const Item& t = inst[ii];
            bool itemOk = false;
            size_t mark = out.size();
            if (g.kind == Item::Op && t.kind == Item::Op && g.sym == t.sym) {
                path.push_back(int(gi));
                itemOk = find_rw(g.inner, t.inner, from, to, path, out);
                path.pop_back();
            } else {
                itemOk = g == t;
            }
            if (itemOk && find_rw_at(gen, gi + 1, inst, ii + 1, from, to, path, out))
                return true;
            out.resize(mark);
        }
        return false;
    }

    std::optional<int> derive_sub(const FormulaPtr& g, int depth) {
        if (auto eq = emit_equality_instance(g)) return eq;
        for (size_t ax = 0; ax < sys.basis.size(); ++ax)
            if (auto b = instance_binding(sys.basis[ax], g))
                return emit_basis_instance(int(ax), *b);
        if (is_prime(g) && is_elementary_formula(g)) {
            auto it = fact_ids.find(formula_key(g));
            if (it != fact_ids.end()) return emit_fact(it->second);
            return std::nullopt;
        }
        if (depth <= 0) return std::nullopt;
        if (auto s = suffix_eq_b(g, depth)) return s;
        if (auto s = suffix_eq_c(g, depth)) return s;
        return suffix_basis(g, depth);
    }

    // -> ~k1,k2 E2 with a derivable E1.
    std::optional<int> suffix_eq_b(const FormulaPtr& g, int depth) {
        if (g->kind != Formula::Impl || g->a->kind != Formula::Eq ||
            g->b->kind != Formula::Eq)
            return std::nullopt;
        const List& k1 = g->a->args[0];
        const List& k2 = g->a->args[1];
        const FormulaPtr& e2 = g->b;
        std::vector<ListPos> p0 = positions_of(e2->args[0], k2);
        std::vector<ListPos> p1 = positions_of(e2->args[1], k2);
        // Try occurrence subsets, larger first; candidates capped.
        std::vector<ListPos> all;
        all.insert(all.end(), p0.begin(), p0.end());
        all.insert(all.end(), p1.begin(), p1.end());
        size_t total = std::min<size_t>(all.size(), 10);
        size_t n0 = std::min(p0.size(), total);
        std::vector<std::pair<std::vector<ListPos>, std::vector<ListPos>>> cands;
        for (size_t mask = (size_t(1) << total); mask-- > 0;) {
            std::vector<ListPos> s0, s1;
            for (size_t i = 0; i < total; ++i)
                if (mask & (size_t(1) << i)) (i < n0 ? s0 : s1).push_back(all[i]);
            auto disj = [&](const std::vector<ListPos>& v) {
                for (size_t i = 0; i < v.size(); ++i)
                    for (size_t j = i + 1; j < v.size(); ++j)
                        if (!positions_disjoint(v[i], v[j], k2.size())) return false;
                return true;
            };
            if (!disj(s0) || !disj(s1)) continue;
            cands.emplace_back(std::move(s0), std::move(s1));
            if (cands.size() >= 64) break;
        }
        std::stable_sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
            return a.first.size() + a.second.size() > b.first.size() + b.second.size();
        });
        for (const auto& [s0, s1] : cands) {
            List l0 = replace_many(e2->args[0], s0, k2.size(), k1);
            List l1 = replace_many(e2->args[1], s1, k2.size(), k1);
            FormulaPtr e1 = mk_eq(l0, l1);
            if (auto st = derive_sub(e1, depth - 1)) {
                auto inv = rewrite_witness(e1, e2, k1, k2);
                if (!inv) continue;
                int impl = emit_eq_b_instance(e1, k1, k2, inv->first, inv->second);
                return emit_mp(*st, impl);
            }
        }
        return std::nullopt;
    }

    // Suffix of the congruence scheme with leading equations discharged.
    std::optional<int> suffix_eq_c(const FormulaPtr& g, int depth) {
        std::vector<FormulaPtr> parts = rpremises(g);
        FormulaPtr concl = rconclusion(g);
        if (parts.empty() || concl->kind != Formula::Pred) return std::nullopt;
        FormulaPtr major = parts.back();
        if (major->kind != Formula::Pred || major->sym != concl->sym) return std::nullopt;
        size_t n = major->args.size();
        if (concl->args.size() != n || n < 1) return std::nullopt;
        size_t kept = parts.size() - 1;
        if (kept > n) return std::nullopt;
        size_t missing = n - kept;
        for (size_t t = 0; t < kept; ++t) {
            size_t slot = missing + t;
            if (parts[t]->kind != Formula::Eq ||
                !(parts[t]->args[0] == major->args[slot]) ||
                !(parts[t]->args[1] == concl->args[slot]))
                return std::nullopt;
        }
        std::vector<int> eqsteps;
        for (size_t i = 0; i < missing; ++i) {
            FormulaPtr e = mk_eq(major->args[i], concl->args[i]);
            auto st = derive_sub(e, depth - 1);
            if (!st) return std::nullopt;
            eqsteps.push_back(*st);
        }
        int cur = emit_eq_c_instance(major->sym, major->args, concl->args);
        for (int st : eqsteps) cur = emit_mp(st, cur);
        return cur;
    }

    std::optional<int> suffix_basis(const FormulaPtr& g, int depth) {
        std::vector<FormulaPtr> gp = rpremises(g);
        FormulaPtr gc = rconclusion(g);
        for (size_t ax = 0; ax < sys.basis.size(); ++ax) {
            std::vector<FormulaPtr> bp = rpremises(sys.basis[ax]);
            FormulaPtr bc = rconclusion(sys.basis[ax]);
            if (bp.size() <= gp.size()) continue;   // full match handled earlier
            size_t missing = bp.size() - gp.size();
            std::function<std::optional<int>(size_t, Binding&)> align =
                [&](size_t i, Binding& b) -> std::optional<int> {
                if (i == gp.size()) {
                    std::vector<Binding> fin;
                    match_prime_all(bc, gc, b, fin);
                    for (Binding& f2 : fin)
                        if (auto r = discharge(int(ax), f2, missing, depth))
                            return r;
                    return std::nullopt;
                }
                std::vector<Binding> alts;
                match_prime_all(bp[missing + i], gp[i], b, alts);
                for (Binding& alt : alts)
                    if (auto r = align(i + 1, alt)) return r;
                return std::nullopt;
            };
            Binding b;
            if (auto r = align(0, b)) return r;
        }
        return std::nullopt;
    }

    std::optional<int> discharge(int ax, Binding sigma, size_t missing, int depth) {
        std::vector<FormulaPtr> bp = rpremises(sys.basis[ax]);
        // Unbound variables in the residual premises range over the pool.
        std::set<int> need;
        for (size_t i = 0; i < missing; ++i)
            for (int v : vars_of(bp[i]))
                if (!sigma.count(v)) need.insert(v);
        std::vector<int> unbound(need.begin(), need.end());
        std::function<std::optional<int>(size_t, Binding&)> fill =
            [&](size_t j, Binding& b) -> std::optional<int> {
            if (j == unbound.size()) {
                std::vector<int> ps;
                for (size_t i = 0; i < missing; ++i) {
                    FormulaPtr inst = apply_binding(bp[i], b);
                    if (!vars_of(inst).empty()) return std::nullopt;
                    auto st = derive_sub(inst, depth - 1);
                    if (!st) return std::nullopt;
                    ps.push_back(*st);
                }
                int cur = emit_basis_instance(ax, b);
                for (int p : ps) cur = emit_mp(p, cur);
                return cur;
            }
            for (const List& cand : pool) {
                b[unbound[j]] = cand;
                if (auto r = fill(j + 1, b)) return r;
                b.erase(unbound[j]);
            }
            return std::nullopt;
        };
        return fill(0, sigma);
    }
};

} // namespace

DeriveResult derive(const RecursiveSystem& s, const FormulaPtr& goal,
                    const DeriveBudget& budget) {
    if (!is_rformula(goal))
        throw std::invalid_argument("goal is not an R-formula");
    if (!formula_over(goal, s.table))
        throw std::invalid_argument("goal uses symbols outside the system");
    validate_system(s);

    DeriveBudget b = budget;
    if (b.max_list_len <= 0) {
        int m = 0;
        for (const List& a : goal->args) m = std::max(m, symbol_count(a));
        std::vector<FormulaPtr> all = rpremises(goal);
        all.push_back(rconclusion(goal));
        for (const FormulaPtr& ax : s.basis) {
            std::vector<FormulaPtr> parts = rpremises(ax);
            parts.push_back(rconclusion(ax));
            all.insert(all.end(), parts.begin(), parts.end());
        }
        for (const FormulaPtr& g : all)
            for (const List& a : g->args) m = std::max(m, symbol_count(a));
        b.max_list_len = m + 2;
    }

    Engine eng(s, b);
    eng.cap = b.max_list_len;
    int fresh = 0;
    for (const FormulaPtr& ax : s.basis) fresh = std::max(fresh, max_var_of(ax));
    fresh = std::max(fresh, max_var_of(goal));
    eng.fresh = fresh;

    eng.saturate(goal);

    DeriveResult res;
    res.rounds = b.rounds;
    res.max_facts = b.max_facts;
    res.max_list_len = b.max_list_len;
    res.facts_seen = int(eng.facts.size());

    std::optional<int> found;
    if (is_prime(goal) && is_elementary_formula(goal)) {
        auto it = eng.fact_ids.find(formula_key(goal));
        if (it != eng.fact_ids.end()) found = eng.emit_fact(it->second);
        else found = eng.derive_sub(goal, 2);
    } else {
        found = eng.derive_sub(goal, 2);
    }
    if (!found) return res;

    if (!equal(eng.steps[*found].f, goal))
        throw std::logic_error("emission lost the goal");
    if (size_t(*found) + 1 != eng.steps.size()) {
        // End on the goal: repeating a step with its own justification
        // is always valid since its references stay earlier.
        eng.steps.push_back(eng.steps[*found]);
    }
    CheckResult chk = check_rderivation(eng.steps, s);
    if (!chk.ok)
        throw std::logic_error("internal derivation failed validation at step " +
                               std::to_string(chk.step) + ": " + chk.message);
    res.status = DeriveStatus::Found;
    res.derivation = std::move(eng.steps);
    return res;
}

} // namespace derivus
