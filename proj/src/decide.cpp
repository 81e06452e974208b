#include "derivus/decide.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace derivus {

static std::vector<FormulaPtr> primes_of(const FormulaPtr& f) {
    std::vector<FormulaPtr> parts = rpremises(f);
    parts.push_back(rconclusion(f));
    return parts;
}

bool is_special(const RecursiveSystem& s) {
    for (const FormulaPtr& ax : s.basis) {
        std::vector<FormulaPtr> prem = rpremises(ax);
        FormulaPtr concl = rconclusion(ax);
        for (const FormulaPtr& g : primes_of(ax))
            if (g->kind == Formula::Eq) return false;
        for (const FormulaPtr& p : prem)
            for (const List& arg : p->args) {
                bool found = false;
                for (const List& carg : concl->args)
                    if (occurs_in(arg, carg)) { found = true; break; }
                if (!found) return false;
            }
    }
    return true;
}

ComplexityProfile profile_of(const RecursiveSystem& s) {
    ComplexityProfile p;
    p.basis = int(s.basis.size());
    for (const FormulaPtr& ax : s.basis) {
        std::vector<FormulaPtr> parts = primes_of(ax);
        p.rho = std::max(p.rho, int(parts.size()));
        for (const FormulaPtr& g : parts) {
            p.alpha = std::max(p.alpha, int(g->args.size()));
            for (const List& a : g->args)
                p.k = std::max(p.k, int(vars_of(a).size()));
        }
    }
    return p;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt gamma_bound(int n, int k) {
    if (k <= 0 || n <= 0) return 0;
    if (k > n) k = n;
    BigInt best = 0;
    for (int j = 1; j <= k; ++j) best = std::max(best, binomial(n - 1, j - 1));
    return best;
}

BigInt derivation_length_bound(const ComplexityProfile& p, int n) {
    BigInt sub = BigInt(n) * (n + 1) / 2;
    BigInt inner = BigInt(p.alpha) * sub * gamma_bound(n, p.k);
    BigInt pow = 1;
    for (int i = 0; i < p.alpha; ++i) pow *= inner;
    return BigInt(p.basis) * p.rho * (1 + BigInt(p.alpha) * p.k * pow);
}

namespace {

struct Instance {
    int axiom;
    Binding sigma;
    std::vector<std::string> premise_keys;
    FormulaPtr conclusion;
    std::string conclusion_key;
};

struct Emitter {
    const RecursiveSystem& sys;
    std::vector<RStep> steps;
    std::map<std::string, int> step_ids;
    int fresh = 0;

    int push(RStep st) {
        std::string key = formula_key(st.f);
        auto it = step_ids.find(key);
        if (it != step_ids.end()) return it->second;
        int id = int(steps.size());
        steps.push_back(std::move(st));
        step_ids[key] = id;
        return id;
    }

    int basis_instance(int ax, const Binding& sigma) {
        RStep st;
        st.f = sys.basis[ax];
        st.just = RStep::Basis;
        st.from = ax;
        int cur = push(std::move(st));
        // Replacements are elementary, so single-variable substitution
        // steps cannot capture each other.
        for (const auto& [v, l] : sigma) {
            if (!vars_of(steps[cur].f).count(v)) continue;
            RStep n;
            n.f = sbf(steps[cur].f, l, v);
            n.just = RStep::Subst;
            n.from = cur;
            n.var = v;
            n.repl = l;
            cur = push(std::move(n));
        }
        return cur;
    }

    int mp(int minor, int impl) {
        RStep st;
        st.f = steps[impl].f->b;
        st.just = RStep::MP;
        st.from = minor;
        st.impl = impl;
        return push(std::move(st));
    }
};

} // namespace

DecideResult decide(const RecursiveSystem& s, const FormulaPtr& goal) {
    if (!is_special(s))
        throw std::invalid_argument("decision procedure needs a special system");
    if (!is_prime(goal) || !is_elementary_formula(goal) ||
        goal->kind != Formula::Pred)
        throw std::invalid_argument("decision procedure needs an elementary prime goal");
    if (!formula_over(goal, s.table))
        throw std::invalid_argument("goal uses symbols outside the system");

    std::vector<List> pool;
    std::set<std::string> pool_keys;
    for (const List& a : goal->args)
        for (const List& sub : sublists(a))
            if (pool_keys.insert(list_key(sub)).second) pool.push_back(sub);

    // Every admissible axiom instance: all variables over the pool,
    // conclusion argument lists drawn from the pool again.
    std::vector<Instance> insts;
    for (size_t ax = 0; ax < s.basis.size(); ++ax) {
        const FormulaPtr& axiom = s.basis[ax];
        std::set<int> axvars = vars_of(axiom);
        std::vector<int> vars(axvars.begin(), axvars.end());
        std::vector<FormulaPtr> prem = rpremises(axiom);
        FormulaPtr concl = rconclusion(axiom);
        std::function<void(size_t, Binding&)> fill = [&](size_t i, Binding& b) {
            if (i == vars.size()) {
                FormulaPtr c = apply_binding(concl, b);
                for (const List& arg : c->args)
                    if (!pool_keys.count(list_key(arg))) return;
                Instance inst;
                inst.axiom = int(ax);
                inst.sigma = b;
                for (const FormulaPtr& p : prem)
                    inst.premise_keys.push_back(formula_key(apply_binding(p, b)));
                inst.conclusion = c;
                inst.conclusion_key = formula_key(c);
                insts.push_back(std::move(inst));
                return;
            }
            for (const List& cand : pool) {
                b[vars[i]] = cand;
                fill(i + 1, b);
                b.erase(vars[i]);
            }
        };
        Binding b;
        fill(0, b);
    }

    // Saturate under modus ponens.
    std::map<std::string, std::pair<int, std::vector<std::string>>> have;
    bool grew = true;
    while (grew) {
        grew = false;
        for (size_t i = 0; i < insts.size(); ++i) {
            const Instance& inst = insts[i];
            if (have.count(inst.conclusion_key)) continue;
            bool ready = true;
            for (const std::string& pk : inst.premise_keys)
                if (!have.count(pk)) { ready = false; break; }
            if (!ready) continue;
            have[inst.conclusion_key] = {int(i), inst.premise_keys};
            grew = true;
        }
    }

    DecideResult res;
    std::string goal_key = formula_key(goal);
    if (!have.count(goal_key)) return res;

    res.derivable = true;
    Emitter em{s};
    std::map<std::string, int> done;
    std::function<int(const std::string&)> emit = [&](const std::string& key) -> int {
        auto it = done.find(key);
        if (it != done.end()) return it->second;
        const auto& [idx, pkeys] = have.at(key);
        std::vector<int> ps;
        for (const std::string& pk : pkeys) ps.push_back(emit(pk));
        int cur = em.basis_instance(insts[idx].axiom, insts[idx].sigma);
        for (int p : ps) cur = em.mp(p, cur);
        done[key] = cur;
        return cur;
    };
    int last = emit(goal_key);
    if (size_t(last) + 1 != em.steps.size())
        em.steps.push_back(em.steps[last]);
    CheckResult chk = check_rderivation(em.steps, s);
    if (!chk.ok)
        throw std::logic_error("decision emitted an invalid derivation at step " +
                               std::to_string(chk.step) + ": " + chk.message);
    res.derivation = std::move(em.steps);
    return res;
}

} // namespace derivus
