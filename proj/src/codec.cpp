#include "derivus/codec.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>

namespace derivus {

CodecError::CodecError(const std::string& msg, size_t p)
    : std::runtime_error(msg + " (at symbol " + std::to_string(p) + ")"), pos(p) {}

static const std::array<std::string, full_alphabet> spellings = {
    "a", "v", "p", "[]", "'", "*",
    "~_", "(_", ")_", ",_", "->_",
    "!_", "<->_", "&_", "|_", "forall_", "exists_",
};

const std::string& spelling(USym s) { return spellings[size_t(s)]; }

std::string spell(const UString& s) {
    std::string out;
    for (USym c : s) out += spelling(c);
    return out;
}

UString read_ustring(const std::string& text, int alphabet) {
    UString out;
    size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        int hit = -1;
        for (int k = 0; k < alphabet; ++k)
            if (spellings[k][0] == text[i]) { hit = k; break; }
        if (hit < 0 || text.compare(i, spellings[hit].size(), spellings[hit]) != 0)
            throw CodecError("unreadable symbol '" + std::string(1, text[i]) + "'",
                             out.size());
        out.push_back(USym(hit));
        i += spellings[hit].size();
    }
    return out;
}

UString accents(int n) { return UString(size_t(n), USym::Accent); }

UString number_u(int n) {
    return n == 0 ? UString{USym::Blank} : accents(n);
}

// ---------- Encoding ----------

static void put_indexed(UString& out, USym letter, int index) {
    out.push_back(letter);
    for (int i = 0; i < index; ++i) out.push_back(USym::Accent);
}

static void put_list(UString& out, const List& l, const SymbolTable& tab) {
    for (const Item& it : l) {
        switch (it.kind) {
        case Item::Const:
            put_indexed(out, USym::LetterA, tab.constant_index(it.sym));
            break;
        case Item::Var:
            put_indexed(out, USym::LetterV, it.var);
            break;
        case Item::Op:
            put_indexed(out, USym::LetterA, tab.constant_index(it.sym));
            out.push_back(USym::LParMark);
            put_list(out, it.inner, tab);
            out.push_back(USym::RParMark);
            break;
        }
    }
}

UString encode_list_u(const List& l, const SymbolTable& tab) {
    if (!list_over(l, tab))
        throw std::invalid_argument("list uses symbols outside the table");
    UString out;
    put_list(out, l, tab);
    return out;
}

static void put_prime(UString& out, const FormulaPtr& f, const SymbolTable& tab) {
    if (f->kind == Formula::Eq) {
        out.push_back(USym::EqMark);
        put_list(out, f->args[0], tab);
        out.push_back(USym::CommaMark);
        put_list(out, f->args[1], tab);
        return;
    }
    put_indexed(out, USym::LetterP, tab.predicate_index(f->sym));
    for (size_t i = 0; i < f->args.size(); ++i) {
        if (i) out.push_back(USym::CommaMark);
        put_list(out, f->args[i], tab);
    }
}

UString encode_rformula(const FormulaPtr& f, const SymbolTable& tab) {
    if (!is_rformula(f) || !formula_over(f, tab))
        throw std::invalid_argument("not an R-formula over the table");
    UString out;
    FormulaPtr g = f;
    while (g->kind == Formula::Impl) {
        out.push_back(USym::ImplMark);
        put_prime(out, g->a, tab);
        g = g->b;
    }
    put_prime(out, g, tab);
    return out;
}

UString encode_rsystem(const RecursiveSystem& sys) {
    UString out = number_u(int(sys.table.constants.size()));
    out.push_back(USym::Star);
    UString w = number_u(int(sys.table.predicates.size()));
    out.insert(out.end(), w.begin(), w.end());
    out.push_back(USym::Star);
    if (sys.basis.empty()) {
        out.push_back(USym::Blank);
        out.push_back(USym::Star);
        return out;
    }
    for (const FormulaPtr& f : sys.basis) {
        UString enc = encode_rformula(f, sys.table);
        out.insert(out.end(), enc.begin(), enc.end());
        out.push_back(USym::Star);
    }
    return out;
}

// ---------- Decoding ----------

namespace {

std::string positional_constant(int i) { return "a" + std::to_string(i); }
std::string positional_predicate(int i) { return "p" + std::to_string(i); }

struct UReader {
    const UString& s;
    size_t base;        // global offset for error positions
    size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    USym peek() const {
        if (done()) throw CodecError("unexpected end of string", base + pos);
        return s[pos];
    }
    bool at(USym c) const { return !done() && s[pos] == c; }
    void expect(USym c) {
        if (!at(c))
            throw CodecError("expected '" + spelling(c) + "'", base + pos);
        ++pos;
    }

    int accent_run() {
        size_t n = 0;
        while (at(USym::Accent)) { ++pos; ++n; }
        if (n == 0) throw CodecError("expected at least one accent", base + pos);
        return int(n);
    }

    // Letter index; extends the table positionally when allowed.
    int const_index(SymbolTable& tab, bool extend) {
        size_t at0 = base + pos;
        int i = accent_run();
        while (int(tab.constants.size()) < i) {
            if (!extend) throw CodecError("constant index beyond the alphabet", at0);
            tab.add_constant(positional_constant(int(tab.constants.size()) + 1));
        }
        return i;
    }
    int pred_index(SymbolTable& tab, bool extend) {
        size_t at0 = base + pos;
        int i = accent_run();
        while (int(tab.predicates.size()) < i) {
            if (!extend) throw CodecError("predicate index beyond the alphabet", at0);
            tab.add_predicate(positional_predicate(int(tab.predicates.size()) + 1));
        }
        return i;
    }

    static bool starts_list(USym c) {
        return c == USym::LetterA || c == USym::LetterV;
    }

    List list(SymbolTable& tab, bool extend) {
        List out;
        while (!done()) {
            if (at(USym::LetterA)) {
                ++pos;
                int i = const_index(tab, extend);
                if (at(USym::LParMark)) {
                    ++pos;
                    List inner = list(tab, extend);
                    if (inner.empty())
                        throw CodecError("empty operational term", base + pos);
                    expect(USym::RParMark);
                    out.push_back(Item::op(tab.constants[i - 1], std::move(inner)));
                } else {
                    out.push_back(Item::constant(tab.constants[i - 1]));
                }
                continue;
            }
            if (at(USym::LetterV)) {
                ++pos;
                out.push_back(Item::variable(accent_run()));
                continue;
            }
            break;
        }
        if (out.empty()) throw CodecError("expected a list", base + pos);
        return out;
    }

    FormulaPtr prime(SymbolTable& tab, bool extend) {
        if (at(USym::EqMark)) {
            ++pos;
            List l = list(tab, extend);
            expect(USym::CommaMark);
            List r = list(tab, extend);
            return mk_eq(std::move(l), std::move(r));
        }
        if (at(USym::LetterP)) {
            ++pos;
            int i = pred_index(tab, extend);
            std::vector<List> args;
            if (!done() && starts_list(peek())) {
                args.push_back(list(tab, extend));
                while (at(USym::CommaMark)) {
                    ++pos;
                    args.push_back(list(tab, extend));
                }
            }
            return mk_pred(tab.predicates[i - 1], std::move(args));
        }
        throw CodecError("expected a prime formula", base + pos);
    }

    FormulaPtr rformula(SymbolTable& tab, bool extend) {
        std::vector<FormulaPtr> prem;
        while (at(USym::ImplMark)) {
            ++pos;
            prem.push_back(prime(tab, extend));
        }
        FormulaPtr f = prime(tab, extend);
        for (auto it = prem.rbegin(); it != prem.rend(); ++it)
            f = mk_impl(*it, f);
        return f;
    }

    FormulaPtr formula(SymbolTable& tab) {
        USym c = peek();
        switch (c) {
        case USym::ImplMark:
        case USym::IffMark:
        case USym::AndMark:
        case USym::OrMark: {
            ++pos;
            FormulaPtr a = formula(tab);
            FormulaPtr b = formula(tab);
            Formula::Kind k = c == USym::ImplMark ? Formula::Impl
                            : c == USym::IffMark ? Formula::Iff
                            : c == USym::AndMark ? Formula::And : Formula::Or;
            return mk_binary(k, std::move(a), std::move(b));
        }
        case USym::NegMark:
            ++pos;
            return mk_neg(formula(tab));
        case USym::ForallMark:
        case USym::ExistsMark: {
            ++pos;
            expect(USym::LetterV);
            int v = accent_run();
            return mk_quant(c == USym::ForallMark ? Formula::Forall : Formula::Exists,
                            v, formula(tab));
        }
        default:
            return prime(tab, false);
        }
    }
};

// Splits at every star; the string must end with one.
std::vector<std::pair<size_t, UString>> star_segments(const UString& s) {
    if (s.empty() || s.back() != USym::Star)
        throw CodecError("basis string must end with a star", s.size());
    std::vector<std::pair<size_t, UString>> segs;
    UString cur;
    size_t start = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == USym::Star) {
            segs.emplace_back(start, cur);
            cur.clear();
            start = i + 1;
        } else {
            cur.push_back(s[i]);
        }
    }
    return segs;
}

int decode_count(const std::pair<size_t, UString>& seg) {
    const UString& u = seg.second;
    if (u.size() == 1 && u[0] == USym::Blank) return 0;
    if (u.empty()) throw CodecError("empty alphabet count", seg.first);
    for (size_t i = 0; i < u.size(); ++i)
        if (u[i] != USym::Accent)
            throw CodecError("alphabet count must be blank or accents", seg.first + i);
    return int(u.size());
}

} // namespace

RecursiveSystem decode_rsystem(const UString& s) {
    std::vector<std::pair<size_t, UString>> segs = star_segments(s);
    if (segs.size() < 3)
        throw CodecError("basis string needs alphabet counts and a formula part", 0);
    int k = decode_count(segs[0]);
    int l = decode_count(segs[1]);
    RecursiveSystem sys;
    for (int i = 1; i <= k; ++i) sys.table.add_constant(positional_constant(i));
    for (int i = 1; i <= l; ++i) sys.table.add_predicate(positional_predicate(i));
    bool empty_basis = segs.size() == 3 && segs[2].second.size() == 1 &&
                       segs[2].second[0] == USym::Blank;
    if (!empty_basis) {
        for (size_t i = 2; i < segs.size(); ++i) {
            UReader rd{segs[i].second, segs[i].first};
            FormulaPtr f = rd.rformula(sys.table, false);
            if (!rd.done())
                throw CodecError("trailing symbols after formula", segs[i].first + rd.pos);
            sys.basis.push_back(std::move(f));
        }
    }
    validate_system(sys);
    return sys;
}

UString encode_formula_u(const FormulaPtr& f, const SymbolTable& tab) {
    UString out;
    switch (f->kind) {
    case Formula::Eq:
    case Formula::Pred:
        put_prime(out, f, tab);
        return out;
    case Formula::Neg:
        out.push_back(USym::NegMark);
        break;
    case Formula::Impl:
        out.push_back(USym::ImplMark);
        break;
    case Formula::Iff:
        out.push_back(USym::IffMark);
        break;
    case Formula::And:
        out.push_back(USym::AndMark);
        break;
    case Formula::Or:
        out.push_back(USym::OrMark);
        break;
    case Formula::Forall:
        out.push_back(USym::ForallMark);
        break;
    case Formula::Exists:
        out.push_back(USym::ExistsMark);
        break;
    }
    if (f->kind == Formula::Forall || f->kind == Formula::Exists)
        put_indexed(out, USym::LetterV, f->var);
    if (f->a) {
        UString a = encode_formula_u(f->a, tab);
        out.insert(out.end(), a.begin(), a.end());
    }
    if (f->b) {
        UString b = encode_formula_u(f->b, tab);
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

FormulaPtr decode_formula_u(const UString& s, const SymbolTable& tab) {
    SymbolTable t = tab;
    UReader rd{s, 0};
    FormulaPtr f = rd.formula(t);
    if (!rd.done())
        throw CodecError("trailing symbols after formula", rd.pos);
    return f;
}

// ---------- Statements and diagonalization ----------

std::optional<Statement> classify(const UString& z) {
    size_t last = z.size();
    while (last > 0 && z[last - 1] != USym::Star) --last;
    if (last == 0 || last == z.size()) return std::nullopt;
    UString y(z.begin(), z.begin() + last);
    UString x(z.begin() + last, z.end());
    Statement st;
    try {
        st.sys = decode_rsystem(y);
        SymbolTable ext = st.sys.table;
        UReader rd{x, last};
        FormulaPtr goal = rd.prime(ext, true);
        if (!rd.done()) return std::nullopt;
        if (!is_elementary_formula(goal)) return std::nullopt;
        st.goal = std::move(goal);
    } catch (const CodecError&) {
        return std::nullopt;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    st.goal_in_system = formula_over(st.goal, st.sys.table);
    st.arity = int(st.goal->args.size());
    st.split = last;
    return st;
}

bool is_statement(const UString& z) { return classify(z).has_value(); }

bool is_predicate_string(const UString& p) {
    size_t last = p.size();
    while (last > 0 && p[last - 1] != USym::Star) --last;
    if (last == 0 || last == p.size()) return false;
    if (p[last] != USym::LetterP) return false;
    for (size_t i = last + 1; i < p.size(); ++i)
        if (p[i] != USym::Accent) return false;
    if (last + 1 == p.size()) return false;
    try {
        decode_rsystem(UString(p.begin(), p.begin() + last));
    } catch (const CodecError&) {
        return false;
    } catch (const std::invalid_argument&) {
        return false;
    }
    return true;
}

UString g11(const UString& s) {
    UString out;
    for (size_t i = 0; i < s.size(); ++i) {
        int idx = int(s[i]);
        if (idx >= rs_alphabet)
            throw CodecError("symbol outside the basis-string alphabet", i);
        put_indexed(out, USym::LetterA, idx + 1);
    }
    return out;
}

UString diag(const UString& p) {
    UString out = p;
    UString img = g11(p);
    out.insert(out.end(), img.begin(), img.end());
    return out;
}

// ---------- Bridging to the universal system ----------

List ustring_to_list(const UString& s) {
    List out;
    for (USym c : s) out.push_back(Item::constant(spelling(c)));
    return out;
}

UString list_to_ustring(const List& l) {
    UString out;
    for (const Item& it : l) {
        if (it.kind != Item::Const)
            throw std::invalid_argument("list does not mirror a plain string");
        auto hit = std::find(spellings.begin(), spellings.end(), it.sym);
        if (hit == spellings.end() || hit - spellings.begin() >= rs_alphabet)
            throw std::invalid_argument("constant outside the universal alphabet: " + it.sym);
        out.push_back(USym(hit - spellings.begin()));
    }
    return out;
}

Answer is_theorem(const UString& z, const DeriveBudget& budget, TheoremEngine engine) {
    if (engine == TheoremEngine::Internal) {
        FormulaPtr goal = mk_pred("Omega_s", {ustring_to_list(z)});
        DeriveResult r = derive(universal_system(), goal, budget);
        return r.status == DeriveStatus::Found ? Answer::Yes : Answer::Unknown;
    }
    std::optional<Statement> st = classify(z);
    if (!st) throw std::invalid_argument("not a statement");
    if (!st->goal_in_system) return Answer::No;
    if (is_special(st->sys)) {
        if (st->goal->kind == Formula::Eq)
            return st->goal->args[0] == st->goal->args[1] ? Answer::Yes : Answer::No;
        return decide(st->sys, st->goal).derivable ? Answer::Yes : Answer::No;
    }
    DeriveResult r = derive(st->sys, st->goal, budget);
    return r.status == DeriveStatus::Found ? Answer::Yes : Answer::Unknown;
}

} // namespace derivus
