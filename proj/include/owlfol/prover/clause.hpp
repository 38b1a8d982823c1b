// Copyright (c) the owlfol contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Clause representation for the bundled prover: literals over fol::Term
// with "=" as the (only) built-in predicate name, substitutions as
// name-to-term maps, syntactic unification with occurs check, matching,
// and theta-subsumption.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "owlfol/fol/ast.hpp"

namespace owlfol::prover {

using fol::Term;

inline const std::string kEq = "=";

inline int term_compare(const Term& a, const Term& b) {
    if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
    if (int c = a.name.compare(b.name)) return c;
    if (a.args.size() != b.args.size()) return a.args.size() < b.args.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (int c = term_compare(a.args[i], b.args[i])) return c;
    return 0;
}

struct Lit {
    bool pos = true;
    std::string pred;
    std::vector<Term> args;

    bool operator==(const Lit&) const = default;
    bool operator<(const Lit& o) const {
        if (pos != o.pos) return pos < o.pos;
        if (int c = pred.compare(o.pred)) return c < 0;
        if (args.size() != o.args.size()) return args.size() < o.args.size();
        for (std::size_t i = 0; i < args.size(); ++i)
            if (int c = term_compare(args[i], o.args[i])) return c < 0;
        return false;
    }
    bool isEq() const { return pred == kEq; }
    Lit negated() const { return Lit{!pos, pred, args}; }
};

using Clause = std::vector<Lit>;

using Subst = std::map<std::string, Term>;

inline Term substitute(const Term& t, const Subst& s) {
    if (t.kind == Term::Kind::Variable) {
        auto it = s.find(t.name);
        if (it == s.end()) return t;
        return substitute(it->second, s); // chase bindings
    }
    if (t.args.empty()) return t;
    Term out = t;
    for (Term& a : out.args) a = substitute(a, s);
    return out;
}

inline Lit substitute(const Lit& l, const Subst& s) {
    Lit out = l;
    for (Term& a : out.args) a = substitute(a, s);
    return out;
}

inline Clause substitute(const Clause& c, const Subst& s) {
    Clause out;
    out.reserve(c.size());
    for (const Lit& l : c) out.push_back(substitute(l, s));
    return out;
}

inline bool occurs(const std::string& var, const Term& t, const Subst& s) {
    if (t.kind == Term::Kind::Variable) {
        if (t.name == var) return true;
        auto it = s.find(t.name);
        return it != s.end() && occurs(var, it->second, s);
    }
    for (const Term& a : t.args)
        if (occurs(var, a, s)) return true;
    return false;
}

// Extends s to unify a and b; leaves s garbage on failure (callers copy).
inline bool unify(const Term& a, const Term& b, Subst& s) {
    Term ta = a.kind == Term::Kind::Variable ? substitute(a, s) : a;
    Term tb = b.kind == Term::Kind::Variable ? substitute(b, s) : b;
    if (ta.kind == Term::Kind::Variable) {
        if (tb.kind == Term::Kind::Variable && tb.name == ta.name) return true;
        if (occurs(ta.name, tb, s)) return false;
        s[ta.name] = tb;
        return true;
    }
    if (tb.kind == Term::Kind::Variable) {
        if (occurs(tb.name, ta, s)) return false;
        s[tb.name] = ta;
        return true;
    }
    if (ta.name != tb.name || ta.args.size() != tb.args.size() ||
        ta.kind != tb.kind)
        return false;
    for (std::size_t i = 0; i < ta.args.size(); ++i)
        if (!unify(ta.args[i], tb.args[i], s)) return false;
    return true;
}

inline bool unify(const Lit& a, const Lit& b, Subst& s) {
    if (a.pred != b.pred || a.args.size() != b.args.size()) return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!unify(a.args[i], b.args[i], s)) return false;
    return true;
}

// One-way matching: pattern variables bind, target stays fixed.
inline bool match(const Term& pattern, const Term& target, Subst& s) {
    if (pattern.kind == Term::Kind::Variable) {
        auto it = s.find(pattern.name);
        if (it != s.end()) return it->second == target;
        s[pattern.name] = target;
        return true;
    }
    if (target.kind == Term::Kind::Variable) return false;
    if (pattern.name != target.name || pattern.args.size() != target.args.size())
        return false;
    for (std::size_t i = 0; i < pattern.args.size(); ++i)
        if (!match(pattern.args[i], target.args[i], s)) return false;
    return true;
}

inline bool match(const Lit& pattern, const Lit& target, Subst& s) {
    if (pattern.pos != target.pos || pattern.pred != target.pred ||
        pattern.args.size() != target.args.size())
        return false;
    for (std::size_t i = 0; i < pattern.args.size(); ++i)
        if (!match(pattern.args[i], target.args[i], s)) return false;
    return true;
}

inline void collect_vars(const Term& t, std::vector<std::string>& out) {
    if (t.kind == Term::Kind::Variable) {
        for (const std::string& v : out)
            if (v == t.name) return;
        out.push_back(t.name);
        return;
    }
    for (const Term& a : t.args) collect_vars(a, out);
}

inline std::vector<std::string> clause_vars(const Clause& c) {
    std::vector<std::string> vars;
    for (const Lit& l : c)
        for (const Term& a : l.args) collect_vars(a, vars);
    return vars;
}

// Rename all variables to fresh V<n> names drawn from a shared counter.
inline Clause rename_apart(const Clause& c, unsigned long& counter) {
    Subst s;
    for (const std::string& v : clause_vars(c)) {
        std::string fresh = "V" + std::to_string(counter++);
        if (fresh != v) s[v] = fol::var(std::move(fresh));
    }
    return substitute(c, s);
}

inline int term_weight(const Term& t) {
    int w = 1;
    for (const Term& a : t.args) w += term_weight(a);
    return w;
}

inline int clause_weight(const Clause& c) {
    int w = 0;
    for (const Lit& l : c) {
        w += 1;
        for (const Term& a : l.args) w += term_weight(a);
    }
    return w;
}

// Drop duplicate literals and trivial x != x; detect tautologies.
inline Clause simplify(const Clause& c) {
    Clause out;
    for (const Lit& l : c) {
        if (!l.pos && l.isEq() && l.args[0] == l.args[1]) continue;
        bool dup = false;
        for (const Lit& k : out)
            if (k == l) { dup = true; break; }
        if (!dup) out.push_back(l);
    }
    return out;
}

inline bool is_tautology(const Clause& c) {
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Lit& l = c[i];
        if (l.pos && l.isEq() && l.args[0] == l.args[1]) return true;
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (c[j].pos != l.pos && c[j].pred == l.pred && c[j].args == l.args)
                return true;
    }
    return false;
}

namespace detail {

inline bool subsumeFrom(const Clause& c, std::size_t i, const Clause& d,
                        const Subst& s) {
    if (i == c.size()) return true;
    for (const Lit& target : d) {
        Subst ext = s;
        if (match(c[i], target, ext) && subsumeFrom(c, i + 1, d, ext)) return true;
    }
    return false;
}

} // namespace detail

// c subsumes d: some substitution maps every literal of c onto a literal of d.
inline bool subsumes(const Clause& c, const Clause& d) {
    if (c.size() > d.size()) return false;
    return detail::subsumeFrom(c, 0, d, Subst{});
}

inline std::string to_string(const Term& t) {
    std::string out = t.name;
    if (!t.args.empty()) {
        out += "(";
        for (std::size_t i = 0; i < t.args.size(); ++i) {
            if (i) out += ",";
            out += to_string(t.args[i]);
        }
        out += ")";
    }
    return out;
}

inline std::string to_string(const Lit& l) {
    if (l.isEq())
        return to_string(l.args[0]) + (l.pos ? " = " : " != ") + to_string(l.args[1]);
    std::string out = l.pos ? "" : "~";
    out += l.pred;
    if (!l.args.empty()) {
        out += "(";
        for (std::size_t i = 0; i < l.args.size(); ++i) {
            if (i) out += ",";
            out += to_string(l.args[i]);
        }
        out += ")";
    }
    return out;
}

inline std::string to_string(const Clause& c) {
    if (c.empty()) return "$false";
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += " | ";
        out += to_string(c[i]);
    }
    return out;
}

} // namespace owlfol::prover
