// Copyright (c) the owlfol contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// First-order terms and formulas, shared by the TPTP and CLIF front ends,
// the OWL translator and the bundled prover. Plain value types: copying is
// fine at the sizes this library deals with.

#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "owlfol/error.hpp"

namespace owlfol::fol {

struct Term {
    enum class Kind { Variable, Constant, Function };

    Kind kind = Kind::Constant;
    std::string name;
    std::vector<Term> args; // Function only

    bool operator==(const Term&) const = default;
};

inline Term var(std::string name) { return Term{Term::Kind::Variable, std::move(name), {}}; }
inline Term cst(std::string name) { return Term{Term::Kind::Constant, std::move(name), {}}; }
inline Term fun(std::string name, std::vector<Term> args) {
    return Term{Term::Kind::Function, std::move(name), std::move(args)};
}

struct Formula {
    enum class Kind {
        True,
        False,
        Predicate,
        Equality,
        Not,
        And,
        Or,
        Implies,
        Iff,
        Forall,
        Exists,
    };

    Kind kind = Kind::True;
    std::string name;               // Predicate symbol
    std::vector<Term> terms;        // Predicate arguments, or the two Equality sides
    std::vector<Formula> subs;      // subformulas
    std::vector<std::string> vars;  // quantified variables

    bool operator==(const Formula&) const = default;
};

inline Formula truth() { return Formula{Formula::Kind::True, {}, {}, {}, {}}; }
inline Formula falsity() { return Formula{Formula::Kind::False, {}, {}, {}, {}}; }

inline Formula pred(std::string name, std::vector<Term> args = {}) {
    return Formula{Formula::Kind::Predicate, std::move(name), std::move(args), {}, {}};
}

inline Formula eq(Term lhs, Term rhs) {
    return Formula{Formula::Kind::Equality, {}, {std::move(lhs), std::move(rhs)}, {}, {}};
}

inline Formula neg(Formula f) {
    return Formula{Formula::Kind::Not, {}, {}, {std::move(f)}, {}};
}

inline Formula neq(Term lhs, Term rhs) { return neg(eq(std::move(lhs), std::move(rhs))); }

// n-ary connective helpers. And/Or nodes always carry >= 2 children; the
// helpers collapse the degenerate sizes instead of building invalid nodes.
inline Formula conj(std::vector<Formula> fs) {
    if (fs.empty()) return truth();
    if (fs.size() == 1) return std::move(fs.front());
    return Formula{Formula::Kind::And, {}, {}, std::move(fs), {}};
}

inline Formula disj(std::vector<Formula> fs) {
    if (fs.empty()) return falsity();
    if (fs.size() == 1) return std::move(fs.front());
    return Formula{Formula::Kind::Or, {}, {}, std::move(fs), {}};
}

inline Formula implies(Formula lhs, Formula rhs) {
    return Formula{Formula::Kind::Implies, {}, {}, {std::move(lhs), std::move(rhs)}, {}};
}

inline Formula iff(Formula lhs, Formula rhs) {
    return Formula{Formula::Kind::Iff, {}, {}, {std::move(lhs), std::move(rhs)}, {}};
}

inline Formula forall(std::vector<std::string> vars, Formula body) {
    if (vars.empty()) return body;
    return Formula{Formula::Kind::Forall, {}, {}, {std::move(body)}, std::move(vars)};
}

inline Formula exists(std::vector<std::string> vars, Formula body) {
    if (vars.empty()) return body;
    return Formula{Formula::Kind::Exists, {}, {}, {std::move(body)}, std::move(vars)};
}

// -------------------------------------------------------------------------
// Free variables

namespace detail {

inline void term_vars(const Term& t, const std::set<std::string>& bound,
                      std::set<std::string>& out) {
    if (t.kind == Term::Kind::Variable) {
        if (!bound.count(t.name)) out.insert(t.name);
        return;
    }
    for (const Term& a : t.args) term_vars(a, bound, out);
}

inline void formula_vars(const Formula& f, std::set<std::string> bound,
                         std::set<std::string>& out) {
    switch (f.kind) {
    case Formula::Kind::True:
    case Formula::Kind::False:
        return;
    case Formula::Kind::Predicate:
    case Formula::Kind::Equality:
        for (const Term& t : f.terms) term_vars(t, bound, out);
        return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
        for (const std::string& v : f.vars) bound.insert(v);
        formula_vars(f.subs.front(), bound, out);
        return;
    default:
        for (const Formula& s : f.subs) formula_vars(s, bound, out);
        return;
    }
}

} // namespace detail

inline std::set<std::string> free_variables(const Formula& f) {
    std::set<std::string> out;
    detail::formula_vars(f, {}, out);
    return out;
}

inline bool is_closed(const Formula& f) { return free_variables(f).empty(); }

// Universal closure; no-op on closed formulas. Free variables are quantified
// in sorted order so the result is deterministic.
inline Formula universal_closure(Formula f) {
    std::set<std::string> fv = free_variables(f);
    if (fv.empty()) return f;
    return forall(std::vector<std::string>(fv.begin(), fv.end()), std::move(f));
}

// -------------------------------------------------------------------------
// Signature

enum class SymbolKind { Predicate, Function, Constant };

struct Symbol {
    SymbolKind kind;
    std::string name;
    std::size_t arity;

    bool operator==(const Symbol&) const = default;
    bool operator<(const Symbol& o) const {
        return std::tie(kind, name, arity) < std::tie(o.kind, o.name, o.arity);
    }
};

namespace detail {

inline void term_symbols(const Term& t, std::set<Symbol>& out) {
    switch (t.kind) {
    case Term::Kind::Variable:
        return;
    case Term::Kind::Constant:
        out.insert(Symbol{SymbolKind::Constant, t.name, 0});
        return;
    case Term::Kind::Function:
        out.insert(Symbol{SymbolKind::Function, t.name, t.args.size()});
        for (const Term& a : t.args) term_symbols(a, out);
        return;
    }
}

} // namespace detail

inline void collect_symbols(const Formula& f, std::set<Symbol>& out) {
    if (f.kind == Formula::Kind::Predicate)
        out.insert(Symbol{SymbolKind::Predicate, f.name, f.terms.size()});
    for (const Term& t : f.terms) detail::term_symbols(t, out);
    for (const Formula& s : f.subs) collect_symbols(s, out);
}

inline std::set<Symbol> collect_symbols(const Formula& f) {
    std::set<Symbol> out;
    collect_symbols(f, out);
    return out;
}

// -------------------------------------------------------------------------
// Symbol renaming (used by the aligner)

template <typename Fn> // Fn: (SymbolKind, const std::string&, std::size_t arity) -> std::string
Term map_symbols(const Term& t, Fn&& fn) {
    switch (t.kind) {
    case Term::Kind::Variable:
        return t;
    case Term::Kind::Constant:
        return cst(fn(SymbolKind::Constant, t.name, 0));
    case Term::Kind::Function: {
        std::vector<Term> args;
        args.reserve(t.args.size());
        for (const Term& a : t.args) args.push_back(map_symbols(a, fn));
        return fun(fn(SymbolKind::Function, t.name, t.args.size()), std::move(args));
    }
    }
    return t; // unreachable
}

template <typename Fn>
Formula map_symbols(const Formula& f, Fn&& fn) {
    Formula out = f;
    if (f.kind == Formula::Kind::Predicate)
        out.name = fn(SymbolKind::Predicate, f.name, f.terms.size());
    for (Term& t : out.terms) t = map_symbols(t, fn);
    for (Formula& s : out.subs) s = map_symbols(s, fn);
    return out;
}

// -------------------------------------------------------------------------
// Structural sanity check. Returns an empty string when the formula obeys
// the AST invariants, otherwise a description of the first violation.

namespace detail {

inline std::string check_term(const Term& t) {
    if (t.name.empty()) return "term with empty name";
    if (t.kind == Term::Kind::Function && t.args.empty())
        return "function " + t.name + " with no arguments";
    if (t.kind != Term::Kind::Function && !t.args.empty())
        return "non-function term " + t.name + " with arguments";
    for (const Term& a : t.args) {
        std::string err = check_term(a);
        if (!err.empty()) return err;
    }
    return {};
}

} // namespace detail

inline std::string validate(const Formula& f) {
    for (const Term& t : f.terms) {
        std::string err = detail::check_term(t);
        if (!err.empty()) return err;
    }
    switch (f.kind) {
    case Formula::Kind::True:
    case Formula::Kind::False:
        return {};
    case Formula::Kind::Predicate:
        if (f.name.empty()) return "predicate with empty name";
        break;
    case Formula::Kind::Equality:
        if (f.terms.size() != 2) return "equality without exactly two sides";
        break;
    case Formula::Kind::Not:
        if (f.subs.size() != 1) return "negation without exactly one subformula";
        break;
    case Formula::Kind::And:
    case Formula::Kind::Or:
        if (f.subs.size() < 2) return "and/or with fewer than two subformulas";
        break;
    case Formula::Kind::Implies:
    case Formula::Kind::Iff:
        if (f.subs.size() != 2) return "binary connective without exactly two subformulas";
        break;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
        if (f.vars.empty()) return "quantifier with empty variable list";
        if (f.subs.size() != 1) return "quantifier without exactly one body";
        std::set<std::string> seen(f.vars.begin(), f.vars.end());
        if (seen.size() != f.vars.size()) return "duplicate variable in quantifier list";
        break;
    }
    }
    for (const Formula& s : f.subs) {
        std::string err = validate(s);
        if (!err.empty()) return err;
    }
    return {};
}

// True when no variable name is bound by two different quantifier
// occurrences anywhere in the formula (the translator guarantees this).
inline bool binders_distinct(const Formula& f, std::set<std::string>& seen) {
    if (f.kind == Formula::Kind::Forall || f.kind == Formula::Kind::Exists) {
        for (const std::string& v : f.vars)
            if (!seen.insert(v).second) return false;
    }
    for (const Formula& s : f.subs)
        if (!binders_distinct(s, seen)) return false;
    return true;
}

inline bool binders_distinct(const Formula& f) {
    std::set<std::string> seen;
    return binders_distinct(f, seen);
}

// -------------------------------------------------------------------------
// TPTP problems. Units pair a formula with a name and role; roles beyond
// axiom and conjecture are out of scope.

enum class Role { Axiom, Conjecture };

struct TptpUnit {
    std::string name;
    Role role = Role::Axiom;
    Formula formula;

    bool operator==(const TptpUnit&) const = default;
};

struct TptpProblem {
    std::vector<TptpUnit> units;

    bool operator==(const TptpProblem&) const = default;
};

} // namespace owlfol::fol
