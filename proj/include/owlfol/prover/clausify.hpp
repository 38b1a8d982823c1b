// Copyright (c) the owlfol contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Formula -> clause set: polarity-driven NNF with on-the-fly standardizing
// apart, Skolemization of existentials over the universals in scope, then
// distribution of Or over And. Equality axioms (reflexivity, symmetry,
// transitivity, congruence per argument position) are appended when a
// problem mentions "=" at all.

#include <set>
#include <string>
#include <vector>

#include "owlfol/error.hpp"
#include "owlfol/fol/ast.hpp"
#include "owlfol/prover/clause.hpp"

namespace owlfol::prover {

class Clausifier {
public:
    std::vector<Clause> run(const fol::Formula& f) {
        std::vector<Clause> out;
        Subst env;
        cnf(f, true, env, {}, Clause{}, out);
        std::vector<Clause> kept;
        for (Clause& c : out) {
            Clause s = simplify(c);
            if (!is_tautology(s)) kept.push_back(std::move(s));
        }
        return kept;
    }

private:
    unsigned long varCounter_ = 0;
    unsigned long skCounter_ = 0;

    Term applyEnv(const Term& t, const Subst& env) {
        if (t.kind == Term::Kind::Variable) {
            auto it = env.find(t.name);
            if (it == env.end())
                throw Error("clausify: unbound variable " + t.name);
            return it->second;
        }
        if (t.args.empty()) return t;
        Term out = t;
        for (Term& a : out.args) a = applyEnv(a, env);
        return out;
    }

    // Emits clauses for f under the given polarity; `rest` carries the
    // disjunctive context accumulated so far. And under + splits into
    // independent clause sets sharing the context; Or under + extends the
    // context. CNF distribution falls out of recursing Or branches with the
    // sibling's clause sets.
    void cnf(const fol::Formula& f, bool pos, Subst& env,
             std::vector<Term> universals, const Clause& rest,
             std::vector<Clause>& out) {
        using K = fol::Formula::Kind;
        switch (f.kind) {
        case K::True:
            if (pos) return;           // clause satisfied, vanish
            out.push_back(rest);       // ~true contributes nothing
            return;
        case K::False:
            if (!pos) return;
            out.push_back(rest);
            return;
        case K::Predicate:
        case K::Equality: {
            Lit l;
            l.pos = pos;
            l.pred = f.kind == K::Equality ? kEq : f.name;
            for (const Term& t : f.terms) l.args.push_back(applyEnv(t, env));
            Clause c = rest;
            c.push_back(std::move(l));
            out.push_back(std::move(c));
            return;
        }
        case K::Not:
            cnf(f.subs[0], !pos, env, std::move(universals), rest, out);
            return;
        case K::And:
        case K::Or: {
            bool conjunctive = (f.kind == K::And) == pos;
            if (conjunctive) {
                for (const fol::Formula& sub : f.subs)
                    cnf(sub, pos, env, universals, rest, out);
                return;
            }
            // Disjunctive: fold left, cross-multiplying partial clauses.
            std::vector<Clause> partial{rest};
            for (const fol::Formula& sub : f.subs) {
                std::vector<Clause> next;
                for (const Clause& p : partial)
                    cnf(sub, pos, env, universals, p, next);
                partial = std::move(next);
            }
            for (Clause& c : partial) out.push_back(std::move(c));
            return;
        }
        case K::Implies: {
            fol::Formula expanded =
                fol::disj({fol::neg(f.subs[0]), f.subs[1]});
            cnf(expanded, pos, env, std::move(universals), rest, out);
            return;
        }
        case K::Iff: {
            fol::Formula expanded = fol::conj(
                {fol::implies(f.subs[0], f.subs[1]),
                 fol::implies(f.subs[1], f.subs[0])});
            cnf(expanded, pos, env, std::move(universals), rest, out);
            return;
        }
        case K::Forall:
        case K::Exists: {
            bool universal = (f.kind == K::Forall) == pos;
            Subst inner = env;
            // "U" prefix: saturation renames onto "V<n>", and the two
            // namespaces must stay disjoint or renaming could bind a
            // variable to itself and loop.
            for (const std::string& v : f.vars) {
                if (universal) {
                    Term fresh = fol::var("U" + std::to_string(varCounter_++));
                    universals.push_back(fresh);
                    inner[v] = fresh;
                } else {
                    Term sk;
                    sk.name = "#sk" + std::to_string(++skCounter_);
                    sk.kind = universals.empty() ? Term::Kind::Constant
                                                 : Term::Kind::Function;
                    sk.args = universals;
                    inner[v] = sk;
                }
            }
            cnf(f.subs[0], pos, inner, std::move(universals), rest, out);
            return;
        }
        }
        throw Error("clausify: unhandled formula kind");
    }
};

// Problem-level clausification: axioms positive, the conjunction of
// conjectures negated. A single Clausifier keeps Skolem names distinct.
inline std::vector<Clause> clausify_problem(const std::vector<fol::Formula>& axioms,
                                            const std::vector<fol::Formula>& conjectures) {
    Clausifier cl;
    std::vector<Clause> clauses;
    for (const fol::Formula& f : axioms)
        for (Clause& c : cl.run(f)) clauses.push_back(std::move(c));
    if (!conjectures.empty()) {
        std::vector<fol::Formula> parts = conjectures;
        for (Clause& c : cl.run(fol::neg(fol::conj(std::move(parts)))))
            clauses.push_back(std::move(c));
    }
    return clauses;
}

namespace detail {

struct SigScan {
    std::set<std::pair<std::string, std::size_t>> preds, funs;
    bool hasEq = false;

    void term(const Term& t) {
        if (t.kind == Term::Kind::Function) funs.insert({t.name, t.args.size()});
        for (const Term& a : t.args) term(a);
    }
    void scan(const std::vector<Clause>& clauses) {
        for (const Clause& c : clauses)
            for (const Lit& l : c) {
                if (l.isEq()) hasEq = true;
                else preds.insert({l.pred, l.args.size()});
                for (const Term& a : l.args) term(a);
            }
    }
};

} // namespace detail

// Equality axioms for the signature actually appearing in `clauses`; empty
// when the problem is equality-free.
inline std::vector<Clause> equality_axioms(const std::vector<Clause>& clauses) {
    detail::SigScan sig;
    sig.scan(clauses);
    std::vector<Clause> out;
    if (!sig.hasEq) return out;

    Term x = fol::var("V_eq_x"), y = fol::var("V_eq_y"), z = fol::var("V_eq_z");
    auto eqLit = [](bool pos, const Term& a, const Term& b) {
        return Lit{pos, kEq, {a, b}};
    };
    out.push_back({eqLit(true, x, x)});
    out.push_back({eqLit(false, x, y), eqLit(true, y, x)});
    out.push_back({eqLit(false, x, y), eqLit(false, y, z), eqLit(true, x, z)});

    for (const auto& [name, arity] : sig.preds)
        for (std::size_t i = 0; i < arity; ++i) {
            std::vector<Term> before, after;
            for (std::size_t j = 0; j < arity; ++j) {
                Term v = fol::var("V_eq_a" + std::to_string(j));
                before.push_back(j == i ? x : v);
                after.push_back(j == i ? y : v);
            }
            out.push_back({eqLit(false, x, y), Lit{false, name, before},
                           Lit{true, name, after}});
        }
    for (const auto& [name, arity] : sig.funs)
        for (std::size_t i = 0; i < arity; ++i) {
            std::vector<Term> before, after;
            for (std::size_t j = 0; j < arity; ++j) {
                Term v = fol::var("V_eq_a" + std::to_string(j));
                before.push_back(j == i ? x : v);
                after.push_back(j == i ? y : v);
            }
            Term fa = fol::fun(name, before), fb = fol::fun(name, after);
            out.push_back({eqLit(false, x, y), eqLit(true, fa, fb)});
        }
    return out;
}

} // namespace owlfol::prover
