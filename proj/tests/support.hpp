// Copyright (c) the owlfol contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Shared helpers for the test suite: fixture paths, subprocess capture,
// random generators, a truth-table evaluator and an independent brute-force
// satisfiability oracle for tiny ontologies.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "owlfol/fol/ast.hpp"
#include "owlfol/owl/model.hpp"

namespace testsupport {

inline std::string fixture(const std::string& name) {
    return std::string(FIXTURES_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct RunResult {
    int exitCode = -1;
    std::string output; // stdout + stderr interleaved
};

inline std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'')
            out += "'\\''";
        else
            out.push_back(c);
    }
    return out + "'";
}

// run a command line, capture combined output and the exit code
inline RunResult run_command(const std::vector<std::string>& argv) {
    std::string cmd;
    for (const std::string& a : argv) {
        if (!cmd.empty()) cmd.push_back(' ');
        cmd += shell_quote(a);
    }
    cmd += " 2>&1";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
    int status = pclose(pipe);
    if (WIFEXITED(status)) r.exitCode = WEXITSTATUS(status);
    return r;
}

// -------------------------------------------------------------------------
// Random formula generation

// Propositional: 0-ary predicates p0..p{n-1}, connectives only.
inline owlfol::fol::Formula random_prop_formula(std::mt19937& rng, int props, int depth) {
    using namespace owlfol::fol;
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 6);
    switch (pick(rng)) {
    case 0:
        return pred("p" + std::to_string(std::uniform_int_distribution<int>(
                                             0, props - 1)(rng)));
    case 1:
        return std::uniform_int_distribution<int>(0, 1)(rng) ? truth() : falsity();
    case 2:
        return neg(random_prop_formula(rng, props, depth - 1));
    case 3:
        return conj({random_prop_formula(rng, props, depth - 1),
                     random_prop_formula(rng, props, depth - 1)});
    case 4:
        return disj({random_prop_formula(rng, props, depth - 1),
                     random_prop_formula(rng, props, depth - 1)});
    case 5:
        return implies(random_prop_formula(rng, props, depth - 1),
                       random_prop_formula(rng, props, depth - 1));
    default:
        return iff(random_prop_formula(rng, props, depth - 1),
                   random_prop_formula(rng, props, depth - 1));
    }
}

// First-order: quantifiers, equality, functions, constants. Always closed.
inline owlfol::fol::Formula random_fof(std::mt19937& rng, std::vector<std::string> scope,
                                       int depth) {
    using namespace owlfol::fol;
    auto term = [&](auto&& self, int tdepth) -> Term {
        std::uniform_int_distribution<int> pick(0, scope.empty() ? 1 : 2);
        int c = pick(rng);
        if (c == 2) return var(scope[std::uniform_int_distribution<std::size_t>(
                                   0, scope.size() - 1)(rng)]);
        if (c == 1 && tdepth > 0)
            return fun("f" + std::to_string(std::uniform_int_distribution<int>(0, 1)(rng)),
                       {self(self, tdepth - 1)});
        return cst("c" + std::to_string(std::uniform_int_distribution<int>(0, 2)(rng)));
    };
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 8);
    switch (pick(rng)) {
    case 0:
        return pred("q" + std::to_string(std::uniform_int_distribution<int>(0, 1)(rng)),
                    {term(term, 1)});
    case 1:
        return pred("r", {term(term, 1), term(term, 1)});
    case 2:
        return eq(term(term, 1), term(term, 1));
    case 3:
        return neg(random_fof(rng, scope, depth - 1));
    case 4:
        return conj({random_fof(rng, scope, depth - 1), random_fof(rng, scope, depth - 1)});
    case 5:
        return disj({random_fof(rng, scope, depth - 1), random_fof(rng, scope, depth - 1)});
    case 6:
        return implies(random_fof(rng, scope, depth - 1),
                       random_fof(rng, scope, depth - 1));
    default: {
        std::string v = "V" + std::to_string(scope.size());
        scope.push_back(v);
        Formula body = random_fof(rng, scope, depth - 1);
        return std::uniform_int_distribution<int>(0, 1)(rng) ? forall({v}, std::move(body))
                                                             : exists({v}, std::move(body));
    }
    }
}

// -------------------------------------------------------------------------
// Truth-table evaluation for propositional formulas (0-ary predicates)

inline bool eval_prop(const owlfol::fol::Formula& f,
                      const std::map<std::string, bool>& env) {
    using K = owlfol::fol::Formula::Kind;
    switch (f.kind) {
    case K::True: return true;
    case K::False: return false;
    case K::Predicate: return env.at(f.name);
    case K::Not: return !eval_prop(f.subs[0], env);
    case K::And:
        for (const auto& s : f.subs)
            if (!eval_prop(s, env)) return false;
        return true;
    case K::Or:
        for (const auto& s : f.subs)
            if (eval_prop(s, env)) return true;
        return false;
    case K::Implies: return !eval_prop(f.subs[0], env) || eval_prop(f.subs[1], env);
    case K::Iff: return eval_prop(f.subs[0], env) == eval_prop(f.subs[1], env);
    default: throw std::runtime_error("not propositional");
    }
}

// All 2^n assignments over the given proposition names, as a bit vector of
// evaluation results (the formula's truth table).
inline std::vector<bool> truth_table(const owlfol::fol::Formula& f,
                                     const std::vector<std::string>& props) {
    std::vector<bool> out;
    for (std::size_t bits = 0; bits < (1u << props.size()); ++bits) {
        std::map<std::string, bool> env;
        for (std::size_t i = 0; i < props.size(); ++i) env[props[i]] = (bits >> i) & 1;
        out.push_back(eval_prop(f, env));
    }
    return out;
}

// -------------------------------------------------------------------------
// Brute-force satisfiability for tiny ontologies
//
// Direct evaluation of SubClassOf / DisjointClasses / ClassAssertion /
// ObjectPropertyAssertion (named classes only) over all interpretations
// with domain sizes 1..maxDomain. Independent of the OWL-to-FOL
// translation, so it can act as an oracle for the prover pipeline.

struct TinyOntology {
    std::vector<owlfol::owl::OwlAxiom> axioms;

    std::set<std::string> classNames, propNames, indNames;
    void scan() {
        using K = owlfol::owl::OwlAxiom::Kind;
        for (const auto& ax : axioms) {
            switch (ax.kind) {
            case K::SubClassOf:
            case K::DisjointClasses:
                for (const auto& ce : ax.classes) classNames.insert(ce.iri);
                break;
            case K::ClassAssertion:
                classNames.insert(ax.classes[0].iri);
                indNames.insert(ax.individuals[0]);
                break;
            case K::ObjectPropertyAssertion:
                propNames.insert(ax.properties[0]);
                indNames.insert(ax.individuals[0]);
                indNames.insert(ax.individuals[1]);
                break;
            default: break;
            }
        }
    }
};

inline bool tiny_satisfiable(TinyOntology onto, int maxDomain = 3) {
    using K = owlfol::owl::OwlAxiom::Kind;
    onto.scan();
    std::vector<std::string> cls(onto.classNames.begin(), onto.classNames.end());
    std::vector<std::string> props(onto.propNames.begin(), onto.propNames.end());
    std::vector<std::string> inds(onto.indNames.begin(), onto.indNames.end());

    for (int n = 1; n <= maxDomain; ++n) {
        // class extensions: one bitmask over n elements each
        std::vector<std::size_t> clsExt(cls.size(), 0);
        std::vector<std::size_t> propExt(props.size(), 0); // bitmask over n*n pairs
        std::vector<int> indVal(inds.size(), 0);

        std::size_t clsMax = 1ull << (cls.size() * n);
        std::size_t propMax = 1ull << (props.size() * n * n);
        std::size_t indMax = 1;
        for (std::size_t i = 0; i < inds.size(); ++i) indMax *= n;

        for (std::size_t ci = 0; ci < clsMax; ++ci) {
            for (std::size_t i = 0; i < cls.size(); ++i)
                clsExt[i] = (ci >> (i * n)) & ((1u << n) - 1);
            for (std::size_t pi = 0; pi < propMax; ++pi) {
                for (std::size_t i = 0; i < props.size(); ++i)
                    propExt[i] = (pi >> (i * n * n)) & ((1ull << (n * n)) - 1);
                for (std::size_t vi = 0; vi < indMax; ++vi) {
                    std::size_t rest = vi;
                    for (std::size_t i = 0; i < inds.size(); ++i) {
                        indVal[i] = static_cast<int>(rest % n);
                        rest /= n;
                    }
                    auto inClass = [&](const std::string& c, int e) {
                        std::size_t i = std::find(cls.begin(), cls.end(), c) - cls.begin();
                        return ((clsExt[i] >> e) & 1) != 0;
                    };
                    auto inProp = [&](const std::string& p, int a, int b) {
                        std::size_t i =
                            std::find(props.begin(), props.end(), p) - props.begin();
                        return ((propExt[i] >> (a * n + b)) & 1) != 0;
                    };
                    auto valOf = [&](const std::string& ind) {
                        std::size_t i = std::find(inds.begin(), inds.end(), ind) -
                                        inds.begin();
                        return indVal[i];
                    };
                    bool ok = true;
                    for (const auto& ax : onto.axioms) {
                        switch (ax.kind) {
                        case K::SubClassOf:
                            for (int e = 0; e < n && ok; ++e)
                                if (inClass(ax.classes[0].iri, e) &&
                                    !inClass(ax.classes[1].iri, e))
                                    ok = false;
                            break;
                        case K::DisjointClasses:
                            for (int e = 0; e < n && ok; ++e)
                                if (inClass(ax.classes[0].iri, e) &&
                                    inClass(ax.classes[1].iri, e))
                                    ok = false;
                            break;
                        case K::ClassAssertion:
                            ok = inClass(ax.classes[0].iri, valOf(ax.individuals[0]));
                            break;
                        case K::ObjectPropertyAssertion:
                            ok = inProp(ax.properties[0], valOf(ax.individuals[0]),
                                        valOf(ax.individuals[1]));
                            break;
                        default: break;
                        }
                        if (!ok) break;
                    }
                    if (ok) return true;
                }
            }
        }
    }
    return false;
}

} // namespace testsupport
