// Copyright (c) the owlfol contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Finite model search in the MACE style: clauses are flattened so every
// literal is a predicate over variables, an equality between variables, or
// a (dis)equation f(vars) = var; the flat clauses are grounded over domains
// of increasing size and handed to a small DPLL solver, together with
// exactly-one constraints for function tables and triangular symmetry
// breaking over the constants.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <vector>

#include "owlfol/prover/clause.hpp"

namespace owlfol::prover {

namespace model_detail {

// C[t] -> C[Z] | t != Z for every non-variable proper subterm and every
// deep term in predicate position, until literals are flat.
inline bool flatten_step(Clause& c, unsigned long& counter) {
    auto freshVar = [&] { return fol::var("Vm" + std::to_string(counter++)); };

    for (std::size_t li = 0; li < c.size(); ++li) {
        Lit& l = c[li];
        if (l.isEq()) {
            // orient: non-variable side left
            if (l.args[0].kind == Term::Kind::Variable &&
                l.args[1].kind != Term::Kind::Variable)
                std::swap(l.args[0], l.args[1]);
            // flat shapes: v=w or f(vars)=v
            bool leftFun = l.args[0].kind != Term::Kind::Variable;
            if (leftFun) {
                for (std::size_t ai = 0; ai < l.args[0].args.size(); ++ai)
                    if (l.args[0].args[ai].kind != Term::Kind::Variable) {
                        Term sub = l.args[0].args[ai];
                        Term z = freshVar();
                        c[li].args[0].args[ai] = z;
                        c.push_back(Lit{false, kEq, {sub, z}});
                        return true;
                    }
                if (l.args[1].kind != Term::Kind::Variable) {
                    Term sub = l.args[1];
                    Term z = freshVar();
                    c[li].args[1] = z;
                    c.push_back(Lit{false, kEq, {sub, z}});
                    return true;
                }
            }
            continue;
        }
        for (std::size_t ai = 0; ai < l.args.size(); ++ai)
            if (l.args[ai].kind != Term::Kind::Variable) {
                Term sub = l.args[ai];
                Term z = freshVar();
                c[li].args[ai] = z;
                c.push_back(Lit{false, kEq, {sub, z}});
                return true;
            }
    }
    return false;
}

inline Clause flatten(Clause c, unsigned long& counter) {
    while (flatten_step(c, counter)) {
    }
    return c;
}

struct FunKey {
    std::string name;
    std::vector<int> args;
    bool operator<(const FunKey& o) const {
        if (name != o.name) return name < o.name;
        return args < o.args;
    }
};

struct PredKey {
    std::string name;
    std::vector<int> args;
    bool operator<(const PredKey& o) const {
        if (name != o.name) return name < o.name;
        return args < o.args;
    }
};

// CDCL solver: two watched literals, first-UIP clause learning, VSIDS
// branching with phase saving and Luby restarts. Grounded finite-model
// instances embed pigeonhole cores (element disjointness vs domain size),
// which plain DPLL cannot get through in reasonable time.
//
// External literals are ±(v+1); internally a literal is 2v (positive) or
// 2v+1 (negative).
class MiniSat {
public:
    int newVar() {
        int v = static_cast<int>(assign_.size());
        assign_.push_back(-1);
        level_.push_back(0);
        reason_.push_back(-1);
        activity_.push_back(0.0);
        phase_.push_back(0);
        seen_.push_back(0);
        heapPos_.push_back(-1);
        watches_.emplace_back();
        watches_.emplace_back();
        return v;
    }

    // lits: var index shifted, positive = (v+1), negative = -(v+1)
    bool addClause(std::vector<int> lits) {
        std::sort(lits.begin(), lits.end());
        lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
        for (std::size_t i = 0; i + 1 < lits.size(); ++i)
            if (lits[i] == -lits[i + 1]) return true; // tautology
        if (lits.empty()) { unsat_ = true; return false; }
        std::vector<int> cl;
        for (int l : lits) cl.push_back(toInternal(l));
        if (cl.size() == 1) {
            // level-0 unit; propagation happens at the start of solve()
            if (litValue(cl[0]) == 0) { unsat_ = true; return false; }
            if (litValue(cl[0]) < 0) enqueue(cl[0], -1);
            return true;
        }
        attach(std::move(cl));
        return true;
    }

    bool solve(std::chrono::steady_clock::time_point deadline) {
        if (unsat_) return false;
        for (int v = 0; v < static_cast<int>(assign_.size()); ++v)
            if (assign_[v] < 0) heapInsert(v);
        std::uint64_t restartUnit = 128, lubyIndex = 1;
        std::uint64_t budget = restartUnit * luby(lubyIndex);
        std::uint64_t conflictsHere = 0;
        while (true) {
            int confl = propagate(deadline);
            if (timedOut_) return false;
            if (confl >= 0) {
                if (decisionLevel() == 0) { unsat_ = true; return false; }
                ++conflictsHere;
                std::vector<int> learnt;
                int btLevel = 0;
                analyze(confl, learnt, btLevel);
                cancelUntil(btLevel);
                if (learnt.size() == 1) {
                    enqueue(learnt[0], -1);
                } else {
                    int ci = attach(learnt);
                    enqueue(learnt[0], ci);
                }
                varInc_ *= 1.0 / 0.95;
                if (varInc_ > 1e100) {
                    for (double& a : activity_) a *= 1e-100;
                    varInc_ *= 1e-100;
                }
                if (conflictsHere >= budget) {
                    cancelUntil(0);
                    budget = restartUnit * luby(++lubyIndex);
                    conflictsHere = 0;
                }
            } else {
                if (std::chrono::steady_clock::now() >= deadline) {
                    timedOut_ = true;
                    return false;
                }
                int v = pickBranchVar();
                if (v < 0) return true;
                trailLim_.push_back(trail_.size());
                enqueue(phase_[v] ? 2 * v : 2 * v + 1, -1);
            }
        }
    }

    bool value(int var) const { return assign_[var] == 1; }
    bool timedOut() const { return timedOut_; }

private:
    std::vector<signed char> assign_; // -1 unset, 0 false, 1 true
    std::vector<int> level_;
    std::vector<int> reason_; // clause index, -1 for decisions/units
    std::vector<std::vector<int>> clauses_;
    std::vector<std::vector<int>> watches_; // indexed by internal literal
    std::vector<int> trail_;
    std::vector<std::size_t> trailLim_;
    std::size_t qhead_ = 0;
    std::vector<double> activity_;
    double varInc_ = 1.0;
    std::vector<signed char> phase_;
    std::vector<char> seen_;
    std::vector<int> heap_;
    std::vector<int> heapPos_;
    bool unsat_ = false;
    bool timedOut_ = false;
    std::uint64_t steps_ = 0;

    static int toInternal(int ext) {
        int v = std::abs(ext) - 1;
        return ext > 0 ? 2 * v : 2 * v + 1;
    }
    int decisionLevel() const { return static_cast<int>(trailLim_.size()); }

    // 1 true, 0 false, -1 unassigned
    int litValue(int l) const {
        signed char a = assign_[l >> 1];
        if (a < 0) return -1;
        return (a == 1) == ((l & 1) == 0) ? 1 : 0;
    }

    void enqueue(int l, int reasonClause) {
        int v = l >> 1;
        assign_[v] = (l & 1) ? 0 : 1;
        level_[v] = decisionLevel();
        reason_[v] = reasonClause;
        trail_.push_back(l);
    }

    int attach(std::vector<int> cl) {
        clauses_.push_back(std::move(cl));
        int ci = static_cast<int>(clauses_.size()) - 1;
        watches_[clauses_[ci][0]].push_back(ci);
        watches_[clauses_[ci][1]].push_back(ci);
        return ci;
    }

    // returns conflicting clause index, or -1
    int propagate(std::chrono::steady_clock::time_point deadline) {
        while (qhead_ < trail_.size()) {
            if ((++steps_ & 0xfff) == 0 && std::chrono::steady_clock::now() >= deadline) {
                timedOut_ = true;
                return -1;
            }
            int p = trail_[qhead_++];
            int fl = p ^ 1; // now false
            std::vector<int>& ws = watches_[fl];
            std::size_t i = 0, j = 0;
            while (i < ws.size()) {
                int ci = ws[i++];
                std::vector<int>& cl = clauses_[ci];
                if (cl[0] == fl) std::swap(cl[0], cl[1]);
                if (litValue(cl[0]) == 1) { ws[j++] = ci; continue; }
                bool moved = false;
                for (std::size_t k = 2; k < cl.size(); ++k)
                    if (litValue(cl[k]) != 0) {
                        std::swap(cl[1], cl[k]);
                        watches_[cl[1]].push_back(ci);
                        moved = true;
                        break;
                    }
                if (moved) continue;
                ws[j++] = ci;
                if (litValue(cl[0]) == 0) {
                    while (i < ws.size()) ws[j++] = ws[i++];
                    ws.resize(j);
                    qhead_ = trail_.size();
                    return ci;
                }
                enqueue(cl[0], ci);
            }
            ws.resize(j);
        }
        return -1;
    }

    void analyze(int confl, std::vector<int>& learnt, int& btLevel) {
        learnt.assign(1, 0); // slot for the asserting literal
        std::vector<int> toClear;
        int pathC = 0, p = -1;
        std::size_t index = trail_.size();
        do {
            const std::vector<int>& cl = clauses_[confl];
            for (std::size_t k = (p == -1 ? 0 : 1); k < cl.size(); ++k) {
                int q = cl[k], v = q >> 1;
                if (seen_[v] || level_[v] == 0) continue;
                seen_[v] = 1;
                toClear.push_back(v);
                bumpVar(v);
                if (level_[v] >= decisionLevel())
                    ++pathC;
                else
                    learnt.push_back(q);
            }
            do {
                p = trail_[--index];
            } while (!seen_[p >> 1]);
            seen_[p >> 1] = 0;
            confl = reason_[p >> 1];
            --pathC;
        } while (pathC > 0);
        learnt[0] = p ^ 1;

        btLevel = 0;
        std::size_t maxAt = 1;
        for (std::size_t k = 1; k < learnt.size(); ++k)
            if (level_[learnt[k] >> 1] > btLevel) {
                btLevel = level_[learnt[k] >> 1];
                maxAt = k;
            }
        if (learnt.size() > 1) std::swap(learnt[1], learnt[maxAt]);
        for (int v : toClear) seen_[v] = 0;
    }

    void cancelUntil(int lvl) {
        if (decisionLevel() <= lvl) return;
        std::size_t bound = trailLim_[lvl];
        while (trail_.size() > bound) {
            int l = trail_.back();
            trail_.pop_back();
            int v = l >> 1;
            phase_[v] = assign_[v];
            assign_[v] = -1;
            if (heapPos_[v] < 0) heapInsert(v);
        }
        trailLim_.resize(lvl);
        qhead_ = trail_.size();
    }

    int pickBranchVar() {
        while (!heap_.empty()) {
            int v = heap_[0];
            heapPop();
            if (assign_[v] < 0) return v;
        }
        return -1;
    }

    void bumpVar(int v) {
        activity_[v] += varInc_;
        if (heapPos_[v] >= 0) percolateUp(heapPos_[v]);
    }

    static std::uint64_t luby(std::uint64_t i) {
        // Luby sequence 1,1,2,1,1,2,4,... (i is 1-based)
        std::uint64_t k = 1;
        while ((1ull << k) - 1 < i) ++k;
        while ((1ull << k) - 1 != i) {
            i -= (1ull << (k - 1)) - 1;
            k = 1;
            while ((1ull << k) - 1 < i) ++k;
        }
        return 1ull << (k - 1);
    }

    // max-heap on activity
    void heapInsert(int v) {
        heapPos_[v] = static_cast<int>(heap_.size());
        heap_.push_back(v);
        percolateUp(heapPos_[v]);
    }
    void heapPop() {
        int last = heap_.back();
        heapPos_[heap_[0]] = -1;
        heap_.pop_back();
        if (!heap_.empty()) {
            heap_[0] = last;
            heapPos_[last] = 0;
            percolateDown(0);
        }
    }
    void percolateUp(int i) {
        int v = heap_[i];
        while (i > 0) {
            int parent = (i - 1) / 2;
            if (activity_[heap_[parent]] >= activity_[v]) break;
            heap_[i] = heap_[parent];
            heapPos_[heap_[i]] = i;
            i = parent;
        }
        heap_[i] = v;
        heapPos_[v] = i;
    }
    void percolateDown(int i) {
        int v = heap_[i];
        int n = static_cast<int>(heap_.size());
        while (2 * i + 1 < n) {
            int child = 2 * i + 1;
            if (child + 1 < n && activity_[heap_[child + 1]] > activity_[heap_[child]])
                ++child;
            if (activity_[heap_[child]] <= activity_[v]) break;
            heap_[i] = heap_[child];
            heapPos_[heap_[i]] = i;
            i = child;
        }
        heap_[i] = v;
        heapPos_[v] = i;
    }
};

} // namespace model_detail

enum class ModelStatus { Found, NoneUpTo, Incomplete };

struct ModelSearchResult {
    ModelStatus status = ModelStatus::Incomplete;
    int domainSize = 0;  // for Found
    int completeUpTo = 0; // all sizes <= this were fully excluded
};

// Search for a finite model of `clauses` with domain sizes 1..maxDomain.
// groundBudget caps the number of ground literal instances per size.
inline ModelSearchResult find_model(const std::vector<Clause>& clauses, int maxDomain,
                                    std::chrono::steady_clock::time_point deadline,
                                    std::uint64_t groundBudget = 6000000) {
    using namespace model_detail;

    unsigned long counter = 0;
    std::vector<Clause> flat;
    for (const Clause& c : clauses) flat.push_back(flatten(c, counter));

    // signature: functions (incl. constants) and predicates
    std::map<std::pair<std::string, std::size_t>, Term::Kind> funs;
    std::vector<std::string> constOrder;
    std::map<std::string, std::size_t> predArity;
    for (const Clause& c : flat)
        for (const Lit& l : c) {
            if (l.isEq()) {
                const Term& lhs = l.args[0];
                if (lhs.kind != Term::Kind::Variable) {
                    if (funs.emplace(std::make_pair(lhs.name, lhs.args.size()), lhs.kind)
                            .second &&
                        lhs.args.empty())
                        constOrder.push_back(lhs.name);
                }
            } else {
                predArity.emplace(l.pred, l.args.size());
            }
        }

    ModelSearchResult result;
    bool contiguous = true; // no skipped-by-timeout size below the current one
    for (int n = 1; n <= maxDomain; ++n) {
        auto now = std::chrono::steady_clock::now();
        if (now >= deadline) return result;
        // a hard refutation at one size must not starve the others
        auto slice = now + (deadline - now) / (maxDomain - n + 1);

        // budget estimate
        std::uint64_t est = 0;
        bool tooBig = false;
        for (const Clause& c : flat) {
            std::size_t vars = clause_vars(c).size();
            std::uint64_t inst = 1;
            for (std::size_t i = 0; i < vars; ++i) {
                inst *= static_cast<std::uint64_t>(n);
                if (inst > groundBudget) { tooBig = true; break; }
            }
            est += inst * c.size();
            if (est > groundBudget) { tooBig = true; }
            if (tooBig) break;
        }
        if (tooBig) return result; // larger sizes only get bigger

        MiniSat sat;
        std::map<PredKey, int> predVar;
        std::map<std::pair<FunKey, int>, int> funVar;
        auto pvar = [&](const std::string& p, const std::vector<int>& args) {
            auto [it, fresh] = predVar.emplace(PredKey{p, args}, 0);
            if (fresh) it->second = sat.newVar();
            return it->second;
        };
        auto fvar = [&](const std::string& f, const std::vector<int>& args, int val) {
            auto [it, fresh] = funVar.emplace(std::make_pair(FunKey{f, args}, val), 0);
            if (fresh) it->second = sat.newVar();
            return it->second;
        };

        bool unsatDuringBuild = false;

        // function tables: at least one value, at most one value
        for (const auto& [fa, kind] : funs) {
            const auto& [fname, arity] = fa;
            std::vector<int> args(arity, 0);
            while (true) {
                std::vector<int> atLeast;
                for (int v = 0; v < n; ++v) atLeast.push_back(fvar(fname, args, v) + 1);
                if (!sat.addClause(atLeast)) unsatDuringBuild = true;
                for (int v = 0; v < n; ++v)
                    for (int w = v + 1; w < n; ++w)
                        if (!sat.addClause({-(fvar(fname, args, v) + 1),
                                            -(fvar(fname, args, w) + 1)}))
                            unsatDuringBuild = true;
                // next tuple
                std::size_t i = 0;
                for (; i < arity; ++i) {
                    if (++args[i] < n) break;
                    args[i] = 0;
                }
                if (i == arity) break;
                if (arity == 0) break;
            }
        }

        // symmetry: the i-th constant takes a value <= i
        for (std::size_t i = 0; i < constOrder.size(); ++i)
            for (int v = static_cast<int>(i) + 1; v < n; ++v)
                if (!sat.addClause({-(fvar(constOrder[i], {}, v) + 1)}))
                    unsatDuringBuild = true;

        // ground the flat clauses
        for (const Clause& c : flat) {
            std::vector<std::string> vars = clause_vars(c);
            std::vector<int> asg(vars.size(), 0);
            std::map<std::string, int> env;
            while (true) {
                for (std::size_t i = 0; i < vars.size(); ++i) env[vars[i]] = asg[i];
                std::vector<int> lits;
                bool satClause = false;
                for (const Lit& l : c) {
                    if (l.isEq()) {
                        const Term& lhs = l.args[0];
                        const Term& rhs = l.args[1];
                        if (lhs.kind == Term::Kind::Variable) {
                            int a = env[lhs.name], b = env[rhs.name];
                            if ((a == b) == l.pos) { satClause = true; break; }
                            continue; // falsified, drop literal
                        }
                        std::vector<int> fargs;
                        for (const Term& t : lhs.args) fargs.push_back(env[t.name]);
                        int val = env[rhs.name];
                        int v = fvar(lhs.name, fargs, val) + 1;
                        lits.push_back(l.pos ? v : -v);
                    } else {
                        std::vector<int> pargs;
                        for (const Term& t : l.args) pargs.push_back(env[t.name]);
                        int v = pvar(l.pred, pargs) + 1;
                        lits.push_back(l.pos ? v : -v);
                    }
                }
                if (!satClause && !sat.addClause(lits)) unsatDuringBuild = true;

                std::size_t i = 0;
                for (; i < asg.size(); ++i) {
                    if (++asg[i] < n) break;
                    asg[i] = 0;
                }
                if (i == asg.size()) break;
            }
            if (std::chrono::steady_clock::now() >= deadline) return result;
        }

        if (!unsatDuringBuild && sat.solve(slice)) {
            result.status = ModelStatus::Found;
            result.domainSize = n;
            return result;
        }
        if (sat.timedOut()) {
            contiguous = false;
            continue;
        }
        if (contiguous) {
            result.completeUpTo = n;
            result.status = ModelStatus::NoneUpTo;
        }
    }
    return result;
}

} // namespace owlfol::prover
