// Copyright (c) the owlfol contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Given-clause saturation: binary resolution with negative-literal
// selection plus positive factoring, over a weight/age passive queue, with
// forward and backward subsumption and tautology deletion. Selection
// (resolve a mixed clause only on its selected negative literal, against an
// all-positive partner) is the hyperresolution-flavoured restriction; it
// stays refutationally complete while cutting the junk that plain binary
// resolution derives from ground facts and equality axioms. An exhausted
// queue therefore still means the clause set is satisfiable, provided
// nothing was discarded along the way (the `lossy` flag tracks weight and
// capacity drops).

#include <chrono>
#include <deque>
#include <map>
#include <vector>

#include "owlfol/prover/clause.hpp"

namespace owlfol::prover {

enum class SatStatus { Refuted, Saturated, Deadline };

class Saturation {
public:
    struct Options {
        int ageRatio = 5;          // every n-th pick is oldest-first
        int maxWeight = 120;       // heavier derived clauses are dropped
        std::size_t maxKept = 200000;
    };

    Saturation() = default;
    explicit Saturation(Options opt) : opt_(opt) {}

    void add_input(const Clause& c) {
        Clause s = simplify(c);
        if (is_tautology(s)) return;
        enqueue(std::move(s));
    }

    bool lossy() const { return lossy_; }
    std::size_t generated() const { return generated_; }

    SatStatus run_until(std::chrono::steady_clock::time_point deadline) {
        if (refuted_) return SatStatus::Refuted;
        while (true) {
            if (std::chrono::steady_clock::now() >= deadline) return SatStatus::Deadline;
            long given = pickGiven();
            if (given < 0) return refuted_ ? SatStatus::Refuted : SatStatus::Saturated;
            process(static_cast<std::size_t>(given));
            if (refuted_) return SatStatus::Refuted;
        }
    }

private:
    struct Stored {
        Clause clause;
        std::uint64_t mask = 0; // predicate fingerprint for subsumption filter
        long selected = -1;     // index of the selected negative literal
        bool dead = false;
        bool active = false;
    };

    Options opt_;
    std::vector<Stored> pool_;
    std::multimap<int, std::size_t> byWeight_;
    std::deque<std::size_t> byAge_;
    std::vector<std::size_t> active_;
    // pred -> [(clause, literal)] over positive literals of all-positive clauses
    std::map<std::string, std::vector<std::pair<std::size_t, std::size_t>>> posIndex_;
    // pred -> [(clause, selected literal)] over clauses with a selection
    std::map<std::string, std::vector<std::pair<std::size_t, std::size_t>>> selIndex_;
    unsigned long varCounter_ = 0;
    unsigned long tick_ = 0;
    std::size_t generated_ = 0;
    bool lossy_ = false;
    bool refuted_ = false;

    static std::uint64_t fingerprint(const Clause& c) {
        std::uint64_t m = 0;
        std::hash<std::string> h;
        for (const Lit& l : c)
            m |= 1ull << ((h(l.pred) % 31) * 2 + (l.pos ? 0 : 1));
        return m;
    }

    void enqueue(Clause c) {
        ++generated_;
        if (c.empty()) {
            refuted_ = true;
            return;
        }
        int w = clause_weight(c);
        if (w > opt_.maxWeight) {
            lossy_ = true;
            return;
        }
        if (pool_.size() >= opt_.maxKept) {
            lossy_ = true;
            return;
        }
        Clause renamed = rename_apart(c, varCounter_);
        Stored st;
        st.mask = fingerprint(renamed);
        for (std::size_t i = 0; i < renamed.size(); ++i)
            if (!renamed[i].pos) {
                st.selected = static_cast<long>(i);
                break;
            }
        st.clause = std::move(renamed);
        pool_.push_back(std::move(st));
        std::size_t idx = pool_.size() - 1;
        byWeight_.insert({w, idx});
        byAge_.push_back(idx);
    }

    long pickGiven() {
        ++tick_;
        if (opt_.ageRatio > 0 && tick_ % opt_.ageRatio == 0) {
            while (!byAge_.empty()) {
                std::size_t idx = byAge_.front();
                byAge_.pop_front();
                if (!pool_[idx].dead && !pool_[idx].active) return static_cast<long>(idx);
            }
        }
        while (!byWeight_.empty()) {
            auto it = byWeight_.begin();
            std::size_t idx = it->second;
            byWeight_.erase(it);
            if (!pool_[idx].dead && !pool_[idx].active) return static_cast<long>(idx);
        }
        while (!byAge_.empty()) {
            std::size_t idx = byAge_.front();
            byAge_.pop_front();
            if (!pool_[idx].dead && !pool_[idx].active) return static_cast<long>(idx);
        }
        return -1;
    }

    void process(std::size_t given) {
        Stored& g = pool_[given];
        // forward subsumption against active clauses
        for (std::size_t a : active_) {
            if (pool_[a].dead) continue;
            if ((pool_[a].mask & ~g.mask) == 0 && subsumes(pool_[a].clause, g.clause)) {
                g.dead = true;
                return;
            }
        }
        // backward subsumption
        for (std::size_t a : active_) {
            if (pool_[a].dead) continue;
            if ((g.mask & ~pool_[a].mask) == 0 && subsumes(g.clause, pool_[a].clause))
                pool_[a].dead = true;
        }
        g.active = true;
        active_.push_back(given);
        if (g.selected >= 0) {
            selIndex_[g.clause[g.selected].pred].push_back(
                {given, static_cast<std::size_t>(g.selected)});
        } else {
            for (std::size_t i = 0; i < g.clause.size(); ++i)
                posIndex_[g.clause[i].pred].push_back({given, i});
        }

        factors(given);
        resolvents(given);
    }

    void derived(Clause c) {
        Clause s = simplify(c);
        if (is_tautology(s)) return;
        enqueue(std::move(s));
    }

    // Positive factoring only; that is all completeness needs under
    // negative selection.
    void factors(std::size_t gi) {
        if (pool_[gi].selected >= 0) return;
        // copy: enqueue() during the loop may reallocate pool_
        const Clause c = pool_[gi].clause;
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j) {
                if (c[i].pred != c[j].pred ||
                    c[i].args.size() != c[j].args.size())
                    continue;
                Subst s;
                if (!unify(c[i], c[j], s)) continue;
                Clause f;
                for (std::size_t k = 0; k < c.size(); ++k)
                    if (k != j) f.push_back(substitute(c[k], s));
                derived(std::move(f));
            }
    }

    void resolve(const Clause& posC, std::size_t pi, const Clause& negC,
                 std::size_t ni) {
        if (posC[pi].args.size() != negC[ni].args.size()) return;
        Subst s;
        for (std::size_t k = 0; k < posC[pi].args.size(); ++k)
            if (!unify(posC[pi].args[k], negC[ni].args[k], s)) return;
        Clause r;
        for (std::size_t k = 0; k < posC.size(); ++k)
            if (k != pi) r.push_back(substitute(posC[k], s));
        for (std::size_t k = 0; k < negC.size(); ++k)
            if (k != ni) r.push_back(substitute(negC[k], s));
        derived(std::move(r));
    }

    void resolvents(std::size_t gi) {
        // Pool clauses are renamed apart on entry, so cross-clause variable
        // clashes cannot happen, and a positive clause never pairs with
        // itself. Copies, not references: enqueue() may reallocate pool_.
        const Clause g = pool_[gi].clause;
        const long sel = pool_[gi].selected;
        if (sel < 0) {
            for (std::size_t i = 0; i < g.size(); ++i) {
                auto it = selIndex_.find(g[i].pred);
                if (it == selIndex_.end()) continue;
                for (auto [aj, lj] : it->second) {
                    if (pool_[aj].dead) continue;
                    const Clause other = pool_[aj].clause;
                    resolve(g, i, other, lj);
                }
            }
            return;
        }
        std::size_t i = static_cast<std::size_t>(sel);
        auto it = posIndex_.find(g[i].pred);
        if (it == posIndex_.end()) return;
        for (auto [aj, lj] : it->second) {
            if (pool_[aj].dead) continue;
            const Clause other = pool_[aj].clause;
            resolve(other, lj, g, i);
        }
    }
};

} // namespace owlfol::prover
