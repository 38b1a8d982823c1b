// Copyright (c) the owlfol contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Proof search schedule: saturate for the first slice of the time budget,
// switch to finite model search over growing domains, then resume the same
// saturation until the budget runs out. Refutations yield Theorem (with a
// conjecture) or Unsatisfiable (without); models and genuinely complete
// saturations yield CounterSatisfiable or Satisfiable.

#include <chrono>
#include <vector>

#include "owlfol/fol/ast.hpp"
#include "owlfol/prover/clausify.hpp"
#include "owlfol/prover/models.hpp"
#include "owlfol/prover/saturate.hpp"

namespace owlfol::prover {

enum class Verdict {
    Theorem,
    CounterSatisfiable,
    Satisfiable,
    Unsatisfiable,
    Timeout,
    GaveUp,
};

inline const char* verdict_szs(Verdict v) {
    switch (v) {
    case Verdict::Theorem: return "Theorem";
    case Verdict::CounterSatisfiable: return "CounterSatisfiable";
    case Verdict::Satisfiable: return "Satisfiable";
    case Verdict::Unsatisfiable: return "Unsatisfiable";
    case Verdict::Timeout: return "Timeout";
    case Verdict::GaveUp: return "GaveUp";
    }
    return "Error";
}

struct ProveOptions {
    double timeoutSeconds = 30.0;
    int maxModelDomain = 8;
    Saturation::Options saturation;
};

struct ProveResult {
    Verdict verdict = Verdict::GaveUp;
    int modelSize = 0;          // when a model decided it
    std::size_t generated = 0;  // clauses generated by saturation
};

inline ProveResult prove_clauses(std::vector<Clause> clauses, bool haveConjecture,
                                 const ProveOptions& opt) {
    using clock = std::chrono::steady_clock;
    auto start = clock::now();
    auto after = [&](double frac) {
        return start + std::chrono::microseconds(
                           static_cast<long long>(opt.timeoutSeconds * frac * 1e6));
    };
    auto tEnd = after(1.0);

    for (Clause& c : equality_axioms(clauses)) clauses.push_back(std::move(c));

    ProveResult res;
    auto refuted = [&] {
        res.verdict = haveConjecture ? Verdict::Theorem : Verdict::Unsatisfiable;
        return res;
    };
    auto modelled = [&] {
        res.verdict =
            haveConjecture ? Verdict::CounterSatisfiable : Verdict::Satisfiable;
        return res;
    };

    Saturation sat(opt.saturation);
    for (const Clause& c : clauses) sat.add_input(c);

    SatStatus st = sat.run_until(std::min(after(0.3), tEnd));
    res.generated = sat.generated();
    if (st == SatStatus::Refuted) return refuted();
    if (st == SatStatus::Saturated && !sat.lossy()) return modelled();

    ModelSearchResult ms =
        find_model(clauses, opt.maxModelDomain, std::min(after(0.6), tEnd));
    if (ms.status == ModelStatus::Found) {
        res.modelSize = ms.domainSize;
        return modelled();
    }

    if (st != SatStatus::Saturated) {
        st = sat.run_until(tEnd);
        res.generated = sat.generated();
        if (st == SatStatus::Refuted) return refuted();
        if (st == SatStatus::Saturated && !sat.lossy()) return modelled();
    }

    res.verdict = clock::now() >= tEnd ? Verdict::Timeout : Verdict::GaveUp;
    return res;
}

inline ProveResult prove_formulas(const std::vector<fol::Formula>& axioms,
                                  const std::vector<fol::Formula>& conjectures,
                                  const ProveOptions& opt) {
    return prove_clauses(clausify_problem(axioms, conjectures),
                         !conjectures.empty(), opt);
}

} // namespace owlfol::prover
