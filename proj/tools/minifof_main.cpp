// Copyright (c) the owlfol contributors.
// SPDX-License-Identifier: Apache-2.0
//
// minifof: a small first-order prover for FOF problems. Resolution with
// factoring and subsumption, interleaved with finite model search, reporting
// SZS statuses. Intended as the default backend for owlfol; any SZS-talking
// prover can replace it.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "owlfol/fol/tptp.hpp"
#include "owlfol/prover/prove.hpp"

namespace {

int usage() {
    std::cerr << "usage: minifof [--timeout SECONDS] FILE.p\n";
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    std::string file;
    double timeout = 30.0;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--timeout") {
            if (++i >= argc) return usage();
            timeout = std::atof(argv[i]);
        } else if (arg == "-h" || arg == "--help") {
            return usage();
        } else if (!file.empty()) {
            return usage();
        } else {
            file = arg;
        }
    }
    if (file.empty() || timeout <= 0) return usage();

    std::ifstream in(file);
    if (!in) {
        std::cout << "% SZS status Error for " << file << "\n";
        std::cerr << "minifof: cannot open " << file << "\n";
        return 1;
    }
    std::ostringstream buf;
    buf << in.rdbuf();

    owlfol::fol::TptpProblem problem;
    try {
        problem = owlfol::fol::parse_tptp_file(buf.str());
    } catch (const std::exception& e) {
        std::cout << "% SZS status Error for " << file << "\n";
        std::cerr << "minifof: " << e.what() << "\n";
        return 1;
    }

    std::vector<owlfol::fol::Formula> axioms, conjectures;
    for (const owlfol::fol::TptpUnit& u : problem.units)
        (u.role == owlfol::fol::Role::Conjecture ? conjectures : axioms)
            .push_back(u.formula);

    owlfol::prover::ProveOptions opt;
    opt.timeoutSeconds = timeout;
    owlfol::prover::ProveResult res =
        owlfol::prover::prove_formulas(axioms, conjectures, opt);

    std::cout << "% SZS status " << owlfol::prover::verdict_szs(res.verdict)
              << " for " << file << "\n";
    std::cout << "% generated clauses: " << res.generated;
    if (res.modelSize > 0) std::cout << ", model size: " << res.modelSize;
    std::cout << "\n";
    return 0;
}
