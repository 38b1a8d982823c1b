// Copyright (c) the owlfol contributors.
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "owlfol/fol/tptp.hpp"
#include "owlfol/molgen.hpp"
#include "owlfol/prover/prove.hpp"
#include "support.hpp"

using namespace owlfol;
using namespace owlfol::molgen;
using Catch::Matchers::ContainsSubstring;

namespace {

std::size_t count_negative_bonds(const fol::Formula& f) {
    using K = fol::Formula::Kind;
    if (f.kind == K::Not && f.subs[0].kind == K::Predicate &&
        f.subs[0].name == "has_bond")
        return 1;
    std::size_t n = 0;
    for (const fol::Formula& sub : f.subs) n += count_negative_bonds(sub);
    return n;
}

} // namespace

TEST_CASE("smiles graphs") {
    MolecularGraph water = parse_smiles("[H]O[H]");
    REQUIRE(water.atoms.size() == 3);
    CHECK(water.atoms[0].element == "h");
    CHECK(water.atoms[1].element == "o");
    CHECK(water.bonds == std::vector<Bond>{{0, 1, BondOrder::Single},
                                           {1, 2, BondOrder::Single}});
    CHECK_FALSE(water.hasWildcard());

    MolecularGraph nitrile = parse_smiles("*C#N");
    REQUIRE(nitrile.atoms.size() == 3);
    CHECK(nitrile.atoms[0].wildcard);
    CHECK(nitrile.bonds == std::vector<Bond>{{0, 1, BondOrder::Single},
                                             {1, 2, BondOrder::Triple}});
    CHECK(nitrile.hasWildcard());

    CHECK(parse_smiles("C=O").bonds ==
          std::vector<Bond>{{0, 1, BondOrder::Double}});

    MolecularGraph branched = parse_smiles("C(F)(F)F");
    CHECK(branched.bonds == std::vector<Bond>{{0, 1, BondOrder::Single},
                                              {0, 2, BondOrder::Single},
                                              {0, 3, BondOrder::Single}});

    MolecularGraph ring = parse_smiles("C1CC1");
    CHECK(ring.bonds == std::vector<Bond>{{0, 1, BondOrder::Single},
                                          {0, 2, BondOrder::Single},
                                          {1, 2, BondOrder::Single}});

    // the closure bond order may sit on either end
    CHECK(parse_smiles("C=1CC=1").bonds[1].order == BondOrder::Double);
    CHECK(parse_smiles("C1CC=1").bonds[1].order == BondOrder::Double);

    MolecularGraph halogens = parse_smiles("ClBr");
    CHECK(halogens.atoms[0].element == "cl");
    CHECK(halogens.atoms[1].element == "br");

    MolecularGraph charged = parse_smiles("[N+]([O-])=O");
    CHECK(charged.atoms[0].charge == 1);
    CHECK(charged.atoms[1].charge == -1);
    CHECK(parse_smiles("[Fe+3]").atoms[0].charge == 3);
    CHECK(parse_smiles("[O--]").atoms[0].charge == -2);
    CHECK(parse_smiles("[Fe+3]").atoms[0].element == "fe");
}

TEST_CASE("smiles rejections are named") {
    auto reject = [](const std::string& smiles, const std::string& message) {
        CHECK_THROWS_WITH(parse_smiles(smiles), ContainsSubstring(message));
    };
    reject("c1ccccc1", "aromatic atoms are not supported");
    reject("C/C=C/C", "stereo markers are not supported");
    reject("[C@](F)(F)F", "stereo markers are not supported");
    reject("[13C]", "isotopes are not supported");
    reject("[CH4]", "implicit hydrogen counts are not supported");
    reject("C%10CC%10", "two-digit ring closures are not supported");
    reject("C.C", "dot-disconnected components are not supported");
    reject("C:C", "aromatic bonds are not supported");
    reject("C1CC", "unmatched ring closure digit(s) 1");
    reject("(C)", "branch before any atom");
    reject("C(C", "'(' without ')'");
    reject("C)", "')' without '('");
    reject("C=", "dangling bond symbol");
    reject("C11", "bond endpoints must differ");
    reject("C12C12", "duplicate bond between atoms");
    reject("C!", "unexpected character '!'");

    try {
        parse_smiles("C.C");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.col() == 2);
    }
}

TEST_CASE("a wildcard molecule defines a class") {
    AxiomScheme scheme = generate_class_definition(parse_smiles("*C#N"), "nit");
    CHECK(scheme.kind == SchemeKind::ClassDefinition);
    REQUIRE(scheme.formulas.size() == 1);
    CHECK(fol::emit_tptp_formula(scheme.formulas[0]) ==
          "! [M] : (nit(M) <=> ? [N0,N1] : (c(N0) & part_of(N0,M) & "
          "has_no_charge(N0) & n(N1) & part_of(N1,M) & has_no_charge(N1) & "
          "has_triple_bond_to(N0,N1) & N0 != N1 & connected(M)))");
}

TEST_CASE("a full molecule becomes a ground prototype") {
    AxiomScheme scheme =
        generate_prototypical_instance(parse_smiles("[H]O[H]"), "w");
    CHECK(scheme.kind == SchemeKind::PrototypicalInstance);
    REQUIRE(scheme.formulas.size() == 1);
    CHECK(fol::emit_tptp_formula(scheme.formulas[0]) ==
          "h(nw_0) & part_of(nw_0,mw) & has_no_charge(nw_0) & o(nw_1) & "
          "part_of(nw_1,mw) & has_no_charge(nw_1) & h(nw_2) & part_of(nw_2,mw) & "
          "has_no_charge(nw_2) & has_single_bond_to(nw_0,nw_1) & "
          "has_single_bond_to(nw_1,nw_2) & ~ has_bond(nw_0,nw_2) & "
          "! [X] : (part_of(X,mw) => (X = nw_0 | X = nw_1 | X = nw_2)) & "
          "connected(mw)");

    CHECK_THROWS_WITH(generate_prototypical_instance(parse_smiles("*C"), "x"),
                      ContainsSubstring("wildcard atom"));
}

TEST_CASE("unbonded pairs get explicit negative bonds") {
    std::mt19937 rng(461);
    for (int round = 0; round < 40; ++round) {
        int k = std::uniform_int_distribution<int>(1, 6)(rng);
        MolecularGraph g;
        for (int i = 0; i < k; ++i) g.atoms.push_back(Atom{"c", 0, false});
        // random tree plus a few extra edges keeps the pair structure varied
        for (int i = 1; i < k; ++i)
            g.addBond(std::uniform_int_distribution<int>(0, i - 1)(rng), i,
                      BondOrder::Single);
        for (int extra = 0; extra < 2 && k > 2; ++extra) {
            int a = std::uniform_int_distribution<int>(0, k - 1)(rng);
            int b = std::uniform_int_distribution<int>(0, k - 1)(rng);
            if (a == b) continue;
            try {
                g.addBond(a, b, BondOrder::Double);
            } catch (const Error&) {
                // duplicate edge, skip
            }
        }
        g.normalize();
        AxiomScheme scheme = generate_prototypical_instance(g, "r");
        std::size_t expected =
            static_cast<std::size_t>(k) * (k - 1) / 2 - g.bonds.size();
        CHECK(count_negative_bonds(scheme.formulas[0]) == expected);
    }
}

TEST_CASE("batch lines") {
    auto line = parse_molgen_line("w\t[H]O[H]\tinstance\r", 3);
    REQUIRE(line.has_value());
    CHECK(line->classId == "w");
    CHECK(line->smiles == "[H]O[H]");
    CHECK(line->isInstance);
    CHECK(line->lineNumber == 3);

    CHECK_FALSE(parse_molgen_line("", 1).has_value());
    CHECK_THROWS_WITH(parse_molgen_line("w only", 1),
                      ContainsSubstring("expected <classId><TAB><smiles><TAB><mode>"));
    CHECK_THROWS_WITH(parse_molgen_line("w\tC\tmaybe", 1),
                      ContainsSubstring("mode must be 'class' or 'instance'"));
    CHECK_THROWS_WITH(parse_molgen_line("\tC\tclass", 1),
                      ContainsSubstring("empty classId"));
}

TEST_CASE("a batch survives bad lines") {
    std::istringstream in(
        "w\t[H]O[H]\tinstance\n"
        "broken\tc1ccccc1\tclass\n"
        "\n"
        "alsobad\tC\twhat\n"
        "nit\t*C#N\tclass\n");
    MolgenBatch batch = run_molgen(in);
    REQUIRE(batch.schemes.size() == 2);
    CHECK(batch.schemes[0].classId == "w");
    CHECK(batch.schemes[1].classId == "nit");
    REQUIRE(batch.instances.size() == 1);
    CHECK(batch.instances[0].moleculeConstant == "mw");
    CHECK(batch.classIds == std::vector<std::string>{"nit"});
    CHECK(batch.elements == std::set<std::string>{"c", "h", "n", "o"});
    REQUIRE(batch.errors.size() == 2);
    CHECK_THAT(batch.errors[0], ContainsSubstring("line 2:"));
    CHECK_THAT(batch.errors[0], ContainsSubstring("aromatic"));
    CHECK_THAT(batch.errors[1], ContainsSubstring("line 4:"));
}

TEST_CASE("problem assembly for a batch") {
    std::istringstream in(testsupport::slurp(testsupport::fixture("molgen/molecules.tsv")));
    MolgenBatch batch = run_molgen(in);
    CHECK(batch.errors.empty());
    fol::TptpProblem problem = molgen_problem(batch);

    std::vector<std::string> names;
    for (const fol::TptpUnit& u : problem.units) names.push_back(u.name);
    // background first: 6 element-disjointness units over {c,h,n,o}, then
    // symmetry and bond-implication per order
    CHECK(names[0] == "chem_disjoint_c_h");
    CHECK(names[5] == "chem_disjoint_n_o");
    CHECK(names[6] == "chem_sym_single");
    CHECK(names[11] == "chem_bond_triple");
    CHECK(names[12] == "inst_chebi15377");
    CHECK(names[13] == "def_chebi18379");
    CHECK(names[14] == "inst_acetonitrile");
    CHECK(names.size() == 15);

    // the emitted problem is valid TPTP
    CHECK_NOTHROW(fol::parse_tptp_file(fol::emit_tptp(problem)));
}

TEST_CASE("membership conjectures by name") {
    auto conj = make_membership_conjectures({InstanceRef{"w", "mw"}},
                                            {"nit", "alcohol"});
    REQUIRE(conj.size() == 2);
    CHECK(conj[0].first == "mem_w_nit");
    CHECK(fol::emit_tptp_formula(conj[0].second) == "nit(mw)");
    CHECK(conj[1].first == "mem_w_alcohol");
}

TEST_CASE("membership is decided by the prover") {
    std::istringstream in(testsupport::slurp(testsupport::fixture("molgen/molecules.tsv")));
    MolgenBatch batch = run_molgen(in);
    fol::TptpProblem problem = molgen_problem(batch);
    std::vector<fol::Formula> axioms;
    for (const fol::TptpUnit& u : problem.units) axioms.push_back(u.formula);

    prover::ProveOptions opt;
    opt.timeoutSeconds = 30.0;
    auto membership = [&](const std::string& mol) {
        return prover::prove_formulas(
                   axioms, {fol::pred("chebi18379", {fol::cst(mol)})}, opt)
            .verdict;
    };
    CHECK(membership("macetonitrile") == prover::Verdict::Theorem);
    CHECK(membership("mchebi15377") == prover::Verdict::CounterSatisfiable);
}
