// Copyright (c) the owlfol contributors.
// SPDX-License-Identifier: Apache-2.0

// End-to-end checks of the command line tool, driven over a pipe. Prover
// subcommands always pass --prover explicitly so the tests cannot depend on
// whatever happens to be on PATH.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "owlfol/fol/tptp.hpp"
#include "support.hpp"

using testsupport::RunResult;
using testsupport::fixture;
using testsupport::run_command;
using testsupport::slurp;
using Catch::Matchers::ContainsSubstring;

namespace {

const std::string cli = OWLFOL_CLI_PATH;
const std::string prover = MINIFOF_PATH;

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "/tmp/owlfol_cli_test_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

} // namespace

TEST_CASE("cli: translate to stdout") {
    RunResult r = run_command({cli, "translate", fixture("owl/simple.ofn")});
    CHECK(r.exitCode == 0);
    CHECK_THAT(r.output, ContainsSubstring("% generated by owlfol"));
    CHECK_THAT(r.output, ContainsSubstring("fof(ax_0_SubClassOf, axiom,"));
    CHECK_THAT(r.output, ContainsSubstring("fof(ann_0, axiom,"));
    // the annotation's "person" symbol was aligned onto the class IRI
    CHECK_THAT(r.output,
               ContainsSubstring("'<https://example.org/simple#Person>'"));
    CHECK_NOTHROW(owlfol::fol::parse_tptp_file(r.output));
}

TEST_CASE("cli: translate flag variations") {
    SECTION("--owl-only drops annotations") {
        RunResult r =
            run_command({cli, "translate", fixture("owl/simple.ofn"), "--owl-only"});
        CHECK(r.exitCode == 0);
        CHECK_THAT(r.output, !ContainsSubstring("ann_0"));
    }
    SECTION("--readable-names uses labels") {
        RunResult r = run_command(
            {cli, "translate", fixture("owl/simple.ofn"), "--readable-names"});
        CHECK(r.exitCode == 0);
        CHECK_THAT(r.output, ContainsSubstring("person(X0)"));
        CHECK_THAT(r.output, !ContainsSubstring("example.org/simple#Person"));
    }
    SECTION("--alignment-report") {
        std::string report = "/tmp/owlfol_cli_test_report.txt";
        RunResult r = run_command({cli, "translate", fixture("owl/simple.ofn"),
                                   "-", "--alignment-report", report});
        CHECK(r.exitCode == 0);
        std::string text = slurp(report);
        CHECK_THAT(text, ContainsSubstring("person"));
        CHECK_THAT(text, ContainsSubstring("via=label"));
        std::remove(report.c_str());
    }
    SECTION("output file matches stdout") {
        std::string out = "/tmp/owlfol_cli_test_translate.p";
        RunResult direct = run_command({cli, "translate", fixture("owl/simple.ofn")});
        RunResult tofile =
            run_command({cli, "translate", fixture("owl/simple.ofn"), out});
        CHECK(tofile.exitCode == 0);
        CHECK(slurp(out) == direct.output);
        std::remove(out.c_str());
    }
    SECTION("reading the ontology from stdin") {
        RunResult r = run_command(
            {"/bin/sh", "-c",
             testsupport::shell_quote(cli) + " translate - < " +
                 testsupport::shell_quote(fixture("owl/simple.ofn"))});
        CHECK(r.exitCode == 0);
        CHECK_THAT(r.output, ContainsSubstring("fof(ax_0_SubClassOf"));
    }
}

TEST_CASE("cli: translate error exits") {
    RunResult missing = run_command({cli, "translate", "/no/such/file.ofn"});
    CHECK(missing.exitCode == 1);
    CHECK_THAT(missing.output, ContainsSubstring("error: cannot open"));

    std::string bad = write_temp("bad.ofn", "Ontology(SubClassOf(:A)\n");
    RunResult parse = run_command({cli, "translate", bad});
    CHECK(parse.exitCode == 1);
    CHECK_THAT(parse.output, ContainsSubstring("error:"));
    std::remove(bad.c_str());

    std::string reserved = write_temp("reserved.ofn",
                                      "Prefix(:=<urn:t#>)\n"
                                      "Ontology(\n"
                                      "SubClassOf(:A owl:Ontology)\n"
                                      ")\n");
    RunResult translate = run_command({cli, "translate", reserved});
    CHECK(translate.exitCode == 2);
    CHECK_THAT(translate.output, ContainsSubstring("error:"));
    std::remove(reserved.c_str());
}

TEST_CASE("cli: strict mode is surfaced") {
    std::string undeclared = write_temp("undeclared.ofn",
                                        "Prefix(:=<urn:t#>)\n"
                                        "Ontology(\n"
                                        "SubClassOf(:A :B)\n"
                                        ")\n");
    CHECK(run_command({cli, "translate", undeclared}).exitCode == 0);
    RunResult strict = run_command({cli, "translate", undeclared, "--strict"});
    CHECK(strict.exitCode == 1);
    CHECK_THAT(strict.output, ContainsSubstring("error:"));
    std::remove(undeclared.c_str());
}

TEST_CASE("cli: annotation property selection") {
    std::string onto = write_temp("custom_prop.ofn",
                                  "Prefix(:=<urn:t#>)\n"
                                  "Ontology(\n"
                                  "Declaration(Class(:A))\n"
                                  "AnnotationAssertion(rdfs:comment :A \"zebra_fact(stripes)\")\n"
                                  ")\n");
    RunResult plain = run_command({cli, "translate", onto});
    CHECK_THAT(plain.output, !ContainsSubstring("ann_0"));
    RunResult chosen =
        run_command({cli, "translate", onto, "--annotation-prop",
                     "http://www.w3.org/2000/01/rdf-schema#comment"});
    CHECK(chosen.exitCode == 0);
    CHECK_THAT(chosen.output, ContainsSubstring("fof(ann_0, axiom, zebra_fact(stripes))"));
    std::remove(onto.c_str());
}

TEST_CASE("cli: imports need a catalog") {
    RunResult bare = run_command({cli, "translate", fixture("owl/importer.ofn")});
    CHECK(bare.exitCode == 1);
    CHECK_THAT(bare.output, ContainsSubstring("provide --catalog"));

    RunResult resolved =
        run_command({cli, "translate", fixture("owl/importer.ofn"), "--catalog",
                     fixture("owl/catalog.txt")});
    CHECK(resolved.exitCode == 0);
    CHECK_THAT(resolved.output, ContainsSubstring("imports/b#Base"));
}

TEST_CASE("cli: consistency verdicts and exit codes") {
    RunResult sat = run_command({cli, "consistency", fixture("owl/simple.ofn"),
                                 "--prover", prover});
    CHECK(sat.exitCode == 0);
    CHECK_THAT(sat.output, ContainsSubstring("Satisfiable"));

    std::string clash = write_temp("clash.ofn",
                                   "Prefix(:=<urn:t#>)\n"
                                   "Ontology(\n"
                                   "Declaration(Class(:A))\n"
                                   "Declaration(Class(:B))\n"
                                   "Declaration(NamedIndividual(:i))\n"
                                   "SubClassOf(:A :B)\n"
                                   "DisjointClasses(:A :B)\n"
                                   "ClassAssertion(:A :i)\n"
                                   ")\n");
    RunResult unsat = run_command({cli, "consistency", clash, "--prover", prover});
    CHECK(unsat.exitCode == 3);
    CHECK_THAT(unsat.output, ContainsSubstring("Unsatisfiable"));
    std::remove(clash.c_str());

    RunResult broken = run_command({cli, "consistency", fixture("owl/simple.ofn"),
                                    "--prover", "/no/such/prover"});
    CHECK(broken.exitCode == 5);
    CHECK_THAT(broken.output, ContainsSubstring("Error"));
}

TEST_CASE("cli: externalized consistency finds hidden clashes") {
    RunResult plain = run_command({cli, "consistency", fixture("obi/obi_pattern.ofn"),
                                   "--prover", prover, "--timeout", "60"});
    CHECK(plain.exitCode == 0);

    RunResult ext =
        run_command({cli, "consistency", fixture("obi/obi_pattern.ofn"),
                     "--externalize", "--prover", prover, "--timeout", "60"});
    CHECK(ext.exitCode == 3);
    CHECK_THAT(ext.output, ContainsSubstring("Unsatisfiable"));
}

TEST_CASE("cli: prover selection through the environment") {
    RunResult r = run_command(
        {"/bin/sh", "-c",
         "OWLFOL_PROVER=" + testsupport::shell_quote(prover) + " " +
             testsupport::shell_quote(cli) + " consistency " +
             testsupport::shell_quote(fixture("owl/simple.ofn"))});
    CHECK(r.exitCode == 0);
    CHECK_THAT(r.output, ContainsSubstring("Satisfiable"));
}

TEST_CASE("cli: prove") {
    std::string good = write_temp("goal_good.p",
                                  "fof(goal, conjecture, ![X]: (person(X) => mortal(X))).\n");
    RunResult theorem = run_command({cli, "prove", fixture("owl/simple.ofn"), good,
                                     "--prover", prover});
    CHECK(theorem.exitCode == 0);
    CHECK_THAT(theorem.output, ContainsSubstring("Theorem"));
    std::remove(good.c_str());

    std::string open = write_temp("goal_open.p",
                                  "fof(goal, conjecture, ![X]: (mortal(X) => person(X))).\n");
    RunResult counter = run_command({cli, "prove", fixture("owl/simple.ofn"), open,
                                     "--prover", prover});
    CHECK(counter.exitCode == 3);
    CHECK_THAT(counter.output, ContainsSubstring("CounterSatisfiable"));
    std::remove(open.c_str());

    // axiom units in the conjecture file join the premise
    std::string mixed = write_temp("goal_mixed.p",
                                   "fof(extra, axiom, wizard(socrates)).\n"
                                   "fof(goal, conjecture, ?[X]: wizard(X)).\n");
    RunResult withExtra = run_command({cli, "prove", fixture("owl/simple.ofn"), mixed,
                                       "--prover", prover});
    CHECK(withExtra.exitCode == 0);
    std::remove(mixed.c_str());

    std::string noConj = write_temp("goal_none.p", "fof(a, axiom, p).\n");
    RunResult empty = run_command({cli, "prove", fixture("owl/simple.ofn"), noConj,
                                   "--prover", prover});
    CHECK(empty.exitCode == 1);
    CHECK_THAT(empty.output, ContainsSubstring("no conjecture units"));
    std::remove(noConj.c_str());
}

TEST_CASE("cli: a stalled prover maps to the unknown exit code") {
    std::string goal = write_temp("goal_stall.p", "fof(goal, conjecture, p).\n");
    RunResult r = run_command({cli, "prove", fixture("owl/simple.ofn"), goal,
                               "--prover", "/bin/sleep", "--prover-args", "30",
                               "--timeout", "1"});
    CHECK(r.exitCode == 4);
    CHECK_THAT(r.output, ContainsSubstring("Timeout"));
    std::remove(goal.c_str());
}

TEST_CASE("cli: entails") {
    RunResult good = run_command({cli, "entails", fixture("schneider/s03p.ofn"),
                                  fixture("schneider/s03c.ofn"), "--prover", prover,
                                  "--timeout", "30"});
    CHECK(good.exitCode == 0);
    CHECK_THAT(good.output, ContainsSubstring("Theorem"));

    std::string premise = write_temp("ent_p.ofn",
                                     "Prefix(:=<urn:e#>)\n"
                                     "Ontology(\n"
                                     "Declaration(Class(:C))\n"
                                     "Declaration(NamedIndividual(:i))\n"
                                     "ClassAssertion(:C :i)\n"
                                     ")\n");
    std::string conj = write_temp("ent_c.ofn",
                                  "Prefix(:=<urn:e#>)\n"
                                  "Ontology(\n"
                                  "Declaration(Class(:D))\n"
                                  "Declaration(NamedIndividual(:i))\n"
                                  "ClassAssertion(:D :i)\n"
                                  ")\n");
    RunResult refuted =
        run_command({cli, "entails", premise, conj, "--prover", prover});
    CHECK(refuted.exitCode == 3);
    CHECK_THAT(refuted.output, ContainsSubstring("CounterSatisfiable"));

    std::string silent = write_temp("ent_s.ofn",
                                    "Prefix(:=<urn:e#>)\n"
                                    "Ontology(\n"
                                    "Declaration(Class(:D))\n"
                                    ")\n");
    RunResult nothing =
        run_command({cli, "entails", premise, silent, "--prover", prover});
    CHECK(nothing.exitCode == 0);
    CHECK_THAT(nothing.output, ContainsSubstring("nothing to prove"));
    std::remove(premise.c_str());
    std::remove(conj.c_str());
    std::remove(silent.c_str());
}

TEST_CASE("cli: entails in parallel") {
    RunResult r = run_command({cli, "entails", fixture("schneider/s12p.ofn"),
                               fixture("schneider/s12c.ofn"), "--prover", prover,
                               "--timeout", "30", "--parallel", "3"});
    CHECK(r.exitCode == 0);
    CHECK_THAT(r.output, ContainsSubstring("ax_0_ObjectPropertyAssertion"));
}

TEST_CASE("cli: molgen") {
    RunResult r = run_command({cli, "molgen", fixture("molgen/molecules.tsv")});
    CHECK(r.exitCode == 0);
    CHECK_THAT(r.output, ContainsSubstring("fof(inst_chebi15377, axiom,"));
    CHECK_THAT(r.output, ContainsSubstring("fof(def_chebi18379, axiom,"));
    CHECK_THAT(r.output, ContainsSubstring("chem_disjoint_c_h"));

    std::string withBad = write_temp("mols_bad.tsv",
                                     "w\t[H]O[H]\tinstance\n"
                                     "x\tc1ccccc1\tclass\n");
    RunResult partial = run_command({cli, "molgen", withBad});
    CHECK(partial.exitCode == 1);
    CHECK_THAT(partial.output, ContainsSubstring("fof(inst_w, axiom,"));
    CHECK_THAT(partial.output, ContainsSubstring("error: line 2:"));
    std::remove(withBad.c_str());

    RunResult piped = run_command(
        {"/bin/sh", "-c",
         "printf 'w\\t[H]O[H]\\tinstance\\n' | " + testsupport::shell_quote(cli) +
             " molgen -"});
    CHECK(piped.exitCode == 0);
    CHECK_THAT(piped.output, ContainsSubstring("fof(inst_w, axiom,"));
}

TEST_CASE("cli: usage errors") {
    CHECK(run_command({cli}).exitCode != 0);
    CHECK(run_command({cli, "frobnicate"}).exitCode != 0);
    RunResult help = run_command({cli, "--help"});
    CHECK(help.exitCode == 0);
    CHECK_THAT(help.output, ContainsSubstring("translate"));
    CHECK_THAT(help.output, ContainsSubstring("molgen"));
}
