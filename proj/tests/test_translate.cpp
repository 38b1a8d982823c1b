// Copyright (c) the owlfol contributors.
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "owlfol/fol/tptp.hpp"
#include "owlfol/owl/parser.hpp"
#include "owlfol/prover/prove.hpp"
#include "owlfol/translate.hpp"
#include "support.hpp"

using namespace owlfol;

namespace {

// translate the first logical axiom of a one-liner ontology and emit it
std::string first(const std::string& axiomText) {
    auto doc = owl::parse_ontology("Prefix(:=<urn:t#>)\nOntology(<urn:t>\n" + axiomText +
                                   "\n)");
    auto problem = translate_ontology(doc);
    REQUIRE_FALSE(problem.units.empty());
    return fol::emit_tptp_formula(problem.units[0].formula);
}

prover::Verdict satisfiability(const std::string& axioms) {
    auto doc = owl::parse_ontology("Prefix(:=<urn:t#>)\nOntology(<urn:t>\n" + axioms +
                                   "\n)");
    std::vector<fol::Formula> fs;
    for (const auto& u : translate_ontology(doc).units) fs.push_back(u.formula);
    prover::ProveOptions opt;
    opt.timeoutSeconds = 10.0;
    return prover::prove_formulas(fs, {}, opt).verdict;
}

} // namespace

TEST_CASE("class axiom translations") {
    CHECK(first("SubClassOf(:A :B)") ==
          "! [X0] : ('<urn:t#A>'(X0) => '<urn:t#B>'(X0))");
    CHECK(first("EquivalentClasses(:A :B)") ==
          "! [X0] : ('<urn:t#A>'(X0) <=> '<urn:t#B>'(X0))");
    CHECK(first("DisjointClasses(:A :B)") ==
          "! [X0] : ~ ('<urn:t#A>'(X0) & '<urn:t#B>'(X0))");
    CHECK(first("SubClassOf(:A ObjectIntersectionOf(:B :C))") ==
          "! [X0] : ('<urn:t#A>'(X0) => ('<urn:t#B>'(X0) & '<urn:t#C>'(X0)))");
    CHECK(first("SubClassOf(:A ObjectUnionOf(:B :C))") ==
          "! [X0] : ('<urn:t#A>'(X0) => ('<urn:t#B>'(X0) | '<urn:t#C>'(X0)))");
    CHECK(first("SubClassOf(:A ObjectComplementOf(:B))") ==
          "! [X0] : ('<urn:t#A>'(X0) => ~ '<urn:t#B>'(X0))");
}

TEST_CASE("restriction translations") {
    CHECK(first("SubClassOf(:A ObjectSomeValuesFrom(:r :B))") ==
          "! [X0] : ('<urn:t#A>'(X0) => "
          "? [X1] : ('<urn:t#r>'(X0,X1) & '<urn:t#B>'(X1)))");
    CHECK(first("SubClassOf(:A ObjectAllValuesFrom(:r :B))") ==
          "! [X0] : ('<urn:t#A>'(X0) => "
          "! [X1] : ('<urn:t#r>'(X0,X1) => '<urn:t#B>'(X1)))");
    CHECK(first("SubClassOf(:A ObjectHasValue(:r :i))") ==
          "! [X0] : ('<urn:t#A>'(X0) => '<urn:t#r>'(X0,'<urn:t#i>'))");
    CHECK(first("SubClassOf(:A ObjectOneOf(:i :j))") ==
          "! [X0] : ('<urn:t#A>'(X0) => (X0 = '<urn:t#i>' | X0 = '<urn:t#j>'))");
}

TEST_CASE("cardinality translations") {
    CHECK(first("SubClassOf(:A ObjectMinCardinality(2 :r))") ==
          "! [X0] : ('<urn:t#A>'(X0) => ? [X1,X2] : "
          "('<urn:t#r>'(X0,X1) & '<urn:t#r>'(X0,X2) & X1 != X2))");
    CHECK(first("SubClassOf(:A ObjectMaxCardinality(1 :r))") ==
          "! [X0] : ('<urn:t#A>'(X0) => ! [X1,X2] : "
          "(('<urn:t#r>'(X0,X1) & '<urn:t#r>'(X0,X2)) => X1 = X2))");
    CHECK(first("SubClassOf(:A ObjectMaxCardinality(0 :r))") ==
          "! [X0] : ('<urn:t#A>'(X0) => ! [X1] : ~ '<urn:t#r>'(X0,X1))");
    // min 0 collapses to truth
    CHECK(first("SubClassOf(:A ObjectMinCardinality(0 :r))") ==
          "! [X0] : ('<urn:t#A>'(X0) => $true)");
}

TEST_CASE("cardinality encodings behave semantically") {
    using prover::Verdict;
    // at-most-one with two distinct fillers is contradictory
    CHECK(satisfiability("ClassAssertion(ObjectMaxCardinality(1 :r) :i)\n"
                         "ObjectPropertyAssertion(:r :i :a)\n"
                         "ObjectPropertyAssertion(:r :i :b)\n"
                         "DifferentIndividuals(:a :b)") == Verdict::Unsatisfiable);
    // at-least-two against at-most-one
    CHECK(satisfiability("ClassAssertion(ObjectMinCardinality(2 :r) :i)\n"
                         "ClassAssertion(ObjectMaxCardinality(1 :r) :i)") ==
          Verdict::Unsatisfiable);
    CHECK(satisfiability("ClassAssertion(ObjectMinCardinality(2 :r) :i)") ==
          Verdict::Satisfiable);
    // exactly-one, qualified: a second distinct B-filler breaks it
    CHECK(satisfiability("ClassAssertion(ObjectExactCardinality(1 :r :B) :i)\n"
                         "ObjectPropertyAssertion(:r :i :a)\n"
                         "ObjectPropertyAssertion(:r :i :b)\n"
                         "ClassAssertion(:B :a)\nClassAssertion(:B :b)\n"
                         "DifferentIndividuals(:a :b)") == Verdict::Unsatisfiable);
    // enumeration membership forces one of the listed equalities
    CHECK(satisfiability("ClassAssertion(ObjectOneOf(:a :b) :c)\n"
                         "DifferentIndividuals(:c :a)\n"
                         "DifferentIndividuals(:c :b)") == Verdict::Unsatisfiable);
}

TEST_CASE("property axiom translations") {
    CHECK(first("SubObjectPropertyOf(:r :s)") ==
          "! [X0,X1] : ('<urn:t#r>'(X0,X1) => '<urn:t#s>'(X0,X1))");
    CHECK(first("SubObjectPropertyOf(ObjectPropertyChain(:r :s) :t)") ==
          "! [X0,X1,X2] : (('<urn:t#r>'(X0,X1) & '<urn:t#s>'(X1,X2)) => "
          "'<urn:t#t>'(X0,X2))");
    CHECK(first("InverseObjectProperties(:r :s)") ==
          "! [X0,X1] : ('<urn:t#r>'(X0,X1) <=> '<urn:t#s>'(X1,X0))");
    CHECK(first("ObjectPropertyDomain(:r :A)") ==
          "! [X0,X1] : ('<urn:t#r>'(X0,X1) => '<urn:t#A>'(X0))");
    CHECK(first("ObjectPropertyRange(:r :A)") ==
          "! [X0,X1] : ('<urn:t#r>'(X0,X1) => '<urn:t#A>'(X1))");
    CHECK(first("FunctionalObjectProperty(:r)") ==
          "! [X0,X1,X2] : (('<urn:t#r>'(X0,X1) & '<urn:t#r>'(X0,X2)) => X1 = X2)");
    CHECK(first("InverseFunctionalObjectProperty(:r)") ==
          "! [X0,X1,X2] : (('<urn:t#r>'(X1,X0) & '<urn:t#r>'(X2,X0)) => X1 = X2)");
    CHECK(first("ReflexiveObjectProperty(:r)") == "! [X0] : '<urn:t#r>'(X0,X0)");
    CHECK(first("IrreflexiveObjectProperty(:r)") == "! [X0] : ~ '<urn:t#r>'(X0,X0)");
    CHECK(first("SymmetricObjectProperty(:r)") ==
          "! [X0,X1] : ('<urn:t#r>'(X0,X1) => '<urn:t#r>'(X1,X0))");
    CHECK(first("AsymmetricObjectProperty(:r)") ==
          "! [X0,X1] : ('<urn:t#r>'(X0,X1) => ~ '<urn:t#r>'(X1,X0))");
    CHECK(first("TransitiveObjectProperty(:r)") ==
          "! [X0,X1,X2] : (('<urn:t#r>'(X0,X1) & '<urn:t#r>'(X1,X2)) => "
          "'<urn:t#r>'(X0,X2))");
}

TEST_CASE("assertion translations") {
    CHECK(first("ClassAssertion(:A :i)") == "'<urn:t#A>'('<urn:t#i>')");
    CHECK(first("ObjectPropertyAssertion(:r :i :j)") ==
          "'<urn:t#r>'('<urn:t#i>','<urn:t#j>')");
    CHECK(first("NegativeObjectPropertyAssertion(:r :i :j)") ==
          "~ '<urn:t#r>'('<urn:t#i>','<urn:t#j>')");
    CHECK(first("SameIndividual(:i :j)") == "'<urn:t#i>' = '<urn:t#j>'");
    CHECK(first("DifferentIndividuals(:i :j)") == "'<urn:t#i>' != '<urn:t#j>'");
    CHECK(first("DataPropertyAssertion(:d :i \"42\"^^xsd:integer)") ==
          "'<urn:t#d>'('<urn:t#i>',lit_42)");
}

TEST_CASE("owl vocabulary") {
    CHECK(first("SubClassOf(:A owl:Thing)") ==
          "! [X0] : ('<urn:t#A>'(X0) => thing(X0))");
    CHECK(first("SubClassOf(owl:Nothing :A)") ==
          "! [X0] : (nothing(X0) => '<urn:t#A>'(X0))");
    CHECK(first("SubObjectPropertyOf(:r owl:topObjectProperty)") ==
          "! [X0,X1] : ('<urn:t#r>'(X0,X1) => top_op(X0,X1))");

    // the rest of the owl: namespace is reserved
    CHECK_THROWS_AS(entity_symbol("http://www.w3.org/2002/07/owl#Ontology"),
                    TranslateError);
    auto doc = owl::parse_ontology(
        "Prefix(:=<urn:t#>)\nOntology(<urn:t>\n"
        "SubClassOf(:A <http://www.w3.org/2002/07/owl#Individual>))");
    CHECK_THROWS_AS(translate_ontology(doc), TranslateError);
}

TEST_CASE("unit naming and background theory") {
    auto doc = owl::parse_ontology("Prefix(:=<urn:t#>)\nOntology(<urn:t>\n"
                                   "DisjointClasses(:A :B :C)\n"
                                   "SubClassOf(:A :B)\n)");
    auto problem = translate_ontology(doc);
    REQUIRE(problem.units.size() == 7);
    CHECK(problem.units[0].name == "ax_0_DisjointClasses");
    CHECK(problem.units[1].name == "ax_1_DisjointClasses");
    CHECK(problem.units[2].name == "ax_2_DisjointClasses");
    CHECK(problem.units[3].name == "ax_3_SubClassOf");
    // per-axiom variable counters restart
    CHECK(fol::emit_tptp_formula(problem.units[3].formula) ==
          "! [X0] : ('<urn:t#A>'(X0) => '<urn:t#B>'(X0))");
    CHECK(problem.units[4].name == "bg_nothing_empty");
    CHECK(problem.units[5].name == "bg_thing_domain");
    CHECK(problem.units[6].name == "bg_object_domain");
    CHECK(fol::emit_tptp_formula(problem.units[6].formula) == "! [X0] : iobj(X0)");
}

TEST_CASE("data domain background") {
    auto doc = owl::parse_ontology(
        "Prefix(:=<urn:t#>)\nOntology(<urn:t>\n"
        "DataPropertyAssertion(:d :i \"1\"^^xsd:integer)\n"
        "DataPropertyAssertion(:d :i \"2\"^^xsd:integer)\n"
        "DataPropertyAssertion(:d :j \"1\")\n"
        "DataPropertyRange(:d xsd:integer)\n)");
    auto problem = translate_ontology(doc);
    std::map<std::string, std::string> byName;
    for (const auto& u : problem.units)
        byName[u.name] = fol::emit_tptp_formula(u.formula);

    CHECK(byName.count("bg_domain_cover") == 1);
    CHECK(byName.count("bg_domain_disjoint") == 1);
    CHECK(byName.count("bg_object_domain") == 0); // replaced by the split domain
    CHECK(byName["bg_datatype_0"] ==
          "! [X0] : ('<http://www.w3.org/2001/XMLSchema#integer>'(X0) => idata(X0))");
    // i and j live on the object side, the three literals on the data side
    CHECK(byName.count("bg_iobj_0") == 1);
    CHECK(byName.count("bg_iobj_1") == 1);
    CHECK(byName.count("bg_idata_2") == 1);
    // distinctness only within one datatype: "1"^^integer vs "2"^^integer
    CHECK(byName["bg_lit_distinct_0"] == "lit_1_integer != lit_2");
    CHECK(byName.count("bg_lit_distinct_1") == 0);
}

TEST_CASE("literal constant naming") {
    std::set<owl::Literal> lits;
    lits.insert(owl::Literal{"abc", owl::vocab::xsdString, ""});
    lits.insert(owl::Literal{"a c", owl::vocab::xsdString, ""}); // collides after sanitizing
    lits.insert(owl::Literal{"1", owl::vocab::xsdInteger, ""});
    lits.insert(owl::Literal{"1", owl::vocab::xsdString, ""});
    auto names = name_literals(lits);
    std::set<std::string> used;
    for (const auto& [lit, name] : names) {
        CHECK(used.insert(name).second); // all distinct
        CHECK(name.rfind("lit_", 0) == 0);
    }
    CHECK(names[owl::Literal{"1", owl::vocab::xsdInteger, ""}] == "lit_1_integer");
    CHECK(names[owl::Literal{"1", owl::vocab::xsdString, ""}] == "lit_1_string");
}

TEST_CASE("translated ontologies are satisfiable unless contradictory") {
    using prover::Verdict;
    CHECK(satisfiability("SubClassOf(:A :B)\nClassAssertion(:A :i)") ==
          Verdict::Satisfiable);
    CHECK(satisfiability("DisjointClasses(:A :B)\nClassAssertion(:A :i)\n"
                         "ClassAssertion(:B :i)") == Verdict::Unsatisfiable);
    CHECK(satisfiability("SubClassOf(:A owl:Nothing)\nClassAssertion(:A :i)") ==
          Verdict::Unsatisfiable);
}
