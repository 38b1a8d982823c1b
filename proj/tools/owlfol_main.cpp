// Copyright (c) the owlfol contributors.
// SPDX-License-Identifier: Apache-2.0

// Command line front end. Subcommands:
//   translate    OWL (+ FOL annotations) -> TPTP problem file
//   consistency  satisfiability of the combined theory via an external prover
//   prove        TPTP conjectures against an ontology premise
//   entails      conjectures drawn from a second ontology
//   molgen       SMILES lines -> chemistry axioms
//
// Exit codes: 0 success/positive verdict, 1 parse error, 2 translation
// error, 3 refuted (Unsatisfiable/CounterSatisfiable), 4 unknown
// (Timeout/GaveUp), 5 prover failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "owlfol/molgen.hpp"
#include "owlfol/reason.hpp"

namespace {

using namespace owlfol;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

struct InputOpts {
    std::string catalog;
    std::vector<std::string> annotationProps;
    bool strict = false;

    std::set<owl::Iri> propSet() const {
        return std::set<owl::Iri>(annotationProps.begin(), annotationProps.end());
    }
};

void add_input_opts(CLI::App* cmd, InputOpts& opts) {
    cmd->add_option("--catalog", opts.catalog,
                    "import catalog file, one '<iri> <path>' per line");
    cmd->add_option("--annotation-prop", opts.annotationProps,
                    "annotation property IRI carrying FOL axioms (repeatable; "
                    "default: IRIs ending in /tptp, #tptp, /clif, #clif)");
    cmd->add_flag("--strict", opts.strict, "reject undeclared entities");
}

struct ProverOpts {
    std::string prover;
    std::string proverArgs;
    int timeout = 30;
    bool keepProblems = false;

    ProverConfig config() const {
        ProverConfig c;
        c.executablePath = prover; // empty: $OWLFOL_PROVER, then "minifof"
        if (!proverArgs.empty()) {
            c.argumentTemplate.clear();
            std::istringstream in(proverArgs);
            std::string word;
            while (in >> word) c.argumentTemplate.push_back(word);
        }
        c.timeoutSeconds = timeout;
        c.keepProblems = keepProblems;
        return c;
    }
};

void add_prover_opts(CLI::App* cmd, ProverOpts& opts) {
    cmd->add_option("--prover", opts.prover,
                    "prover executable (default: $OWLFOL_PROVER, else minifof)");
    cmd->add_option("--prover-args", opts.proverArgs,
                    "argument template, {file} and {timeout} substituted "
                    "(default: \"--timeout {timeout} {file}\")");
    cmd->add_option("--timeout", opts.timeout, "per-proof timeout in seconds")
        ->default_val(30)
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--keep-problems", opts.keepProblems,
                  "keep the generated problem files in the working directory");
}

owl::OntologyDocument load_ontology(const std::string& path, const InputOpts& opts) {
    owl::OntologyDocument doc = owl::parse_ontology(
        read_file(path), opts.strict ? owl::ParseMode::Strict : owl::ParseMode::Lenient);
    if (!doc.imports.empty()) {
        if (opts.catalog.empty())
            throw Error(path + " has imports; provide --catalog to resolve them");
        doc = owl::resolve_imports(
            doc, owl::catalog_loader(owl::load_catalog_file(opts.catalog)),
            opts.strict ? owl::ParseMode::Strict : owl::ParseMode::Lenient);
    }
    return doc;
}

// one fresh individual per declared class: external consistency
void externalize(owl::OntologyDocument& doc) {
    std::vector<owl::Iri> classes;
    for (const owl::Entity& e : doc.entities)
        if (e.kind == owl::EntityKind::Class &&
            e.iri.rfind("http://www.w3.org/2002/07/owl#", 0) != 0)
            classes.push_back(e.iri);
    std::size_t n = 0;
    for (const owl::Iri& cls : classes) {
        owl::Iri fresh = "urn:owlfol:externalize#i" + std::to_string(n++);
        owl::Entity ind{owl::EntityKind::NamedIndividual, fresh};
        owl::OwlAxiom decl;
        decl.kind = owl::OwlAxiom::Kind::Declaration;
        decl.entity = ind;
        owl::OwlAxiom assertion;
        assertion.kind = owl::OwlAxiom::Kind::ClassAssertion;
        assertion.classes = {owl::named_class(cls)};
        assertion.individuals = {fresh};
        doc.entities.push_back(ind);
        doc.axioms.push_back(std::move(decl));
        doc.axioms.push_back(std::move(assertion));
    }
}

int exit_for_consistency(SzsStatus s) {
    switch (s) {
    case SzsStatus::Satisfiable: return 0;
    case SzsStatus::Unsatisfiable: return 3;
    case SzsStatus::Error: return 5;
    default: return 4;
    }
}

int exit_for_prove(SzsStatus s) {
    switch (s) {
    case SzsStatus::Theorem: return 0;
    case SzsStatus::CounterSatisfiable: return 3;
    case SzsStatus::Error: return 5;
    default: return 4;
    }
}

int run(int argc, char** argv) {
    CLI::App app{"OWL ontologies with first-order annotations: translation, "
                 "alignment and prover orchestration"};
    app.require_subcommand(1);

    // translate
    auto* tr = app.add_subcommand("translate", "translate an ontology to a TPTP problem");
    std::string trInput, trOutput = "-", trReport;
    bool trReadable = false, trOwlOnly = false;
    InputOpts trOpts;
    tr->add_option("input", trInput, "ontology file (functional-style syntax)")->required();
    tr->add_option("output", trOutput, "output file (default: stdout)");
    add_input_opts(tr, trOpts);
    tr->add_flag("--readable-names", trReadable,
                 "use label-derived names instead of IRIs");
    tr->add_flag("--owl-only", trOwlOnly, "skip the FOL annotations");
    tr->add_option("--alignment-report", trReport,
                   "write the symbol-to-entity alignment to this file");

    // consistency
    auto* co = app.add_subcommand("consistency", "check satisfiability of the theory");
    std::string coInput;
    bool coExternalize = false;
    InputOpts coOpts;
    ProverOpts coProver;
    co->add_option("input", coInput, "ontology file")->required();
    add_input_opts(co, coOpts);
    add_prover_opts(co, coProver);
    co->add_flag("--externalize", coExternalize,
                 "add one fresh individual per class before checking");

    // prove
    auto* pr = app.add_subcommand("prove", "prove TPTP conjectures against an ontology");
    std::string prInput, prConjectures;
    InputOpts prOpts;
    ProverOpts prProver;
    pr->add_option("input", prInput, "premise ontology file")->required();
    pr->add_option("conjectures", prConjectures,
                   "TPTP file; conjecture units are proved, axiom units join the premise")
        ->required();
    add_input_opts(pr, prOpts);
    add_prover_opts(pr, prProver);

    // entails
    auto* en = app.add_subcommand("entails",
                                  "prove each axiom of a second ontology from the first");
    std::string enPremise, enConjectures;
    int enParallel = 1;
    InputOpts enOpts;
    ProverOpts enProver;
    en->add_option("premise", enPremise, "premise ontology file")->required();
    en->add_option("conjectures", enConjectures, "conjecture ontology file")->required();
    add_input_opts(en, enOpts);
    add_prover_opts(en, enProver);
    en->add_option("--parallel", enParallel, "concurrent prover processes")
        ->default_val(1)
        ->check(CLI::PositiveNumber);

    // molgen
    auto* mo = app.add_subcommand("molgen", "generate chemistry axioms from SMILES lines");
    std::string moInput, moOutput = "-";
    mo->add_option("input", moInput,
                   "lines of <classId><TAB><smiles><TAB><class|instance> ('-' for stdin)")
        ->required();
    mo->add_option("output", moOutput, "output TPTP file (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    if (tr->parsed()) {
        owl::OntologyDocument doc = load_ontology(trInput, trOpts);
        align::SignatureMap map;
        fol::TptpProblem problem =
            assemble_problem(doc, trOpts.propSet(), {}, {},
                             trReadable ? Naming::Readable : Naming::Iri, &map,
                             !trOwlOnly);
        write_output(trOutput, emit_tptp(problem));
        if (!trReport.empty()) write_output(trReport, align::format_alignment_report(map));
        return 0;
    }

    if (co->parsed()) {
        owl::OntologyDocument doc = load_ontology(coInput, coOpts);
        if (coExternalize) externalize(doc);
        ProverVerdict v = check_consistency(doc, coOpts.propSet(), {}, coProver.config());
        std::cout << szs_name(v.status) << "\n";
        return exit_for_consistency(v.status);
    }

    if (pr->parsed()) {
        owl::OntologyDocument doc = load_ontology(prInput, prOpts);
        fol::TptpProblem conjFile = fol::parse_tptp_file(read_file(prConjectures));
        fol::TptpProblem extra;
        std::vector<fol::Formula> conjectures;
        for (fol::TptpUnit& u : conjFile.units) {
            if (u.role == fol::Role::Conjecture)
                conjectures.push_back(std::move(u.formula));
            else
                extra.units.push_back(std::move(u));
        }
        if (conjectures.empty()) throw Error(prConjectures + " has no conjecture units");
        fol::TptpProblem problem = assemble_problem(doc, prOpts.propSet(), {extra},
                                                    conjectures, Naming::Iri);
        ProverVerdict v = run_prover(problem, prProver.config(), "prove");
        std::cout << szs_name(v.status) << "\n";
        return exit_for_prove(v.status);
    }

    if (en->parsed()) {
        owl::OntologyDocument premise = load_ontology(enPremise, enOpts);
        owl::OntologyDocument conjDoc = load_ontology(enConjectures, enOpts);
        EntailmentReport report = check_entailment(premise, conjDoc, enOpts.propSet(),
                                                   enProver.config(), enParallel);
        std::cout << format_entailment_table(report);
        if (report.perConjecture.empty()) {
            std::cout << "nothing to prove\n";
            return 0;
        }
        if (report.entailed()) return 0;
        bool anyError = false, anyCounter = false;
        for (const ConjectureResult& r : report.perConjecture) {
            anyError |= r.verdict.status == SzsStatus::Error;
            anyCounter |= r.verdict.status == SzsStatus::CounterSatisfiable;
        }
        return anyError ? 5 : anyCounter ? 3 : 4;
    }

    if (mo->parsed()) {
        std::istringstream in(read_file(moInput));
        molgen::MolgenBatch batch = molgen::run_molgen(in);
        write_output(moOutput, emit_tptp(molgen_problem(batch)));
        for (const std::string& e : batch.errors) std::cerr << "error: " << e << "\n";
        return batch.errors.empty() ? 0 : 1;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const owlfol::TranslateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const owlfol::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const owlfol::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
