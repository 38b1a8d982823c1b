// Copyright (c) the owlfol contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Prover orchestration. The prover is an external subprocess speaking the
// SZS status convention on stdout; anything SZS-compliant works (the
// bundled minifof by default, or eprover/vampire via --prover). This module
// assembles TPTP problems from a translated ontology plus its aligned FOL
// annotations, runs the prover with a wall-clock timeout, and maps the
// first "SZS status <word>" line to a verdict.

#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <fcntl.h>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <poll.h>
#include <set>
#include <signal.h>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <thread>
#include <unistd.h>
#include <vector>

#include "owlfol/align.hpp"
#include "owlfol/error.hpp"
#include "owlfol/fol/ast.hpp"
#include "owlfol/fol/clif.hpp"
#include "owlfol/fol/tptp.hpp"
#include "owlfol/owl/ontology.hpp"
#include "owlfol/translate.hpp"

namespace owlfol {

// -------------------------------------------------------------------------
// Prover configuration and verdicts

struct ProverConfig {
    std::string executablePath;               // empty: $OWLFOL_PROVER, else "minifof"
    std::vector<std::string> argumentTemplate // {file} and {timeout} placeholders
        = {"--timeout", "{timeout}", "{file}"};
    int timeoutSeconds = 30;
    bool keepProblems = false;
    std::string keepDirectory = ".";

    std::string resolvedExecutable() const {
        if (!executablePath.empty()) return executablePath;
        if (const char* env = std::getenv("OWLFOL_PROVER"); env && *env) return env;
        return "minifof";
    }
};

enum class SzsStatus {
    Theorem,
    CounterSatisfiable,
    Satisfiable,
    Unsatisfiable,
    Timeout,
    GaveUp,
    Error,
};

inline const char* szs_name(SzsStatus s) {
    switch (s) {
    case SzsStatus::Theorem: return "Theorem";
    case SzsStatus::CounterSatisfiable: return "CounterSatisfiable";
    case SzsStatus::Satisfiable: return "Satisfiable";
    case SzsStatus::Unsatisfiable: return "Unsatisfiable";
    case SzsStatus::Timeout: return "Timeout";
    case SzsStatus::GaveUp: return "GaveUp";
    case SzsStatus::Error: return "Error";
    }
    return "Error";
}

inline std::optional<SzsStatus> szs_from_name(const std::string& word) {
    static const std::map<std::string, SzsStatus> table = {
        {"Theorem", SzsStatus::Theorem},
        {"CounterSatisfiable", SzsStatus::CounterSatisfiable},
        {"Satisfiable", SzsStatus::Satisfiable},
        {"Unsatisfiable", SzsStatus::Unsatisfiable},
        {"Timeout", SzsStatus::Timeout},
        {"GaveUp", SzsStatus::GaveUp},
        {"Error", SzsStatus::Error},
    };
    auto it = table.find(word);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

struct ProverVerdict {
    SzsStatus status = SzsStatus::Error;
    std::chrono::duration<double> wallClock{0};
    std::string rawOutput;
};

// Scan output for the first line containing "SZS status <word>".
inline std::optional<SzsStatus> parse_szs_line(const std::string& output) {
    std::istringstream in(output);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t pos = line.find("SZS status ");
        if (pos == std::string::npos) continue;
        std::size_t start = pos + 11;
        std::size_t end = start;
        while (end < line.size() && (std::isalnum(static_cast<unsigned char>(line[end]))))
            ++end;
        return szs_from_name(line.substr(start, end - start));
    }
    return std::nullopt;
}

// -------------------------------------------------------------------------
// Subprocess execution

namespace reason_detail {

inline std::string write_problem_file(const fol::TptpProblem& problem,
                                      const ProverConfig& config,
                                      const std::string& stem) {
    std::string path;
    if (config.keepProblems) {
        path = config.keepDirectory.empty() ? stem + ".p"
                                            : config.keepDirectory + "/" + stem + ".p";
    } else {
        const char* tmp = std::getenv("TMPDIR");
        std::string dir = tmp && *tmp ? tmp : "/tmp";
        path = dir + "/owlfol_" + stem + "_XXXXXX";
        std::vector<char> buf(path.begin(), path.end());
        buf.push_back('\0');
        int fd = mkstemp(buf.data());
        if (fd < 0) throw Error("cannot create temporary problem file");
        close(fd);
        path.assign(buf.data());
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot write problem file " + path);
    out << emit_tptp(problem);
    return path;
}

} // namespace reason_detail

inline ProverVerdict run_prover(const fol::TptpProblem& problem,
                                const ProverConfig& config,
                                const std::string& problemStem = "problem") {
    ProverVerdict verdict;
    std::string path;
    try {
        path = reason_detail::write_problem_file(problem, config, problemStem);
    } catch (const std::exception& e) {
        verdict.rawOutput = e.what();
        return verdict;
    }

    std::string exe = config.resolvedExecutable();
    std::vector<std::string> args{exe};
    for (const std::string& t : config.argumentTemplate) {
        std::string a = t;
        auto replace = [&a](const std::string& from, const std::string& to) {
            for (std::size_t p; (p = a.find(from)) != std::string::npos;)
                a.replace(p, from.size(), to);
        };
        replace("{file}", path);
        replace("{timeout}", std::to_string(config.timeoutSeconds));
        args.push_back(std::move(a));
    }

    int pipefd[2];
    auto start = std::chrono::steady_clock::now();
    auto cleanup = [&] {
        if (!config.keepProblems) unlink(path.c_str());
        verdict.wallClock = std::chrono::steady_clock::now() - start;
    };

    if (pipe(pipefd) != 0) {
        verdict.rawOutput = "pipe failed";
        cleanup();
        return verdict;
    }
    pid_t pid = fork();
    if (pid < 0) {
        close(pipefd[0]);
        close(pipefd[1]);
        verdict.rawOutput = "fork failed";
        cleanup();
        return verdict;
    }
    if (pid == 0) {
        // child: stdout -> pipe, stderr silenced into the pipe as well
        dup2(pipefd[1], STDOUT_FILENO);
        dup2(pipefd[1], STDERR_FILENO);
        close(pipefd[0]);
        close(pipefd[1]);
        std::vector<char*> argv;
        for (std::string& a : args) argv.push_back(a.data());
        argv.push_back(nullptr);
        execvp(argv[0], argv.data());
        _exit(127);
    }
    close(pipefd[1]);

    // grace period past the prover's own budget so it can report Timeout itself
    auto deadline = start + std::chrono::milliseconds(
                        static_cast<long>(config.timeoutSeconds) * 1000 + 2000);
    std::string output;
    char buf[4096];
    bool killed = false;
    while (true) {
        auto now = std::chrono::steady_clock::now();
        if (now >= deadline && !killed) {
            kill(pid, SIGKILL);
            killed = true;
        }
        // a killed child's pipe closes, but a grandchild could keep it open
        if (killed && now >= deadline + std::chrono::seconds(3)) break;
        int waitMs = killed ? 100
                            : static_cast<int>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                                   deadline - now)
                                                   .count() +
                                               1);
        struct pollfd pfd{pipefd[0], POLLIN, 0};
        int pr = poll(&pfd, 1, std::max(1, std::min(waitMs, 250)));
        if (pr > 0) {
            ssize_t n = read(pipefd[0], buf, sizeof buf);
            if (n > 0) {
                output.append(buf, static_cast<std::size_t>(n));
                continue;
            }
            break; // EOF
        }
    }
    close(pipefd[0]);
    int wstatus = 0;
    waitpid(pid, &wstatus, 0);
    cleanup();

    verdict.rawOutput = output;
    // a status printed before the kill still counts; otherwise a kill means
    // Timeout and anything else without a status line is an Error
    std::optional<SzsStatus> parsed = parse_szs_line(output);
    if (parsed)
        verdict.status = *parsed;
    else
        verdict.status = killed ? SzsStatus::Timeout : SzsStatus::Error;
    return verdict;
}

// -------------------------------------------------------------------------
// Problem assembly

enum class Naming { Iri, Readable };

// Parse one annotation to a list of formulas (CLIF documents may hold
// several sentences; TPTP annotations hold exactly one formula).
inline std::vector<fol::Formula> parse_annotation(const owl::FolAnnotation& ann) {
    try {
        if (ann.syntax == owl::AnnotationSyntax::Clif)
            return fol::parse_clif(ann.text);
        return {fol::parse_tptp_formula(ann.text)};
    } catch (const Error& e) {
        throw ParseError("annotation " + std::to_string(ann.index) + " on <" +
                         ann.subject + ">: " + e.what());
    }
}

inline fol::TptpProblem assemble_problem(const owl::OntologyDocument& doc,
                                         const std::set<owl::Iri>& annotationProps,
                                         const std::vector<fol::TptpProblem>& extras,
                                         const std::vector<fol::Formula>& conjectures,
                                         Naming naming,
                                         align::SignatureMap* mapOut = nullptr,
                                         bool includeAnnotations = true) {
    fol::TptpProblem owlPart = translate_ontology(doc);

    std::vector<fol::Formula> annFormulas;
    if (includeAnnotations)
        for (const owl::FolAnnotation& ann : owl::extract_fol_annotations(doc, annotationProps))
            for (fol::Formula& f : parse_annotation(ann))
                annFormulas.push_back(fol::universal_closure(std::move(f)));

    // one signature map over every non-OWL formula in the problem
    std::set<fol::Symbol> symbols;
    auto collect = [&symbols](const fol::Formula& f) {
        for (const fol::Symbol& s : fol::collect_symbols(f)) symbols.insert(s);
    };
    for (const fol::Formula& f : annFormulas) collect(f);
    for (const fol::TptpProblem& p : extras)
        for (const fol::TptpUnit& u : p.units) collect(u.formula);
    for (const fol::Formula& f : conjectures) collect(f);

    align::SignatureMap map =
        align::build_signature_map(symbols, owl::signature_with_labels(doc));
    if (mapOut) *mapOut = map;

    align::RewriteTarget target = naming == Naming::Readable
                                      ? align::RewriteTarget::Readable
                                      : align::RewriteTarget::Iri;

    fol::TptpProblem problem;
    auto pushRewritten = [&](std::string name, fol::Role role, const fol::Formula& f) {
        problem.units.push_back(
            fol::TptpUnit{std::move(name), role, align::rewrite_formula(f, map, target)});
    };

    // order: background, OWL translations, annotations, extras, conjectures
    for (fol::TptpUnit& u : owlPart.units)
        if (u.name.rfind("bg_", 0) == 0)
            pushRewritten(u.name, u.role, u.formula);
    for (fol::TptpUnit& u : owlPart.units)
        if (u.name.rfind("bg_", 0) != 0)
            pushRewritten(u.name, u.role, u.formula);
    std::size_t n = 0;
    for (const fol::Formula& f : annFormulas)
        pushRewritten("ann_" + std::to_string(n++), fol::Role::Axiom, f);
    n = 0;
    for (const fol::TptpProblem& p : extras)
        for (const fol::TptpUnit& u : p.units)
            pushRewritten("extra_" + std::to_string(n++), u.role, u.formula);
    n = 0;
    for (const fol::Formula& f : conjectures)
        pushRewritten("conj_" + std::to_string(n++), fol::Role::Conjecture, f);
    return problem;
}

// -------------------------------------------------------------------------
// High-level checks

inline ProverVerdict check_consistency(const owl::OntologyDocument& doc,
                                       const std::set<owl::Iri>& annotationProps,
                                       const std::vector<fol::TptpProblem>& extras,
                                       const ProverConfig& config) {
    fol::TptpProblem problem =
        assemble_problem(doc, annotationProps, extras, {}, Naming::Iri);
    return run_prover(problem, config, "consistency");
}

struct ConjectureResult {
    std::string unitName;
    std::string description;
    ProverVerdict verdict;
};

struct EntailmentReport {
    std::vector<ConjectureResult> perConjecture;

    std::map<SzsStatus, int> summary() const {
        std::map<SzsStatus, int> counts;
        for (const ConjectureResult& r : perConjecture) ++counts[r.verdict.status];
        return counts;
    }
    bool entailed() const {
        for (const ConjectureResult& r : perConjecture)
            if (r.verdict.status != SzsStatus::Theorem) return false;
        return true;
    }
};

// Conjecture formulas drawn from a second ontology: its translated OWL
// axioms (background units excluded) followed by its FOL annotations.
inline std::vector<std::pair<std::string, fol::Formula>> conjectures_from_document(
    const owl::OntologyDocument& doc, const std::set<owl::Iri>& annotationProps) {
    std::vector<std::pair<std::string, fol::Formula>> out;
    fol::TptpProblem translated = translate_ontology(doc);
    for (fol::TptpUnit& u : translated.units)
        if (u.name.rfind("bg_", 0) != 0)
            out.emplace_back(u.name, std::move(u.formula));
    std::size_t n = 0;
    for (const owl::FolAnnotation& ann : owl::extract_fol_annotations(doc, annotationProps))
        for (fol::Formula& f : parse_annotation(ann))
            out.emplace_back("ann_" + std::to_string(n++),
                             fol::universal_closure(std::move(f)));
    return out;
}

// Run tasks over a bounded worker pool; results land at their task's index,
// so output order is independent of the parallelism level.
inline void run_pool(std::size_t tasks, int parallelism,
                     const std::function<void(std::size_t)>& work) {
    if (parallelism < 1) parallelism = 1;
    std::size_t next = 0;
    std::mutex mu;
    auto worker = [&] {
        while (true) {
            std::size_t mine;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next >= tasks) return;
                mine = next++;
            }
            work(mine);
        }
    };
    std::vector<std::thread> threads;
    std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(parallelism), tasks);
    for (std::size_t i = 0; i < n; ++i) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
}

inline EntailmentReport check_entailment(const owl::OntologyDocument& premiseDoc,
                                         const owl::OntologyDocument& conjectureDoc,
                                         const std::set<owl::Iri>& annotationProps,
                                         const ProverConfig& config,
                                         int parallelism = 1) {
    // premise signature extended with the conjecture document's entities, so
    // annotation symbols on either side align consistently
    owl::OntologyDocument combined = premiseDoc;
    for (const owl::Entity& e : conjectureDoc.entities) {
        bool known = false;
        for (const owl::Entity& p : combined.entities)
            if (p == e) { known = true; break; }
        if (!known) combined.entities.push_back(e);
    }
    // labels of conjecture-side entities (only labels: copying other
    // annotations would smuggle the conjecture's FOL axioms into the premise)
    for (const owl::OwlAxiom& ax : conjectureDoc.axioms)
        if (ax.kind == owl::OwlAxiom::Kind::AnnotationAssertion &&
            ax.annotationProperty == owl::vocab::rdfsLabel)
            combined.axioms.push_back(ax);

    std::vector<std::pair<std::string, fol::Formula>> conjectures =
        conjectures_from_document(conjectureDoc, annotationProps);

    EntailmentReport report;
    report.perConjecture.resize(conjectures.size());
    run_pool(conjectures.size(), parallelism, [&](std::size_t i) {
        const auto& [name, formula] = conjectures[i];
        fol::TptpProblem problem = assemble_problem(combined, annotationProps, {},
                                                    {formula}, Naming::Iri);
        ConjectureResult r;
        r.unitName = name;
        r.description = fol::emit_tptp_formula(formula);
        r.verdict = run_prover(problem, config, "conjecture_" + std::to_string(i));
        report.perConjecture[i] = std::move(r);
    });
    return report;
}

struct MembershipResult {
    std::string instance;
    std::string classPredicate;
    ProverVerdict verdict;
};

inline std::vector<MembershipResult> batch_membership(
    const fol::TptpProblem& problemBase, const std::vector<std::string>& instances,
    const std::vector<std::string>& classPredicates, const ProverConfig& config,
    int parallelism = 1) {
    std::vector<MembershipResult> results(instances.size() * classPredicates.size());
    run_pool(results.size(), parallelism, [&](std::size_t idx) {
        std::size_t i = idx / classPredicates.size();
        std::size_t j = idx % classPredicates.size();
        fol::TptpProblem problem = problemBase;
        problem.units.push_back(fol::TptpUnit{
            "conj_membership", fol::Role::Conjecture,
            fol::pred(classPredicates[j], {fol::cst(instances[i])})});
        MembershipResult r;
        r.instance = instances[i];
        r.classPredicate = classPredicates[j];
        r.verdict = run_prover(problem, config,
                               "membership_" + std::to_string(i) + "_" + std::to_string(j));
        results[idx] = std::move(r);
    });
    return results;
}

// -------------------------------------------------------------------------
// Reports

inline std::string format_membership_table(const std::vector<MembershipResult>& rs) {
    std::size_t wi = 8, wc = 5;
    for (const MembershipResult& r : rs) {
        wi = std::max(wi, r.instance.size());
        wc = std::max(wc, r.classPredicate.size());
    }
    std::ostringstream out;
    for (const MembershipResult& r : rs) {
        out << r.instance << std::string(wi - r.instance.size() + 2, ' ')
            << r.classPredicate << std::string(wc - r.classPredicate.size() + 2, ' ')
            << szs_name(r.verdict.status) << "\n";
    }
    return out.str();
}

inline std::string format_membership_jsonl(const std::vector<MembershipResult>& rs) {
    auto esc = [](const std::string& s) {
        std::string o;
        for (char c : s) {
            if (c == '"' || c == '\\') o.push_back('\\');
            o.push_back(c);
        }
        return o;
    };
    std::ostringstream out;
    for (const MembershipResult& r : rs) {
        out << "{\"instance\":\"" << esc(r.instance) << "\",\"class\":\""
            << esc(r.classPredicate) << "\",\"status\":\"" << szs_name(r.verdict.status)
            << "\",\"seconds\":" << r.verdict.wallClock.count() << "}\n";
    }
    return out.str();
}

inline std::string format_entailment_table(const EntailmentReport& report) {
    std::size_t wn = 4;
    for (const ConjectureResult& r : report.perConjecture)
        wn = std::max(wn, r.unitName.size());
    std::ostringstream out;
    for (const ConjectureResult& r : report.perConjecture)
        out << r.unitName << std::string(wn - r.unitName.size() + 2, ' ')
            << szs_name(r.verdict.status) << "  " << r.description << "\n";
    return out.str();
}

} // namespace owlfol
