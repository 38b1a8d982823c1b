// Copyright (c) the owlfol contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Chemistry axiom generator. Reads a small SMILES subset into molecular
// graphs and emits two FOL axiom shapes: substructure class definitions for
// incompletely specified molecules (wildcards) and ground prototypical
// instances with a part-of closure for fully specified ones.
//
// Hydrogens are never added implicitly; write them as [H] atoms. Aromatic
// atoms, stereo markers, isotopes, bracket H counts and dot-disconnection
// are rejected with a named error rather than approximated.

#include <array>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "owlfol/error.hpp"
#include "owlfol/fol/ast.hpp"

namespace owlfol::molgen {

// -------------------------------------------------------------------------
// Molecular graphs

enum class BondOrder { Single, Double, Triple };

struct Atom {
    std::string element; // lowercase symbol, empty for the wildcard
    int charge = 0;
    bool wildcard = false;

    bool operator==(const Atom&) const = default;
};

struct Bond {
    std::size_t i = 0, j = 0; // i < j
    BondOrder order = BondOrder::Single;

    bool operator==(const Bond&) const = default;
    auto operator<=>(const Bond&) const = default;
};

struct MolecularGraph {
    std::vector<Atom> atoms;
    std::vector<Bond> bonds; // kept sorted, one bond per pair

    void addBond(std::size_t a, std::size_t b, BondOrder order) {
        if (a == b) throw Error("smiles: bond endpoints must differ");
        if (a > b) std::swap(a, b);
        for (const Bond& e : bonds)
            if (e.i == a && e.j == b) throw Error("smiles: duplicate bond between atoms");
        bonds.push_back(Bond{a, b, order});
    }
    void normalize() { std::sort(bonds.begin(), bonds.end()); }
    bool hasWildcard() const {
        for (const Atom& a : atoms)
            if (a.wildcard) return true;
        return false;
    }
};

// -------------------------------------------------------------------------
// SMILES subset parser

namespace smiles_detail {

struct RingOpening {
    std::size_t atom;
    std::optional<BondOrder> order;
};

inline bool isOrganicStart(char c) {
    switch (c) {
    case 'B': case 'C': case 'N': case 'O':
    case 'P': case 'S': case 'F': case 'I':
        return true;
    default:
        return false;
    }
}

} // namespace smiles_detail

inline MolecularGraph parse_smiles(const std::string& s) {
    using smiles_detail::RingOpening;
    MolecularGraph g;
    std::size_t pos = 0;
    std::optional<std::size_t> prev;
    std::optional<BondOrder> pending;
    std::vector<std::size_t> branchStack;
    std::map<char, RingOpening> rings;

    auto fail = [&](const std::string& what) {
        throw ParseError("smiles: " + what, 1, pos + 1);
    };
    auto pushAtom = [&](Atom atom) {
        g.atoms.push_back(std::move(atom));
        std::size_t idx = g.atoms.size() - 1;
        if (prev) g.addBond(*prev, idx, pending.value_or(BondOrder::Single));
        pending.reset();
        prev = idx;
    };

    while (pos < s.size()) {
        char c = s[pos];
        if (c == '-') { pending = BondOrder::Single; ++pos; continue; }
        if (c == '=') { pending = BondOrder::Double; ++pos; continue; }
        if (c == '#') { pending = BondOrder::Triple; ++pos; continue; }
        if (c == '(') {
            if (!prev) fail("branch before any atom");
            branchStack.push_back(*prev);
            ++pos;
            continue;
        }
        if (c == ')') {
            if (branchStack.empty()) fail("unbalanced branch: ')' without '('");
            prev = branchStack.back();
            branchStack.pop_back();
            ++pos;
            continue;
        }
        if (c >= '1' && c <= '9') {
            if (!prev) fail("ring closure before any atom");
            auto it = rings.find(c);
            if (it == rings.end()) {
                rings[c] = RingOpening{*prev, pending};
            } else {
                RingOpening open = it->second;
                rings.erase(it);
                if (open.order && pending && *open.order != *pending)
                    fail("ring closure bond orders disagree");
                BondOrder order =
                    open.order ? *open.order : pending.value_or(BondOrder::Single);
                g.addBond(open.atom, *prev, order);
            }
            pending.reset();
            ++pos;
            continue;
        }
        if (c == '*') {
            pushAtom(Atom{"", 0, true});
            ++pos;
            continue;
        }
        if (c == '[') {
            ++pos;
            if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                fail("isotopes are not supported");
            if (pos >= s.size() || !std::isupper(static_cast<unsigned char>(s[pos])))
                fail("expected an element symbol after '['");
            std::string sym(1, s[pos++]);
            if (pos < s.size() && std::islower(static_cast<unsigned char>(s[pos])))
                sym.push_back(s[pos++]);
            if (pos < s.size() && s[pos] == '@') fail("stereo markers are not supported");
            if (pos < s.size() && s[pos] == 'H' && sym != "H")
                fail("implicit hydrogen counts are not supported");
            int charge = 0;
            if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
                int sign = s[pos] == '+' ? 1 : -1;
                char mark = s[pos];
                ++pos;
                if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                    charge = sign * (s[pos] - '0');
                    ++pos;
                } else {
                    charge = sign;
                    while (pos < s.size() && s[pos] == mark) {
                        charge += sign;
                        ++pos;
                    }
                }
            }
            if (pos >= s.size() || s[pos] != ']') fail("expected ']'");
            ++pos;
            std::string lower;
            for (char e : sym) lower.push_back(static_cast<char>(std::tolower(
                static_cast<unsigned char>(e))));
            pushAtom(Atom{lower, charge, false});
            continue;
        }
        if (smiles_detail::isOrganicStart(c)) {
            std::string sym(1, c);
            ++pos;
            // two-letter organic subset symbols
            if ((c == 'C' && pos < s.size() && s[pos] == 'l') ||
                (c == 'B' && pos < s.size() && s[pos] == 'r')) {
                sym.push_back(s[pos++]);
            }
            std::string lower;
            for (char e : sym) lower.push_back(static_cast<char>(std::tolower(
                static_cast<unsigned char>(e))));
            pushAtom(Atom{lower, 0, false});
            continue;
        }
        if (std::islower(static_cast<unsigned char>(c)))
            fail(std::string("aromatic atoms are not supported ('") + c + "')");
        if (c == '/' || c == '\\' || c == '@') fail("stereo markers are not supported");
        if (c == '%') fail("two-digit ring closures are not supported");
        if (c == '.') fail("dot-disconnected components are not supported");
        if (c == ':') fail("aromatic bonds are not supported");
        fail(std::string("unexpected character '") + c + "'");
    }
    if (!branchStack.empty()) fail("unbalanced branch: '(' without ')'");
    if (!rings.empty()) {
        std::string digits;
        for (const auto& [d, open] : rings) digits.push_back(d);
        fail("unmatched ring closure digit(s) " + digits);
    }
    if (pending) fail("dangling bond symbol");
    g.normalize();
    return g;
}

// -------------------------------------------------------------------------
// Axiom schemes

enum class SchemeKind { ClassDefinition, PrototypicalInstance };

struct AxiomScheme {
    SchemeKind kind = SchemeKind::ClassDefinition;
    std::string classId;
    std::vector<fol::Formula> formulas;
};

namespace scheme_detail {

inline const char* bond_predicate(BondOrder o) {
    switch (o) {
    case BondOrder::Single: return "has_single_bond_to";
    case BondOrder::Double: return "has_double_bond_to";
    case BondOrder::Triple: return "has_triple_bond_to";
    }
    return "has_single_bond_to";
}

inline fol::Formula charge_atom(const Atom& a, fol::Term t) {
    if (a.charge == 0) return fol::pred("has_no_charge", {std::move(t)});
    std::string name = a.charge > 0 ? "has_charge_plus_" : "has_charge_minus_";
    name += std::to_string(a.charge > 0 ? a.charge : -a.charge);
    return fol::pred(name, {std::move(t)});
}

} // namespace scheme_detail

// Substructure reading: the class holds of M iff one distinct atom per
// non-wildcard graph atom exists inside M with the right elements, charges
// and bonds. Wildcards and any bond touching one contribute nothing.
inline AxiomScheme generate_class_definition(const MolecularGraph& g,
                                             const std::string& classId) {
    using namespace fol;
    std::map<std::size_t, std::string> varOf; // graph atom index -> variable
    std::vector<std::string> quantified;
    for (std::size_t i = 0; i < g.atoms.size(); ++i) {
        if (g.atoms[i].wildcard) continue;
        std::string v = "N" + std::to_string(varOf.size());
        varOf[i] = v;
        quantified.push_back(v);
    }

    std::vector<Formula> body;
    for (const auto& [i, v] : varOf) {
        body.push_back(pred(g.atoms[i].element, {var(v)}));
        body.push_back(pred("part_of", {var(v), var("M")}));
        body.push_back(scheme_detail::charge_atom(g.atoms[i], var(v)));
    }
    for (const Bond& b : g.bonds) {
        auto fi = varOf.find(b.i), fj = varOf.find(b.j);
        if (fi == varOf.end() || fj == varOf.end()) continue;
        body.push_back(pred(scheme_detail::bond_predicate(b.order),
                            {var(fi->second), var(fj->second)}));
    }
    for (std::size_t a = 0; a < quantified.size(); ++a)
        for (std::size_t b = a + 1; b < quantified.size(); ++b)
            body.push_back(neq(var(quantified[a]), var(quantified[b])));
    body.push_back(pred("connected", {var("M")}));

    Formula rhs = exists(quantified, conj(std::move(body)));
    Formula def = forall({"M"}, iff(pred(classId, {var("M")}), std::move(rhs)));
    return AxiomScheme{SchemeKind::ClassDefinition, classId, {std::move(def)}};
}

inline std::string molecule_constant(const std::string& classId) { return "m" + classId; }
inline std::string atom_constant(const std::string& classId, std::size_t i) {
    return "n" + classId + "_" + std::to_string(i);
}

// Fully specified reading: ground atoms plus an explicit negative bond for
// every unbonded pair and a closure making the listed atoms the only parts.
inline AxiomScheme generate_prototypical_instance(const MolecularGraph& g,
                                                  const std::string& classId) {
    using namespace fol;
    if (g.hasWildcard())
        throw Error("molgen: wildcard atom in a fully specified molecule");

    Term mol = cst(molecule_constant(classId));
    auto atomC = [&](std::size_t i) { return cst(atom_constant(classId, i)); };

    std::vector<Formula> body;
    for (std::size_t i = 0; i < g.atoms.size(); ++i) {
        body.push_back(pred(g.atoms[i].element, {atomC(i)}));
        body.push_back(pred("part_of", {atomC(i), mol}));
        body.push_back(scheme_detail::charge_atom(g.atoms[i], atomC(i)));
    }
    for (const Bond& b : g.bonds)
        body.push_back(pred(scheme_detail::bond_predicate(b.order), {atomC(b.i), atomC(b.j)}));
    for (std::size_t i = 0; i < g.atoms.size(); ++i)
        for (std::size_t j = i + 1; j < g.atoms.size(); ++j) {
            bool bonded = false;
            for (const Bond& b : g.bonds)
                if (b.i == i && b.j == j) { bonded = true; break; }
            if (!bonded) body.push_back(neg(pred("has_bond", {atomC(i), atomC(j)})));
        }
    std::vector<Formula> closure;
    for (std::size_t i = 0; i < g.atoms.size(); ++i)
        closure.push_back(eq(var("X"), atomC(i)));
    body.push_back(forall(
        {"X"}, implies(pred("part_of", {var("X"), mol}), disj(std::move(closure)))));
    body.push_back(pred("connected", {mol}));

    return AxiomScheme{SchemeKind::PrototypicalInstance, classId, {conj(std::move(body))}};
}

// -------------------------------------------------------------------------
// Conjectures and background

struct InstanceRef {
    std::string classId;          // id the instance was generated from
    std::string moleculeConstant; // usually molecule_constant(classId)
};

inline std::vector<std::pair<std::string, fol::Formula>> make_membership_conjectures(
    const std::vector<InstanceRef>& instances, const std::vector<std::string>& classes) {
    std::vector<std::pair<std::string, fol::Formula>> out;
    for (const InstanceRef& inst : instances)
        for (const std::string& cls : classes)
            out.emplace_back("mem_" + inst.classId + "_" + cls,
                             fol::pred(cls, {fol::cst(inst.moleculeConstant)}));
    return out;
}

// Element disjointness for the elements actually used, bond symmetry per
// order, and order-implies-bond. Nothing else is assumed about chemistry.
inline fol::TptpProblem background_chemistry(const std::set<std::string>& elementsUsed) {
    using namespace fol;
    TptpProblem out;
    std::vector<std::string> elems(elementsUsed.begin(), elementsUsed.end());
    for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = a + 1; b < elems.size(); ++b)
            out.units.push_back(TptpUnit{
                "chem_disjoint_" + elems[a] + "_" + elems[b], Role::Axiom,
                forall({"X"}, neg(conj({pred(elems[a], {var("X")}),
                                        pred(elems[b], {var("X")})})))});
    for (BondOrder o : {BondOrder::Single, BondOrder::Double, BondOrder::Triple}) {
        std::string p = scheme_detail::bond_predicate(o);
        std::string stem = p.substr(4, p.size() - 4 - 8); // "single", "double", "triple"
        out.units.push_back(TptpUnit{
            "chem_sym_" + stem, Role::Axiom,
            forall({"X", "Y"},
                   implies(pred(p, {var("X"), var("Y")}), pred(p, {var("Y"), var("X")})))});
        out.units.push_back(TptpUnit{
            "chem_bond_" + stem, Role::Axiom,
            forall({"X", "Y"}, implies(pred(p, {var("X"), var("Y")}),
                                       pred("has_bond", {var("X"), var("Y")})))});
    }
    return out;
}

inline std::set<std::string> elements_of(const MolecularGraph& g) {
    std::set<std::string> out;
    for (const Atom& a : g.atoms)
        if (!a.wildcard) out.insert(a.element);
    return out;
}

// -------------------------------------------------------------------------
// Line-oriented input: <classId> TAB <smiles> TAB (class|instance)

struct MolgenLine {
    std::size_t lineNumber = 0;
    std::string classId;
    std::string smiles;
    bool isInstance = false;
};

struct MolgenBatch {
    std::vector<AxiomScheme> schemes;          // input order
    std::vector<InstanceRef> instances;        // instance rows, input order
    std::vector<std::string> classIds;         // class rows, input order
    std::set<std::string> elements;            // union over all parsed graphs
    std::vector<std::string> errors;           // one message per failed line
};

inline std::optional<MolgenLine> parse_molgen_line(const std::string& line,
                                                   std::size_t lineNumber) {
    if (line.empty()) return std::nullopt;
    std::size_t t1 = line.find('\t');
    std::size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t2 == std::string::npos)
        throw ParseError("expected <classId><TAB><smiles><TAB><mode>", lineNumber, 1);
    MolgenLine out;
    out.lineNumber = lineNumber;
    out.classId = line.substr(0, t1);
    out.smiles = line.substr(t1 + 1, t2 - t1 - 1);
    std::string mode = line.substr(t2 + 1);
    while (!mode.empty() && (mode.back() == '\r' || mode.back() == ' ')) mode.pop_back();
    if (mode == "class")
        out.isInstance = false;
    else if (mode == "instance")
        out.isInstance = true;
    else
        throw ParseError("mode must be 'class' or 'instance', got '" + mode + "'",
                         lineNumber, t2 + 2);
    if (out.classId.empty()) throw ParseError("empty classId", lineNumber, 1);
    return out;
}

// Process a whole input; failed lines are recorded and skipped, good lines
// still produce axioms.
inline MolgenBatch run_molgen(std::istream& in) {
    MolgenBatch batch;
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        try {
            std::optional<MolgenLine> parsed = parse_molgen_line(line, n);
            if (!parsed) continue;
            MolecularGraph g = parse_smiles(parsed->smiles);
            for (const std::string& e : elements_of(g)) batch.elements.insert(e);
            if (parsed->isInstance) {
                batch.schemes.push_back(generate_prototypical_instance(g, parsed->classId));
                batch.instances.push_back(
                    InstanceRef{parsed->classId, molecule_constant(parsed->classId)});
            } else {
                batch.schemes.push_back(generate_class_definition(g, parsed->classId));
                batch.classIds.push_back(parsed->classId);
            }
        } catch (const Error& e) {
            batch.errors.push_back("line " + std::to_string(n) + ": " + e.what());
        }
    }
    return batch;
}

// TPTP problem for a batch: chemistry background, then the schemes in input
// order (unit names def_<id> / inst_<id>).
inline fol::TptpProblem molgen_problem(const MolgenBatch& batch) {
    fol::TptpProblem out = background_chemistry(batch.elements);
    for (const AxiomScheme& s : batch.schemes) {
        std::string name = (s.kind == SchemeKind::ClassDefinition ? "def_" : "inst_") +
                           s.classId;
        for (const fol::Formula& f : s.formulas)
            out.units.push_back(fol::TptpUnit{name, fol::Role::Axiom, f});
    }
    return out;
}

} // namespace owlfol::molgen
