// Copyright (c) the owlfol contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Document-level operations: import resolution through a catalog, FOL
// annotation extraction, and the labelled signature used for alignment.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "owlfol/error.hpp"
#include "owlfol/owl/model.hpp"
#include "owlfol/owl/parser.hpp"

namespace owlfol::owl {

// Loader callback: ontology IRI -> functional-syntax text.
using OntologyLoader = std::function<std::string(const Iri&)>;

// Catalog files map ontology IRIs to local paths, one "<iri> <path>" pair
// per line. Blank lines and lines starting with '#' are skipped. Imports
// resolve only through such a catalog; there is no network access.
inline std::map<Iri, std::string> parse_catalog(const std::string& text) {
    std::map<Iri, std::string> catalog;
    std::istringstream in(text);
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream fields(line);
        std::string iri, path, extra;
        if (!(fields >> iri >> path) || (fields >> extra))
            throw ParseError("catalog: expected '<iri> <path>'", lineNo, 1);
        catalog[iri] = path;
    }
    return catalog;
}

inline std::map<Iri, std::string> load_catalog_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("catalog: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::map<Iri, std::string> catalog = parse_catalog(buf.str());
    // relative entries resolve against the catalog's own directory, not the
    // process working directory
    std::size_t slash = path.find_last_of('/');
    if (slash != std::string::npos) {
        std::string dir = path.substr(0, slash + 1);
        for (auto& [iri, target] : catalog)
            if (!target.empty() && target.front() != '/') target = dir + target;
    }
    return catalog;
}

inline OntologyLoader catalog_loader(std::map<Iri, std::string> catalog) {
    return [catalog = std::move(catalog)](const Iri& iri) -> std::string {
        auto it = catalog.find(iri);
        if (it == catalog.end())
            throw Error("import <" + iri + "> is not in the catalog");
        std::ifstream in(it->second, std::ios::binary);
        if (!in) throw Error("cannot open " + it->second + " (import <" + iri + ">)");
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };
}

// Depth-first import closure. Each ontology IRI is loaded at most once;
// cycles and diamonds are therefore harmless. The merged document keeps the
// root's identity and axiom order, appends imported axioms in traversal
// order, and drops structural duplicates.
inline OntologyDocument resolve_imports(const OntologyDocument& doc, const OntologyLoader& loader,
                                        ParseMode mode = ParseMode::Lenient) {
    OntologyDocument merged;
    merged.ontologyIri = doc.ontologyIri;
    merged.imports = doc.imports;
    merged.prefixes = doc.prefixes;

    std::set<Iri> visited;
    if (doc.ontologyIri) visited.insert(*doc.ontologyIri);
    std::set<Iri> entitySeen;
    std::vector<const OntologyDocument*> stack;

    std::function<void(const OntologyDocument&, const OntologyDocument*)> add =
        [&](const OntologyDocument& d, const OntologyDocument* root) {
            for (const OwlAxiom& ax : d.axioms) {
                if (std::find(merged.axioms.begin(), merged.axioms.end(), ax) ==
                    merged.axioms.end())
                    merged.axioms.push_back(ax);
            }
            for (const Entity& e : d.entities) {
                if (!entitySeen.insert(e.iri).second) {
                    // keep the existing kind; conflicts are punning
                    for (const Entity& prev : merged.entities)
                        if (prev.iri == e.iri && prev.kind != e.kind)
                            throw Error("imports: <" + e.iri + "> has kind " +
                                        entity_kind_name(prev.kind) + " and " +
                                        entity_kind_name(e.kind) + " (punning is not supported)");
                    continue;
                }
                merged.entities.push_back(e);
            }
            for (const Iri& imp : d.imports) {
                if (!visited.insert(imp).second) continue;
                OntologyDocument sub = parse_ontology(loader(imp), mode);
                add(sub, root);
            }
            (void)root;
        };
    add(doc, &doc);
    return merged;
}

// ---------------------------------------------------------------------------
// FOL annotations

enum class AnnotationSyntax { Tptp, Clif };

struct FolAnnotation {
    Iri subject;
    AnnotationSyntax syntax;
    std::string text;
    std::size_t index; // position among extracted annotations, document order
};

namespace ontology_detail {

inline bool endsWithCi(const std::string& s, const std::string& suffix) {
    if (s.size() < suffix.size()) return false;
    std::size_t off = s.size() - suffix.size();
    for (std::size_t i = 0; i < suffix.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(s[off + i])) !=
            std::tolower(static_cast<unsigned char>(suffix[i])))
            return false;
    return true;
}

} // namespace ontology_detail

// A property selected for FOL extraction carries TPTP when its IRI ends in
// /tptp or #tptp (case-insensitive), CLIF for /clif or #clif; anything else
// defaults to TPTP.
inline AnnotationSyntax annotation_syntax_for(const Iri& property) {
    using ontology_detail::endsWithCi;
    if (endsWithCi(property, "/clif") || endsWithCi(property, "#clif"))
        return AnnotationSyntax::Clif;
    return AnnotationSyntax::Tptp;
}

inline bool is_default_fol_annotation_property(const Iri& property) {
    using ontology_detail::endsWithCi;
    return endsWithCi(property, "/tptp") || endsWithCi(property, "#tptp") ||
           endsWithCi(property, "/clif") || endsWithCi(property, "#clif");
}

// Pull FOL annotation values, in document order, without touching the text.
// An empty property set selects the default tptp/clif properties.
inline std::vector<FolAnnotation> extract_fol_annotations(const OntologyDocument& doc,
                                                          const std::set<Iri>& properties = {}) {
    std::vector<FolAnnotation> out;
    for (const OwlAxiom& ax : doc.axioms) {
        if (ax.kind != OwlAxiom::Kind::AnnotationAssertion) continue;
        bool selected = properties.empty()
                            ? is_default_fol_annotation_property(ax.annotationProperty)
                            : properties.count(ax.annotationProperty) > 0;
        if (!selected) continue;
        out.push_back(FolAnnotation{ax.annotationSubject,
                                    annotation_syntax_for(ax.annotationProperty),
                                    ax.literal.lexical, out.size()});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Signature with labels

struct SignatureEntry {
    Entity entity;
    std::vector<std::string> labels; // rdfs:label values, document order
};

inline std::vector<SignatureEntry> signature_with_labels(const OntologyDocument& doc) {
    std::vector<SignatureEntry> out;
    std::map<Iri, std::size_t> index;
    for (const Entity& e : doc.entities) {
        index[e.iri] = out.size();
        out.push_back(SignatureEntry{e, {}});
    }
    for (const OwlAxiom& ax : doc.axioms) {
        if (ax.kind != OwlAxiom::Kind::AnnotationAssertion) continue;
        if (ax.annotationProperty != vocab::rdfsLabel) continue;
        auto it = index.find(ax.annotationSubject);
        if (it == index.end()) continue;
        out[it->second].labels.push_back(ax.literal.lexical);
    }
    return out;
}

} // namespace owlfol::owl
