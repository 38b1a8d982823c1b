// Copyright (c) the owlfol contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Pretty printer for parsed ontology documents. Prefix declarations are
// reproduced, but every IRI is printed in full <...> form, which keeps the
// printer trivially reparseable.

#include <string>

#include "owlfol/owl/model.hpp"

namespace owlfol::owl {

namespace printer_detail {

inline void iriRef(const Iri& i, std::string& out) {
    out.push_back('<');
    out += i;
    out.push_back('>');
}

inline void literal(const Literal& lit, std::string& out) {
    out.push_back('"');
    for (char c : lit.lexical) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    if (!lit.lang.empty()) {
        out.push_back('@');
        out += lit.lang;
    } else if (!lit.datatype.empty() && lit.datatype != vocab::xsdString) {
        out += "^^";
        iriRef(lit.datatype, out);
    }
}

inline void dataRange(const DataRange& r, std::string& out) {
    if (r.kind == DataRange::Kind::Named) {
        iriRef(r.datatype, out);
        return;
    }
    out += "DataOneOf(";
    for (std::size_t i = 0; i < r.literals.size(); ++i) {
        if (i) out.push_back(' ');
        literal(r.literals[i], out);
    }
    out.push_back(')');
}

inline void classExpr(const ClassExpression& ce, std::string& out) {
    using K = ClassExpression::Kind;
    auto nary = [&](const char* name) {
        out += name;
        out.push_back('(');
        for (std::size_t i = 0; i < ce.subs.size(); ++i) {
            if (i) out.push_back(' ');
            classExpr(ce.subs[i], out);
        }
        out.push_back(')');
    };
    switch (ce.kind) {
    case K::NamedClass:
        iriRef(ce.iri, out);
        return;
    case K::ObjectIntersectionOf: nary("ObjectIntersectionOf"); return;
    case K::ObjectUnionOf: nary("ObjectUnionOf"); return;
    case K::ObjectComplementOf: nary("ObjectComplementOf"); return;
    case K::ObjectSomeValuesFrom:
    case K::ObjectAllValuesFrom:
        out += ce.kind == K::ObjectSomeValuesFrom ? "ObjectSomeValuesFrom("
                                                  : "ObjectAllValuesFrom(";
        iriRef(ce.iri, out);
        out.push_back(' ');
        classExpr(ce.subs.front(), out);
        out.push_back(')');
        return;
    case K::ObjectHasValue:
        out += "ObjectHasValue(";
        iriRef(ce.iri, out);
        out.push_back(' ');
        iriRef(ce.individuals.front(), out);
        out.push_back(')');
        return;
    case K::ObjectMinCardinality:
    case K::ObjectMaxCardinality:
    case K::ObjectExactCardinality:
        if (ce.kind == K::ObjectMinCardinality) out += "ObjectMinCardinality(";
        else if (ce.kind == K::ObjectMaxCardinality) out += "ObjectMaxCardinality(";
        else out += "ObjectExactCardinality(";
        out += std::to_string(ce.cardinality);
        out.push_back(' ');
        iriRef(ce.iri, out);
        if (ce.qualified) {
            out.push_back(' ');
            classExpr(ce.subs.front(), out);
        }
        out.push_back(')');
        return;
    case K::ObjectOneOf:
        out += "ObjectOneOf(";
        for (std::size_t i = 0; i < ce.individuals.size(); ++i) {
            if (i) out.push_back(' ');
            iriRef(ce.individuals[i], out);
        }
        out.push_back(')');
        return;
    case K::DataSomeValuesFrom:
    case K::DataAllValuesFrom:
        out += ce.kind == K::DataSomeValuesFrom ? "DataSomeValuesFrom(" : "DataAllValuesFrom(";
        iriRef(ce.iri, out);
        out.push_back(' ');
        dataRange(ce.range, out);
        out.push_back(')');
        return;
    case K::DataHasValue:
        out += "DataHasValue(";
        iriRef(ce.iri, out);
        out.push_back(' ');
        literal(ce.literal, out);
        out.push_back(')');
        return;
    }
}

inline void axiom(const OwlAxiom& ax, std::string& out) {
    using K = OwlAxiom::Kind;
    out += "  ";
    out += axiom_kind_name(ax.kind);
    out.push_back('(');
    bool space = false;
    auto sep = [&] {
        if (space) out.push_back(' ');
        space = true;
    };
    switch (ax.kind) {
    case K::Declaration:
        out += entity_kind_name(ax.entity.kind);
        out.push_back('(');
        iriRef(ax.entity.iri, out);
        out.push_back(')');
        break;
    case K::SubObjectPropertyOf:
        if (ax.chain) {
            out += "ObjectPropertyChain(";
            for (std::size_t i = 0; i + 1 < ax.properties.size(); ++i) {
                if (i) out.push_back(' ');
                iriRef(ax.properties[i], out);
            }
            out.push_back(')');
            out.push_back(' ');
            iriRef(ax.properties.back(), out);
        } else {
            iriRef(ax.properties[0], out);
            out.push_back(' ');
            iriRef(ax.properties[1], out);
        }
        break;
    case K::DisjointUnion:
        classExpr(ax.classes.front(), out);
        for (std::size_t i = 1; i < ax.classes.size(); ++i) {
            out.push_back(' ');
            classExpr(ax.classes[i], out);
        }
        break;
    case K::DataPropertyRange:
        iriRef(ax.properties.front(), out);
        out.push_back(' ');
        dataRange(ax.range, out);
        break;
    case K::DataPropertyAssertion:
        iriRef(ax.properties.front(), out);
        out.push_back(' ');
        iriRef(ax.individuals.front(), out);
        out.push_back(' ');
        literal(ax.literal, out);
        break;
    case K::AnnotationAssertion:
        iriRef(ax.annotationProperty, out);
        out.push_back(' ');
        iriRef(ax.annotationSubject, out);
        out.push_back(' ');
        literal(ax.literal, out);
        break;
    default:
        // The general shape: properties, then classes, then individuals,
        // then an optional literal; this matches every remaining kind.
        for (const Iri& p : ax.properties) {
            sep();
            iriRef(p, out);
        }
        for (const ClassExpression& c : ax.classes) {
            sep();
            classExpr(c, out);
        }
        for (const Iri& i : ax.individuals) {
            sep();
            iriRef(i, out);
        }
        break;
    }
    out += ")\n";
}

} // namespace printer_detail

inline std::string print_ontology(const OntologyDocument& doc) {
    std::string out;
    for (const auto& [prefix, target] : doc.prefixes) {
        out += "Prefix(";
        out += prefix;
        out += "=<";
        out += target;
        out += ">)\n";
    }
    out += "Ontology(";
    if (doc.ontologyIri) {
        printer_detail::iriRef(*doc.ontologyIri, out);
    }
    out.push_back('\n');
    for (const Iri& i : doc.imports) {
        out += "  Import(<";
        out += i;
        out += ">)\n";
    }
    for (const OwlAxiom& ax : doc.axioms) printer_detail::axiom(ax, out);
    out += ")\n";
    return out;
}

} // namespace owlfol::owl
