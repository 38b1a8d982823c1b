// Copyright (c) the owlfol contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Object model for the supported OWL 2 functional-syntax subset.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "owlfol/error.hpp"

namespace owlfol::owl {

using Iri = std::string;

namespace vocab {

inline const Iri owlThing = "http://www.w3.org/2002/07/owl#Thing";
inline const Iri owlNothing = "http://www.w3.org/2002/07/owl#Nothing";
inline const Iri owlTopObjectProperty = "http://www.w3.org/2002/07/owl#topObjectProperty";
inline const Iri owlBottomObjectProperty = "http://www.w3.org/2002/07/owl#bottomObjectProperty";
inline const Iri owlNamespace = "http://www.w3.org/2002/07/owl#";
inline const Iri rdfsLabel = "http://www.w3.org/2000/01/rdf-schema#label";
inline const Iri rdfsComment = "http://www.w3.org/2000/01/rdf-schema#comment";
inline const Iri xsdString = "http://www.w3.org/2001/XMLSchema#string";
inline const Iri xsdInteger = "http://www.w3.org/2001/XMLSchema#integer";
inline const Iri xsdDecimal = "http://www.w3.org/2001/XMLSchema#decimal";
inline const Iri xsdBoolean = "http://www.w3.org/2001/XMLSchema#boolean";

} // namespace vocab

// The local part of an IRI: everything after the last '#' or '/'.
inline std::string iri_local_name(const Iri& iri) {
    std::size_t pos = iri.find_last_of("#/");
    if (pos == std::string::npos || pos + 1 >= iri.size()) return iri;
    return iri.substr(pos + 1);
}

enum class EntityKind {
    Class,
    Datatype,
    ObjectProperty,
    DataProperty,
    AnnotationProperty,
    NamedIndividual,
};

inline const char* entity_kind_name(EntityKind k) {
    switch (k) {
    case EntityKind::Class: return "Class";
    case EntityKind::Datatype: return "Datatype";
    case EntityKind::ObjectProperty: return "ObjectProperty";
    case EntityKind::DataProperty: return "DataProperty";
    case EntityKind::AnnotationProperty: return "AnnotationProperty";
    case EntityKind::NamedIndividual: return "NamedIndividual";
    }
    return "?";
}

struct Entity {
    EntityKind kind = EntityKind::Class;
    Iri iri;

    bool operator==(const Entity&) const = default;
    bool operator<(const Entity& o) const {
        if (iri != o.iri) return iri < o.iri;
        return kind < o.kind;
    }
};

// A literal keeps its lexical form untouched; unsupported datatypes are
// carried opaquely. Plain "..." literals get xsd:string, "..."@lang keeps
// the tag and an empty datatype.
struct Literal {
    std::string lexical;
    Iri datatype;
    std::string lang;

    bool operator==(const Literal&) const = default;
    bool operator<(const Literal& o) const {
        if (lexical != o.lexical) return lexical < o.lexical;
        if (datatype != o.datatype) return datatype < o.datatype;
        return lang < o.lang;
    }
};

struct DataRange {
    enum class Kind { Named, OneOf };

    Kind kind = Kind::Named;
    Iri datatype;                  // Named
    std::vector<Literal> literals; // OneOf

    bool operator==(const DataRange&) const = default;
};

struct ClassExpression {
    enum class Kind {
        NamedClass,
        ObjectIntersectionOf,
        ObjectUnionOf,
        ObjectComplementOf,
        ObjectSomeValuesFrom,
        ObjectAllValuesFrom,
        ObjectHasValue,
        ObjectMinCardinality,
        ObjectMaxCardinality,
        ObjectExactCardinality,
        ObjectOneOf,
        DataSomeValuesFrom,
        DataAllValuesFrom,
        DataHasValue,
    };

    Kind kind = Kind::NamedClass;
    Iri iri;                           // class IRI, or the property of a restriction
    std::vector<ClassExpression> subs; // operands / restriction filler
    std::vector<Iri> individuals;      // ObjectOneOf values, ObjectHasValue target
    DataRange range;                   // Data(Some|All)ValuesFrom filler
    Literal literal;                   // DataHasValue
    std::uint32_t cardinality = 0;
    bool qualified = false;            // cardinality restriction carries a filler

    bool operator==(const ClassExpression&) const = default;
};

inline ClassExpression named_class(Iri iri) {
    ClassExpression c;
    c.kind = ClassExpression::Kind::NamedClass;
    c.iri = std::move(iri);
    return c;
}

struct OwlAxiom {
    enum class Kind {
        Declaration,
        SubClassOf,
        EquivalentClasses,
        DisjointClasses,
        DisjointUnion,
        SubObjectPropertyOf,
        EquivalentObjectProperties,
        DisjointObjectProperties,
        InverseObjectProperties,
        ObjectPropertyDomain,
        ObjectPropertyRange,
        FunctionalObjectProperty,
        InverseFunctionalObjectProperty,
        ReflexiveObjectProperty,
        IrreflexiveObjectProperty,
        SymmetricObjectProperty,
        AsymmetricObjectProperty,
        TransitiveObjectProperty,
        SubDataPropertyOf,
        DataPropertyDomain,
        DataPropertyRange,
        FunctionalDataProperty,
        ClassAssertion,
        ObjectPropertyAssertion,
        NegativeObjectPropertyAssertion,
        DataPropertyAssertion,
        SameIndividual,
        DifferentIndividuals,
        AnnotationAssertion,
    };

    Kind kind = Kind::Declaration;
    std::vector<ClassExpression> classes;
    std::vector<Iri> properties; // for SubObjectPropertyOf with a chain: the
                                 // chain members followed by the superproperty
    std::vector<Iri> individuals;
    Literal literal;             // DataPropertyAssertion / AnnotationAssertion value
    DataRange range;             // DataPropertyRange
    Entity entity;               // Declaration
    Iri annotationProperty;
    Iri annotationSubject;
    bool chain = false;

    bool operator==(const OwlAxiom&) const = default;
};

inline const char* axiom_kind_name(OwlAxiom::Kind k) {
    switch (k) {
    case OwlAxiom::Kind::Declaration: return "Declaration";
    case OwlAxiom::Kind::SubClassOf: return "SubClassOf";
    case OwlAxiom::Kind::EquivalentClasses: return "EquivalentClasses";
    case OwlAxiom::Kind::DisjointClasses: return "DisjointClasses";
    case OwlAxiom::Kind::DisjointUnion: return "DisjointUnion";
    case OwlAxiom::Kind::SubObjectPropertyOf: return "SubObjectPropertyOf";
    case OwlAxiom::Kind::EquivalentObjectProperties: return "EquivalentObjectProperties";
    case OwlAxiom::Kind::DisjointObjectProperties: return "DisjointObjectProperties";
    case OwlAxiom::Kind::InverseObjectProperties: return "InverseObjectProperties";
    case OwlAxiom::Kind::ObjectPropertyDomain: return "ObjectPropertyDomain";
    case OwlAxiom::Kind::ObjectPropertyRange: return "ObjectPropertyRange";
    case OwlAxiom::Kind::FunctionalObjectProperty: return "FunctionalObjectProperty";
    case OwlAxiom::Kind::InverseFunctionalObjectProperty: return "InverseFunctionalObjectProperty";
    case OwlAxiom::Kind::ReflexiveObjectProperty: return "ReflexiveObjectProperty";
    case OwlAxiom::Kind::IrreflexiveObjectProperty: return "IrreflexiveObjectProperty";
    case OwlAxiom::Kind::SymmetricObjectProperty: return "SymmetricObjectProperty";
    case OwlAxiom::Kind::AsymmetricObjectProperty: return "AsymmetricObjectProperty";
    case OwlAxiom::Kind::TransitiveObjectProperty: return "TransitiveObjectProperty";
    case OwlAxiom::Kind::SubDataPropertyOf: return "SubDataPropertyOf";
    case OwlAxiom::Kind::DataPropertyDomain: return "DataPropertyDomain";
    case OwlAxiom::Kind::DataPropertyRange: return "DataPropertyRange";
    case OwlAxiom::Kind::FunctionalDataProperty: return "FunctionalDataProperty";
    case OwlAxiom::Kind::ClassAssertion: return "ClassAssertion";
    case OwlAxiom::Kind::ObjectPropertyAssertion: return "ObjectPropertyAssertion";
    case OwlAxiom::Kind::NegativeObjectPropertyAssertion: return "NegativeObjectPropertyAssertion";
    case OwlAxiom::Kind::DataPropertyAssertion: return "DataPropertyAssertion";
    case OwlAxiom::Kind::SameIndividual: return "SameIndividual";
    case OwlAxiom::Kind::DifferentIndividuals: return "DifferentIndividuals";
    case OwlAxiom::Kind::AnnotationAssertion: return "AnnotationAssertion";
    }
    return "?";
}

struct OntologyDocument {
    std::optional<Iri> ontologyIri;
    std::vector<Iri> imports;
    std::map<std::string, Iri> prefixes; // "rdfs:" -> namespace IRI
    std::vector<OwlAxiom> axioms;
    std::vector<Entity> entities; // declared plus (in lenient mode) inferred,
                                  // deduplicated, in first-seen order

    // Document identity for round-trip checks: prefix maps and the derived
    // entity table are surface data, the axiom list is what matters.
    bool same_document(const OntologyDocument& o) const {
        return ontologyIri == o.ontologyIri && imports == o.imports && axioms == o.axioms;
    }
};

} // namespace owlfol::owl
