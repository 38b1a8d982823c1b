// Copyright (c) the owlfol contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Parser for the OWL 2 functional-style syntax subset listed in model.hpp.
// Anything outside that subset fails with an error naming the construct.
//
// Two modes: strict requires every used IRI to carry a Declaration; lenient
// (the default) infers entity kinds from usage positions. Either way, one
// IRI may only ever have one kind (no punning).

#include <cctype>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "owlfol/error.hpp"
#include "owlfol/owl/model.hpp"

namespace owlfol::owl {

enum class ParseMode { Lenient, Strict };

namespace parser_detail {

enum class Tok {
    LParen, RParen, Equals, IriRef, PName, Word, String, LangTag, DCaret, Integer, End,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("owl: " + msg, tok_.line, tok_.col);
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) bump();
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= src_.size()) {
            tok_ = Token{Tok::End, "", line_, col_};
            return;
        }
        char c = src_[pos_];
        if (c == '(') { single(Tok::LParen); return; }
        if (c == ')') { single(Tok::RParen); return; }
        if (c == '=') { single(Tok::Equals); return; }
        if (c == '<') { iriRef(); return; }
        if (c == '"') { stringLit(); return; }
        if (c == '@') { langTag(); return; }
        if (c == '^') {
            if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '^') {
                tok_ = Token{Tok::DCaret, "^^", line_, col_};
                bump();
                bump();
                return;
            }
            throw ParseError("owl: stray '^'", line_, col_);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string n;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                n.push_back(src_[pos_]);
                bump();
            }
            tok_ = Token{Tok::Integer, std::move(n), tok_.line, tok_.col};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':') {
            word();
            return;
        }
        throw ParseError(std::string("owl: unexpected character '") + c + "'", line_, col_);
    }

    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void single(Tok k) {
        tok_ = Token{k, std::string(1, src_[pos_]), line_, col_};
        bump();
    }

    void iriRef() {
        std::size_t l = line_, c = col_;
        bump();
        std::string iri;
        while (true) {
            if (pos_ >= src_.size()) throw ParseError("owl: unterminated IRI", l, c);
            char ch = src_[pos_];
            if (ch == '>') {
                bump();
                break;
            }
            if (std::isspace(static_cast<unsigned char>(ch)))
                throw ParseError("owl: whitespace inside IRI", line_, col_);
            iri.push_back(ch);
            bump();
        }
        if (iri.empty()) throw ParseError("owl: empty IRI", l, c);
        tok_ = Token{Tok::IriRef, std::move(iri), l, c};
    }

    void stringLit() {
        std::size_t l = line_, c = col_;
        bump();
        std::string s;
        while (true) {
            if (pos_ >= src_.size()) throw ParseError("owl: unterminated string literal", l, c);
            char ch = src_[pos_];
            if (ch == '\\') {
                char nxt = pos_ + 1 < src_.size() ? src_[pos_ + 1] : '\0';
                if (nxt != '"' && nxt != '\\')
                    throw ParseError("owl: bad escape in string literal", line_, col_);
                s.push_back(nxt);
                bump();
                bump();
            } else if (ch == '"') {
                bump();
                break;
            } else {
                s.push_back(ch);
                bump();
            }
        }
        tok_ = Token{Tok::String, std::move(s), l, c};
    }

    void langTag() {
        std::size_t l = line_, c = col_;
        bump();
        std::string tag;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '-')) {
            tag.push_back(src_[pos_]);
            bump();
        }
        if (tag.empty()) throw ParseError("owl: empty language tag", l, c);
        tok_ = Token{Tok::LangTag, std::move(tag), l, c};
    }

    // A bare keyword ("SubClassOf") or an abbreviated IRI ("rdfs:label",
    // ":Fish", "xsd:"). The colon decides which.
    void word() {
        std::size_t l = line_, c = col_;
        std::string w;
        while (pos_ < src_.size()) {
            char ch = src_[pos_];
            if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == ':' ||
                ch == '-' || ch == '.') {
                w.push_back(ch);
                bump();
            } else {
                break;
            }
        }
        bool pname = w.find(':') != std::string::npos;
        tok_ = Token{pname ? Tok::PName : Tok::Word, std::move(w), l, c};
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1, col_ = 1;
    Token tok_{};
};

struct Usage {
    Iri iri;
    EntityKind kind;
};

class Parser {
public:
    Parser(const std::string& src, ParseMode mode) : lex_(src), mode_(mode) {}

    OntologyDocument run() {
        // standard prefixes are always available and redeclaring one to a
        // different IRI is caught by the usual conflict check
        doc_.prefixes.emplace("rdf:", "http://www.w3.org/1999/02/22-rdf-syntax-ns#");
        doc_.prefixes.emplace("rdfs:", "http://www.w3.org/2000/01/rdf-schema#");
        doc_.prefixes.emplace("xsd:", "http://www.w3.org/2001/XMLSchema#");
        doc_.prefixes.emplace("owl:", "http://www.w3.org/2002/07/owl#");
        while (lex_.peek().kind == Tok::Word && lex_.peek().text == "Prefix") prefixDecl();
        Token kw = lex_.next();
        if (kw.kind != Tok::Word || kw.text != "Ontology")
            throw ParseError("owl: expected Ontology(...)", kw.line, kw.col);
        expect(Tok::LParen, "'('");
        if (lex_.peek().kind == Tok::IriRef || lex_.peek().kind == Tok::PName) {
            doc_.ontologyIri = iri();
            // An optional version IRI may follow the ontology IRI.
            if (lex_.peek().kind == Tok::IriRef || lex_.peek().kind == Tok::PName) iri();
        }
        while (lex_.peek().kind == Tok::Word && lex_.peek().text == "Import") {
            lex_.next();
            expect(Tok::LParen, "'('");
            doc_.imports.push_back(iri());
            expect(Tok::RParen, "')'");
        }
        while (lex_.peek().kind != Tok::RParen) doc_.axioms.push_back(axiom());
        expect(Tok::RParen, "')'");
        expect(Tok::End, "end of file");
        finalizeEntities();
        return std::move(doc_);
    }

private:
    // ---- plumbing -------------------------------------------------------

    void expect(Tok k, const char* what) {
        if (lex_.peek().kind != k) lex_.fail(std::string("expected ") + what);
        if (k != Tok::End) lex_.next();
    }

    std::string keyword() {
        Token t = lex_.next();
        if (t.kind != Tok::Word)
            throw ParseError("owl: expected a construct keyword", t.line, t.col);
        return t.text;
    }

    Iri iri() {
        Token t = lex_.next();
        if (t.kind == Tok::IriRef) return t.text;
        if (t.kind == Tok::PName) {
            std::size_t colon = t.text.find(':');
            std::string prefix = t.text.substr(0, colon + 1);
            std::string local = t.text.substr(colon + 1);
            auto it = doc_.prefixes.find(prefix);
            if (it == doc_.prefixes.end())
                throw ParseError("owl: undeclared prefix '" + prefix + "'", t.line, t.col);
            return it->second + local;
        }
        throw ParseError("owl: expected an IRI", t.line, t.col);
    }

    void prefixDecl() {
        lex_.next(); // Prefix
        expect(Tok::LParen, "'('");
        Token name = lex_.next();
        if (name.kind != Tok::PName || name.text.back() != ':')
            throw ParseError("owl: expected prefix name ending in ':'", name.line, name.col);
        expect(Tok::Equals, "'='");
        Token target = lex_.next();
        if (target.kind != Tok::IriRef)
            throw ParseError("owl: prefix target must be a full IRI", target.line, target.col);
        expect(Tok::RParen, "')'");
        auto [it, inserted] = doc_.prefixes.emplace(name.text, target.text);
        if (!inserted && it->second != target.text)
            throw ParseError("owl: prefix '" + name.text + "' redeclared differently",
                             name.line, name.col);
    }

    std::uint32_t nonNegInt() {
        Token t = lex_.next();
        if (t.kind != Tok::Integer)
            throw ParseError("owl: expected a non-negative integer", t.line, t.col);
        return static_cast<std::uint32_t>(std::stoul(t.text));
    }

    Literal literal() {
        Token t = lex_.next();
        if (t.kind != Tok::String)
            throw ParseError("owl: expected a literal", t.line, t.col);
        Literal lit;
        lit.lexical = t.text;
        if (lex_.peek().kind == Tok::DCaret) {
            lex_.next();
            lit.datatype = iri();
        } else if (lex_.peek().kind == Tok::LangTag) {
            lit.lang = lex_.next().text;
        } else {
            lit.datatype = vocab::xsdString;
        }
        return lit;
    }

    void use(const Iri& i, EntityKind k) { usages_.push_back(Usage{i, k}); }

    Iri classIri() {
        Iri i = iri();
        use(i, EntityKind::Class);
        return i;
    }

    Iri objectPropertyIri() {
        Iri i = iri();
        use(i, EntityKind::ObjectProperty);
        return i;
    }

    Iri dataPropertyIri() {
        Iri i = iri();
        use(i, EntityKind::DataProperty);
        return i;
    }

    Iri individualIri() {
        Iri i = iri();
        use(i, EntityKind::NamedIndividual);
        return i;
    }

    // ---- expressions ----------------------------------------------------

    ClassExpression classExpression() {
        if (lex_.peek().kind != Tok::Word) return named_class(classIri());
        Token kw = lex_.next();
        const std::string& k = kw.text;
        ClassExpression ce;
        auto listOf = [&](auto parseOne, std::size_t atLeast, const char* what) {
            expect(Tok::LParen, "'('");
            while (lex_.peek().kind != Tok::RParen) parseOne();
            lex_.next();
            if (ce.subs.size() + ce.individuals.size() < atLeast)
                throw ParseError(std::string("owl: ") + what + " needs more operands",
                                 kw.line, kw.col);
        };
        if (k == "ObjectIntersectionOf" || k == "ObjectUnionOf") {
            ce.kind = k == "ObjectIntersectionOf" ? ClassExpression::Kind::ObjectIntersectionOf
                                                  : ClassExpression::Kind::ObjectUnionOf;
            listOf([&] { ce.subs.push_back(classExpression()); }, 2, k.c_str());
            return ce;
        }
        if (k == "ObjectComplementOf") {
            ce.kind = ClassExpression::Kind::ObjectComplementOf;
            expect(Tok::LParen, "'('");
            ce.subs.push_back(classExpression());
            expect(Tok::RParen, "')'");
            return ce;
        }
        if (k == "ObjectSomeValuesFrom" || k == "ObjectAllValuesFrom") {
            ce.kind = k == "ObjectSomeValuesFrom" ? ClassExpression::Kind::ObjectSomeValuesFrom
                                                  : ClassExpression::Kind::ObjectAllValuesFrom;
            expect(Tok::LParen, "'('");
            ce.iri = objectPropertyExpression();
            ce.subs.push_back(classExpression());
            expect(Tok::RParen, "')'");
            return ce;
        }
        if (k == "ObjectHasValue") {
            ce.kind = ClassExpression::Kind::ObjectHasValue;
            expect(Tok::LParen, "'('");
            ce.iri = objectPropertyExpression();
            ce.individuals.push_back(individualIri());
            expect(Tok::RParen, "')'");
            return ce;
        }
        if (k == "ObjectMinCardinality" || k == "ObjectMaxCardinality" ||
            k == "ObjectExactCardinality") {
            if (k == "ObjectMinCardinality") ce.kind = ClassExpression::Kind::ObjectMinCardinality;
            else if (k == "ObjectMaxCardinality") ce.kind = ClassExpression::Kind::ObjectMaxCardinality;
            else ce.kind = ClassExpression::Kind::ObjectExactCardinality;
            expect(Tok::LParen, "'('");
            ce.cardinality = nonNegInt();
            ce.iri = objectPropertyExpression();
            if (lex_.peek().kind != Tok::RParen) {
                ce.qualified = true;
                ce.subs.push_back(classExpression());
            }
            expect(Tok::RParen, "')'");
            return ce;
        }
        if (k == "ObjectOneOf") {
            ce.kind = ClassExpression::Kind::ObjectOneOf;
            listOf([&] { ce.individuals.push_back(individualIri()); }, 1, "ObjectOneOf");
            return ce;
        }
        if (k == "DataSomeValuesFrom" || k == "DataAllValuesFrom") {
            ce.kind = k == "DataSomeValuesFrom" ? ClassExpression::Kind::DataSomeValuesFrom
                                                : ClassExpression::Kind::DataAllValuesFrom;
            expect(Tok::LParen, "'('");
            ce.iri = dataPropertyIri();
            ce.range = dataRange();
            expect(Tok::RParen, "')'");
            return ce;
        }
        if (k == "DataHasValue") {
            ce.kind = ClassExpression::Kind::DataHasValue;
            expect(Tok::LParen, "'('");
            ce.iri = dataPropertyIri();
            ce.literal = literal();
            expect(Tok::RParen, "')'");
            return ce;
        }
        throw ParseError("owl: unsupported class expression '" + k + "'", kw.line, kw.col);
    }

    Iri objectPropertyExpression() {
        if (lex_.peek().kind == Tok::Word)
            throw ParseError("owl: unsupported property expression '" + lex_.peek().text + "'",
                             lex_.peek().line, lex_.peek().col);
        return objectPropertyIri();
    }

    DataRange dataRange() {
        DataRange r;
        if (lex_.peek().kind == Tok::Word) {
            Token kw = lex_.next();
            if (kw.text != "DataOneOf")
                throw ParseError("owl: unsupported data range '" + kw.text + "'", kw.line, kw.col);
            r.kind = DataRange::Kind::OneOf;
            expect(Tok::LParen, "'('");
            while (lex_.peek().kind != Tok::RParen) r.literals.push_back(literal());
            lex_.next();
            if (r.literals.empty())
                throw ParseError("owl: DataOneOf needs at least one literal", kw.line, kw.col);
            return r;
        }
        r.kind = DataRange::Kind::Named;
        r.datatype = iri();
        use(r.datatype, EntityKind::Datatype);
        return r;
    }

    // ---- axioms ---------------------------------------------------------

    OwlAxiom axiom() {
        Token kw = lex_.next();
        if (kw.kind != Tok::Word)
            throw ParseError("owl: expected an axiom", kw.line, kw.col);
        const std::string& k = kw.text;
        OwlAxiom ax;
        expect(Tok::LParen, "'('");

        auto finish = [&]() -> OwlAxiom {
            expect(Tok::RParen, "')'");
            return std::move(ax);
        };
        auto classList = [&](std::size_t atLeast) {
            while (lex_.peek().kind != Tok::RParen) ax.classes.push_back(classExpression());
            if (ax.classes.size() < atLeast)
                throw ParseError("owl: " + k + " needs more operands", kw.line, kw.col);
        };
        auto propertyList = [&](std::size_t atLeast) {
            while (lex_.peek().kind != Tok::RParen)
                ax.properties.push_back(objectPropertyExpression());
            if (ax.properties.size() < atLeast)
                throw ParseError("owl: " + k + " needs more operands", kw.line, kw.col);
        };
        auto individualList = [&](std::size_t atLeast) {
            while (lex_.peek().kind != Tok::RParen) ax.individuals.push_back(individualIri());
            if (ax.individuals.size() < atLeast)
                throw ParseError("owl: " + k + " needs more operands", kw.line, kw.col);
        };

        if (k == "Declaration") {
            ax.kind = OwlAxiom::Kind::Declaration;
            Token ent = lex_.next();
            if (ent.kind != Tok::Word)
                throw ParseError("owl: expected an entity kind", ent.line, ent.col);
            EntityKind ek;
            if (ent.text == "Class") ek = EntityKind::Class;
            else if (ent.text == "Datatype") ek = EntityKind::Datatype;
            else if (ent.text == "ObjectProperty") ek = EntityKind::ObjectProperty;
            else if (ent.text == "DataProperty") ek = EntityKind::DataProperty;
            else if (ent.text == "AnnotationProperty") ek = EntityKind::AnnotationProperty;
            else if (ent.text == "NamedIndividual") ek = EntityKind::NamedIndividual;
            else
                throw ParseError("owl: unsupported entity kind '" + ent.text + "'",
                                 ent.line, ent.col);
            expect(Tok::LParen, "'('");
            ax.entity = Entity{ek, iri()};
            expect(Tok::RParen, "')'");
            declared_.push_back(ax.entity);
            return finish();
        }
        if (k == "SubClassOf") {
            ax.kind = OwlAxiom::Kind::SubClassOf;
            ax.classes.push_back(classExpression());
            ax.classes.push_back(classExpression());
            return finish();
        }
        if (k == "EquivalentClasses" || k == "DisjointClasses") {
            ax.kind = k == "EquivalentClasses" ? OwlAxiom::Kind::EquivalentClasses
                                               : OwlAxiom::Kind::DisjointClasses;
            classList(2);
            return finish();
        }
        if (k == "DisjointUnion") {
            ax.kind = OwlAxiom::Kind::DisjointUnion;
            ax.classes.push_back(named_class(classIri()));
            classList(3); // the union class plus at least two disjuncts
            return finish();
        }
        if (k == "SubObjectPropertyOf") {
            ax.kind = OwlAxiom::Kind::SubObjectPropertyOf;
            if (lex_.peek().kind == Tok::Word) {
                Token chainKw = lex_.next();
                if (chainKw.text != "ObjectPropertyChain")
                    throw ParseError("owl: unsupported property expression '" + chainKw.text + "'",
                                     chainKw.line, chainKw.col);
                ax.chain = true;
                expect(Tok::LParen, "'('");
                while (lex_.peek().kind != Tok::RParen)
                    ax.properties.push_back(objectPropertyExpression());
                lex_.next();
                if (ax.properties.size() < 2)
                    throw ParseError("owl: property chain needs at least two links",
                                     chainKw.line, chainKw.col);
            } else {
                ax.properties.push_back(objectPropertyExpression());
            }
            ax.properties.push_back(objectPropertyExpression());
            return finish();
        }
        if (k == "EquivalentObjectProperties" || k == "DisjointObjectProperties") {
            ax.kind = k == "EquivalentObjectProperties"
                          ? OwlAxiom::Kind::EquivalentObjectProperties
                          : OwlAxiom::Kind::DisjointObjectProperties;
            propertyList(2);
            return finish();
        }
        if (k == "InverseObjectProperties") {
            ax.kind = OwlAxiom::Kind::InverseObjectProperties;
            propertyList(2);
            if (ax.properties.size() != 2)
                throw ParseError("owl: InverseObjectProperties takes two properties",
                                 kw.line, kw.col);
            return finish();
        }
        if (k == "ObjectPropertyDomain" || k == "ObjectPropertyRange") {
            ax.kind = k == "ObjectPropertyDomain" ? OwlAxiom::Kind::ObjectPropertyDomain
                                                  : OwlAxiom::Kind::ObjectPropertyRange;
            ax.properties.push_back(objectPropertyExpression());
            ax.classes.push_back(classExpression());
            return finish();
        }
        {
            static const std::map<std::string, OwlAxiom::Kind> characteristics = {
                {"FunctionalObjectProperty", OwlAxiom::Kind::FunctionalObjectProperty},
                {"InverseFunctionalObjectProperty", OwlAxiom::Kind::InverseFunctionalObjectProperty},
                {"ReflexiveObjectProperty", OwlAxiom::Kind::ReflexiveObjectProperty},
                {"IrreflexiveObjectProperty", OwlAxiom::Kind::IrreflexiveObjectProperty},
                {"SymmetricObjectProperty", OwlAxiom::Kind::SymmetricObjectProperty},
                {"AsymmetricObjectProperty", OwlAxiom::Kind::AsymmetricObjectProperty},
                {"TransitiveObjectProperty", OwlAxiom::Kind::TransitiveObjectProperty},
            };
            auto it = characteristics.find(k);
            if (it != characteristics.end()) {
                ax.kind = it->second;
                ax.properties.push_back(objectPropertyExpression());
                return finish();
            }
        }
        if (k == "SubDataPropertyOf") {
            ax.kind = OwlAxiom::Kind::SubDataPropertyOf;
            ax.properties.push_back(dataPropertyIri());
            ax.properties.push_back(dataPropertyIri());
            return finish();
        }
        if (k == "DataPropertyDomain") {
            ax.kind = OwlAxiom::Kind::DataPropertyDomain;
            ax.properties.push_back(dataPropertyIri());
            ax.classes.push_back(classExpression());
            return finish();
        }
        if (k == "DataPropertyRange") {
            ax.kind = OwlAxiom::Kind::DataPropertyRange;
            ax.properties.push_back(dataPropertyIri());
            ax.range = dataRange();
            return finish();
        }
        if (k == "FunctionalDataProperty") {
            ax.kind = OwlAxiom::Kind::FunctionalDataProperty;
            ax.properties.push_back(dataPropertyIri());
            return finish();
        }
        if (k == "ClassAssertion") {
            ax.kind = OwlAxiom::Kind::ClassAssertion;
            ax.classes.push_back(classExpression());
            ax.individuals.push_back(individualIri());
            return finish();
        }
        if (k == "ObjectPropertyAssertion" || k == "NegativeObjectPropertyAssertion") {
            ax.kind = k == "ObjectPropertyAssertion"
                          ? OwlAxiom::Kind::ObjectPropertyAssertion
                          : OwlAxiom::Kind::NegativeObjectPropertyAssertion;
            ax.properties.push_back(objectPropertyExpression());
            ax.individuals.push_back(individualIri());
            ax.individuals.push_back(individualIri());
            return finish();
        }
        if (k == "DataPropertyAssertion") {
            ax.kind = OwlAxiom::Kind::DataPropertyAssertion;
            ax.properties.push_back(dataPropertyIri());
            ax.individuals.push_back(individualIri());
            ax.literal = literal();
            return finish();
        }
        if (k == "SameIndividual" || k == "DifferentIndividuals") {
            ax.kind = k == "SameIndividual" ? OwlAxiom::Kind::SameIndividual
                                            : OwlAxiom::Kind::DifferentIndividuals;
            individualList(2);
            return finish();
        }
        if (k == "AnnotationAssertion") {
            ax.kind = OwlAxiom::Kind::AnnotationAssertion;
            ax.annotationProperty = iri();
            use(ax.annotationProperty, EntityKind::AnnotationProperty);
            ax.annotationSubject = iri(); // subject position implies no kind
            if (lex_.peek().kind != Tok::String)
                throw ParseError("owl: only literal annotation values are supported",
                                 lex_.peek().line, lex_.peek().col);
            ax.literal = literal();
            return finish();
        }
        throw ParseError("owl: unsupported construct '" + k + "'", kw.line, kw.col);
    }

    // ---- entity bookkeeping --------------------------------------------

    static const std::map<Iri, EntityKind>& builtins() {
        static const std::map<Iri, EntityKind> m = {
            {vocab::owlThing, EntityKind::Class},
            {vocab::owlNothing, EntityKind::Class},
            {vocab::owlTopObjectProperty, EntityKind::ObjectProperty},
            {vocab::owlBottomObjectProperty, EntityKind::ObjectProperty},
            {vocab::rdfsLabel, EntityKind::AnnotationProperty},
            {vocab::rdfsComment, EntityKind::AnnotationProperty},
            {vocab::xsdString, EntityKind::Datatype},
            {vocab::xsdInteger, EntityKind::Datatype},
            {vocab::xsdDecimal, EntityKind::Datatype},
            {vocab::xsdBoolean, EntityKind::Datatype},
        };
        return m;
    }

    void finalizeEntities() {
        std::map<Iri, EntityKind> kinds;
        auto record = [&](const Iri& i, EntityKind k, const char* how) {
            auto bi = builtins().find(i);
            if (bi != builtins().end()) {
                if (bi->second != k)
                    throw ParseError("owl: builtin <" + i + "> used as " +
                                     entity_kind_name(k));
                return;
            }
            auto [it, inserted] = kinds.emplace(i, k);
            if (!inserted && it->second != k)
                throw ParseError("owl: <" + i + "> " + how + " as both " +
                                 entity_kind_name(it->second) + " and " + entity_kind_name(k) +
                                 " (punning is not supported)");
        };

        for (const Entity& e : declared_) record(e.iri, e.kind, "declared");
        std::set<Iri> declaredIris;
        for (const Entity& e : declared_) declaredIris.insert(e.iri);

        for (const Usage& u : usages_) {
            if (builtins().count(u.iri)) {
                record(u.iri, u.kind, "used");
                continue;
            }
            if (mode_ == ParseMode::Strict && !declaredIris.count(u.iri))
                throw ParseError("owl: <" + u.iri + "> used as " + entity_kind_name(u.kind) +
                                 " without a declaration (strict mode)");
            record(u.iri, u.kind, "used");
        }

        // first declaration order, then first usage order
        std::set<Iri> emitted;
        for (const Entity& e : declared_)
            if (emitted.insert(e.iri).second) doc_.entities.push_back(e);
        if (mode_ == ParseMode::Lenient) {
            for (const Usage& u : usages_)
                if (!builtins().count(u.iri) && emitted.insert(u.iri).second)
                    doc_.entities.push_back(Entity{u.kind, u.iri});
        }
    }

    Lexer lex_;
    ParseMode mode_;
    OntologyDocument doc_;
    std::vector<Entity> declared_;
    std::vector<Usage> usages_;
};

} // namespace parser_detail

inline OntologyDocument parse_ontology(const std::string& text,
                                       ParseMode mode = ParseMode::Lenient) {
    return parser_detail::Parser(text, mode).run();
}

} // namespace owlfol::owl
