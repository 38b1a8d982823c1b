// Copyright (c) the owlfol contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// OWL to FOL translation along the direct semantics: classes become unary
// predicates over the subject position, object and data properties binary
// ones, individuals constants. Entities are named by their full IRI in
// angle brackets; owl:Thing, owl:Nothing, owl:topObjectProperty and
// owl:bottomObjectProperty map to the reserved symbols thing, nothing,
// top_op and bottom_op, and any other owl-namespace vocabulary is rejected.
//
// Every produced problem carries a background theory (unit names prefixed
// bg_): owl:Nothing is empty, owl:Thing coincides with the object domain
// predicate iobj, and when the data domain is in play, iobj/idata cover the
// universe disjointly, constants are sorted into their domains, and
// same-datatype literals with different lexical forms are distinct.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "owlfol/error.hpp"
#include "owlfol/fol/ast.hpp"
#include "owlfol/owl/model.hpp"

namespace owlfol {

// FOL symbol for an OWL entity or individual.
inline std::string entity_symbol(const owl::Iri& iri) {
    if (iri == owl::vocab::owlThing) return "thing";
    if (iri == owl::vocab::owlNothing) return "nothing";
    if (iri == owl::vocab::owlTopObjectProperty) return "top_op";
    if (iri == owl::vocab::owlBottomObjectProperty) return "bottom_op";
    if (iri.rfind(owl::vocab::owlNamespace, 0) == 0)
        throw TranslateError("reserved vocabulary <" + iri + "> has no translation");
    return "<" + iri + ">";
}

// Deterministic constant names for literals: lit_<sanitized lexical>; when
// distinct literals collide on that, the sanitized datatype local name is
// appended, and numeric suffixes settle anything left.
namespace translate_detail {

inline std::string sanitize(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (std::isalnum(static_cast<unsigned char>(c)))
            out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        else
            out.push_back('_');
    }
    if (out.empty()) out = "blank";
    return out;
}

} // namespace translate_detail

using LiteralNames = std::map<owl::Literal, std::string>;

inline LiteralNames name_literals(const std::set<owl::Literal>& literals) {
    using translate_detail::sanitize;
    std::map<std::string, std::vector<owl::Literal>> byBase;
    for (const owl::Literal& lit : literals)
        byBase["lit_" + sanitize(lit.lexical)].push_back(lit);
    LiteralNames names;
    std::set<std::string> taken;
    for (auto& [base, group] : byBase) {
        for (const owl::Literal& lit : group) {
            std::string name = base;
            if (group.size() > 1) {
                std::string dt = lit.datatype.empty() ? lit.lang : owl::iri_local_name(lit.datatype);
                name += "_" + sanitize(dt);
            }
            std::string candidate = name;
            int n = 2;
            while (!taken.insert(candidate).second) candidate = name + "_" + std::to_string(n++);
            names[lit] = candidate;
        }
    }
    return names;
}

struct TranslationContext {
    int counter = 0;
    const LiteralNames* literalNames = nullptr;

    std::string fresh() { return "X" + std::to_string(counter++); }

    std::string literalConstant(const owl::Literal& lit) const {
        if (literalNames) {
            auto it = literalNames->find(lit);
            if (it != literalNames->end()) return it->second;
        }
        return "lit_" + translate_detail::sanitize(lit.lexical);
    }
};

// -------------------------------------------------------------------------
// Class expressions: the formula holding at a given subject term.

namespace translate_detail {

inline fol::Formula dataRangeAt(const owl::DataRange& r, const fol::Term& subject,
                                TranslationContext& ctx) {
    if (r.kind == owl::DataRange::Kind::Named)
        return fol::pred(entity_symbol(r.datatype), {subject});
    std::vector<fol::Formula> cases;
    for (const owl::Literal& lit : r.literals)
        cases.push_back(fol::eq(subject, fol::cst(ctx.literalConstant(lit))));
    return fol::disj(std::move(cases));
}

} // namespace translate_detail

inline fol::Formula translate_class_expression(const owl::ClassExpression& ce,
                                               const fol::Term& subject,
                                               TranslationContext& ctx) {
    using K = owl::ClassExpression::Kind;
    using namespace fol;
    switch (ce.kind) {
    case K::NamedClass:
        return pred(entity_symbol(ce.iri), {subject});
    case K::ObjectIntersectionOf:
    case K::ObjectUnionOf: {
        std::vector<Formula> parts;
        for (const owl::ClassExpression& sub : ce.subs)
            parts.push_back(translate_class_expression(sub, subject, ctx));
        return ce.kind == K::ObjectIntersectionOf ? conj(std::move(parts))
                                                  : disj(std::move(parts));
    }
    case K::ObjectComplementOf:
        return neg(translate_class_expression(ce.subs.front(), subject, ctx));
    case K::ObjectSomeValuesFrom: {
        std::string y = ctx.fresh();
        Formula filler = translate_class_expression(ce.subs.front(), var(y), ctx);
        return exists({y}, conj({pred(entity_symbol(ce.iri), {subject, var(y)}),
                                 std::move(filler)}));
    }
    case K::ObjectAllValuesFrom: {
        std::string y = ctx.fresh();
        Formula filler = translate_class_expression(ce.subs.front(), var(y), ctx);
        return forall({y}, implies(pred(entity_symbol(ce.iri), {subject, var(y)}),
                                   std::move(filler)));
    }
    case K::ObjectHasValue:
        return pred(entity_symbol(ce.iri),
                    {subject, cst(entity_symbol(ce.individuals.front()))});
    case K::ObjectMinCardinality: {
        if (ce.cardinality == 0) return truth();
        std::vector<std::string> ys;
        for (std::uint32_t i = 0; i < ce.cardinality; ++i) ys.push_back(ctx.fresh());
        std::vector<Formula> parts;
        for (const std::string& y : ys) {
            parts.push_back(pred(entity_symbol(ce.iri), {subject, var(y)}));
            if (ce.qualified)
                parts.push_back(translate_class_expression(ce.subs.front(), var(y), ctx));
        }
        for (std::size_t i = 0; i < ys.size(); ++i)
            for (std::size_t j = i + 1; j < ys.size(); ++j)
                parts.push_back(neq(var(ys[i]), var(ys[j])));
        return exists(std::move(ys), conj(std::move(parts)));
    }
    case K::ObjectMaxCardinality: {
        std::vector<std::string> ys;
        for (std::uint32_t i = 0; i < ce.cardinality + 1; ++i) ys.push_back(ctx.fresh());
        std::vector<Formula> ante;
        for (const std::string& y : ys) {
            ante.push_back(pred(entity_symbol(ce.iri), {subject, var(y)}));
            if (ce.qualified)
                ante.push_back(translate_class_expression(ce.subs.front(), var(y), ctx));
        }
        if (ce.cardinality == 0)
            return forall(std::move(ys), neg(conj(std::move(ante))));
        std::vector<Formula> merges;
        for (std::size_t i = 0; i < ys.size(); ++i)
            for (std::size_t j = i + 1; j < ys.size(); ++j)
                merges.push_back(eq(var(ys[i]), var(ys[j])));
        return forall(std::move(ys),
                      implies(conj(std::move(ante)), disj(std::move(merges))));
    }
    case K::ObjectExactCardinality: {
        owl::ClassExpression minPart = ce;
        minPart.kind = K::ObjectMinCardinality;
        owl::ClassExpression maxPart = ce;
        maxPart.kind = K::ObjectMaxCardinality;
        Formula maxF = translate_class_expression(maxPart, subject, ctx);
        if (ce.cardinality == 0) return maxF;
        Formula minF = translate_class_expression(minPart, subject, ctx);
        return conj({std::move(minF), std::move(maxF)});
    }
    case K::ObjectOneOf: {
        std::vector<Formula> cases;
        for (const owl::Iri& ind : ce.individuals)
            cases.push_back(eq(subject, cst(entity_symbol(ind))));
        return disj(std::move(cases));
    }
    case K::DataSomeValuesFrom: {
        std::string y = ctx.fresh();
        Formula range = translate_detail::dataRangeAt(ce.range, var(y), ctx);
        return exists({y}, conj({pred(entity_symbol(ce.iri), {subject, var(y)}),
                                 std::move(range)}));
    }
    case K::DataAllValuesFrom: {
        std::string y = ctx.fresh();
        Formula range = translate_detail::dataRangeAt(ce.range, var(y), ctx);
        return forall({y}, implies(pred(entity_symbol(ce.iri), {subject, var(y)}),
                                   std::move(range)));
    }
    case K::DataHasValue:
        return pred(entity_symbol(ce.iri),
                    {subject, cst(ctx.literalConstant(ce.literal))});
    }
    throw TranslateError("unsupported class expression");
}

inline fol::Formula translate_class_expression(const owl::ClassExpression& ce,
                                               const std::string& varName,
                                               TranslationContext& ctx) {
    return translate_class_expression(ce, fol::var(varName), ctx);
}

// -------------------------------------------------------------------------
// Axioms. One axiom can yield several formulas (pairwise expansions).

inline std::vector<fol::Formula> translate_axiom(const owl::OwlAxiom& ax,
                                                 TranslationContext& ctx) {
    using K = owl::OwlAxiom::Kind;
    using namespace fol;
    std::vector<Formula> out;

    auto prop = [&](std::size_t i) { return entity_symbol(ax.properties[i]); };
    auto ind = [&](std::size_t i) { return cst(entity_symbol(ax.individuals[i])); };

    switch (ax.kind) {
    case K::Declaration:
    case K::AnnotationAssertion:
        return out;

    case K::SubClassOf: {
        std::string x = ctx.fresh();
        Formula lhs = translate_class_expression(ax.classes[0], var(x), ctx);
        Formula rhs = translate_class_expression(ax.classes[1], var(x), ctx);
        out.push_back(forall({x}, implies(std::move(lhs), std::move(rhs))));
        return out;
    }
    case K::EquivalentClasses:
    case K::DisjointClasses: {
        for (std::size_t i = 0; i < ax.classes.size(); ++i)
            for (std::size_t j = i + 1; j < ax.classes.size(); ++j) {
                std::string x = ctx.fresh();
                Formula a = translate_class_expression(ax.classes[i], var(x), ctx);
                Formula b = translate_class_expression(ax.classes[j], var(x), ctx);
                out.push_back(ax.kind == K::EquivalentClasses
                                  ? forall({x}, iff(std::move(a), std::move(b)))
                                  : forall({x}, neg(conj({std::move(a), std::move(b)}))));
            }
        return out;
    }
    case K::DisjointUnion: {
        std::string x = ctx.fresh();
        Formula lhs = translate_class_expression(ax.classes[0], var(x), ctx);
        std::vector<Formula> cases;
        for (std::size_t i = 1; i < ax.classes.size(); ++i)
            cases.push_back(translate_class_expression(ax.classes[i], var(x), ctx));
        out.push_back(forall({x}, iff(std::move(lhs), disj(std::move(cases)))));
        for (std::size_t i = 1; i < ax.classes.size(); ++i)
            for (std::size_t j = i + 1; j < ax.classes.size(); ++j) {
                std::string y = ctx.fresh();
                Formula a = translate_class_expression(ax.classes[i], var(y), ctx);
                Formula b = translate_class_expression(ax.classes[j], var(y), ctx);
                out.push_back(forall({y}, neg(conj({std::move(a), std::move(b)}))));
            }
        return out;
    }
    case K::SubObjectPropertyOf: {
        if (ax.chain) {
            std::size_t links = ax.properties.size() - 1;
            std::vector<std::string> xs;
            for (std::size_t i = 0; i <= links; ++i) xs.push_back(ctx.fresh());
            std::vector<Formula> hops;
            for (std::size_t i = 0; i < links; ++i)
                hops.push_back(pred(prop(i), {var(xs[i]), var(xs[i + 1])}));
            Formula head = pred(prop(links), {var(xs.front()), var(xs.back())});
            out.push_back(forall(std::move(xs),
                                 implies(conj(std::move(hops)), std::move(head))));
            return out;
        }
        std::string x = ctx.fresh(), y = ctx.fresh();
        out.push_back(forall({x, y}, implies(pred(prop(0), {var(x), var(y)}),
                                             pred(prop(1), {var(x), var(y)}))));
        return out;
    }
    case K::EquivalentObjectProperties:
    case K::DisjointObjectProperties: {
        for (std::size_t i = 0; i < ax.properties.size(); ++i)
            for (std::size_t j = i + 1; j < ax.properties.size(); ++j) {
                std::string x = ctx.fresh(), y = ctx.fresh();
                Formula a = pred(prop(i), {var(x), var(y)});
                Formula b = pred(prop(j), {var(x), var(y)});
                out.push_back(ax.kind == K::EquivalentObjectProperties
                                  ? forall({x, y}, iff(std::move(a), std::move(b)))
                                  : forall({x, y}, neg(conj({std::move(a), std::move(b)}))));
            }
        return out;
    }
    case K::InverseObjectProperties: {
        std::string x = ctx.fresh(), y = ctx.fresh();
        out.push_back(forall({x, y}, iff(pred(prop(0), {var(x), var(y)}),
                                         pred(prop(1), {var(y), var(x)}))));
        return out;
    }
    case K::ObjectPropertyDomain:
    case K::ObjectPropertyRange: {
        std::string x = ctx.fresh(), y = ctx.fresh();
        Formula at = translate_class_expression(
            ax.classes[0], var(ax.kind == K::ObjectPropertyDomain ? x : y), ctx);
        out.push_back(forall({x, y}, implies(pred(prop(0), {var(x), var(y)}),
                                             std::move(at))));
        return out;
    }
    case K::FunctionalObjectProperty:
    case K::InverseFunctionalObjectProperty: {
        std::string x = ctx.fresh(), y = ctx.fresh(), z = ctx.fresh();
        bool inverse = ax.kind == K::InverseFunctionalObjectProperty;
        Formula a = inverse ? pred(prop(0), {var(y), var(x)})
                            : pred(prop(0), {var(x), var(y)});
        Formula b = inverse ? pred(prop(0), {var(z), var(x)})
                            : pred(prop(0), {var(x), var(z)});
        out.push_back(forall({x, y, z}, implies(conj({std::move(a), std::move(b)}),
                                                eq(var(y), var(z)))));
        return out;
    }
    case K::ReflexiveObjectProperty: {
        std::string x = ctx.fresh();
        out.push_back(forall({x}, pred(prop(0), {var(x), var(x)})));
        return out;
    }
    case K::IrreflexiveObjectProperty: {
        std::string x = ctx.fresh();
        out.push_back(forall({x}, neg(pred(prop(0), {var(x), var(x)}))));
        return out;
    }
    case K::SymmetricObjectProperty:
    case K::AsymmetricObjectProperty: {
        std::string x = ctx.fresh(), y = ctx.fresh();
        Formula back = pred(prop(0), {var(y), var(x)});
        if (ax.kind == K::AsymmetricObjectProperty) back = neg(std::move(back));
        out.push_back(forall({x, y}, implies(pred(prop(0), {var(x), var(y)}),
                                             std::move(back))));
        return out;
    }
    case K::TransitiveObjectProperty: {
        std::string x = ctx.fresh(), y = ctx.fresh(), z = ctx.fresh();
        out.push_back(forall({x, y, z},
                             implies(conj({pred(prop(0), {var(x), var(y)}),
                                           pred(prop(0), {var(y), var(z)})}),
                                     pred(prop(0), {var(x), var(z)}))));
        return out;
    }
    case K::SubDataPropertyOf: {
        std::string x = ctx.fresh(), y = ctx.fresh();
        out.push_back(forall({x, y}, implies(pred(prop(0), {var(x), var(y)}),
                                             pred(prop(1), {var(x), var(y)}))));
        return out;
    }
    case K::DataPropertyDomain: {
        std::string x = ctx.fresh(), y = ctx.fresh();
        Formula at = translate_class_expression(ax.classes[0], var(x), ctx);
        out.push_back(forall({x, y}, implies(pred(prop(0), {var(x), var(y)}),
                                             std::move(at))));
        return out;
    }
    case K::DataPropertyRange: {
        std::string x = ctx.fresh(), y = ctx.fresh();
        Formula at = translate_detail::dataRangeAt(ax.range, var(y), ctx);
        out.push_back(forall({x, y}, implies(pred(prop(0), {var(x), var(y)}),
                                             std::move(at))));
        return out;
    }
    case K::FunctionalDataProperty: {
        std::string x = ctx.fresh(), y = ctx.fresh(), z = ctx.fresh();
        out.push_back(forall({x, y, z},
                             implies(conj({pred(prop(0), {var(x), var(y)}),
                                           pred(prop(0), {var(x), var(z)})}),
                                     eq(var(y), var(z)))));
        return out;
    }
    case K::ClassAssertion:
        out.push_back(translate_class_expression(ax.classes[0], ind(0), ctx));
        return out;
    case K::ObjectPropertyAssertion:
        out.push_back(pred(prop(0), {ind(0), ind(1)}));
        return out;
    case K::NegativeObjectPropertyAssertion:
        out.push_back(neg(pred(prop(0), {ind(0), ind(1)})));
        return out;
    case K::DataPropertyAssertion:
        out.push_back(pred(prop(0), {ind(0), cst(ctx.literalConstant(ax.literal))}));
        return out;
    case K::SameIndividual:
    case K::DifferentIndividuals: {
        for (std::size_t i = 0; i < ax.individuals.size(); ++i)
            for (std::size_t j = i + 1; j < ax.individuals.size(); ++j)
                out.push_back(ax.kind == K::SameIndividual ? eq(ind(i), ind(j))
                                                           : neq(ind(i), ind(j)));
        return out;
    }
    }
    throw TranslateError("unsupported axiom kind");
}

// -------------------------------------------------------------------------
// Background theory

struct BackgroundInputs {
    bool usesDataDomain = false;
    bool usesTopObjectProperty = false;
    bool usesBottomObjectProperty = false;
    std::vector<std::string> individualConstants;          // first-seen order
    std::vector<std::pair<owl::Literal, std::string>> literals; // literal, constant
    std::set<std::string> datatypePredicates;
};

inline std::vector<fol::TptpUnit> background_theory(const BackgroundInputs& in) {
    using namespace fol;
    std::vector<TptpUnit> units;
    auto push = [&](std::string name, Formula f) {
        units.push_back(TptpUnit{std::move(name), Role::Axiom, std::move(f)});
    };

    push("bg_nothing_empty", forall({"X0"}, neg(pred("nothing", {var("X0")}))));
    push("bg_thing_domain",
         forall({"X0"}, iff(pred("thing", {var("X0")}), pred("iobj", {var("X0")}))));
    if (!in.usesDataDomain) {
        push("bg_object_domain", forall({"X0"}, pred("iobj", {var("X0")})));
    } else {
        push("bg_domain_cover", forall({"X0"}, disj({pred("iobj", {var("X0")}),
                                                     pred("idata", {var("X0")})})));
        push("bg_domain_disjoint", forall({"X0"}, neg(conj({pred("iobj", {var("X0")}),
                                                            pred("idata", {var("X0")})}))));
        std::size_t n = 0;
        for (const std::string& dt : in.datatypePredicates)
            push("bg_datatype_" + std::to_string(n++),
                 forall({"X0"}, implies(pred(dt, {var("X0")}), pred("idata", {var("X0")}))));
        n = 0;
        for (const std::string& c : in.individualConstants)
            push("bg_iobj_" + std::to_string(n++), pred("iobj", {cst(c)}));
        n = 0;
        for (const auto& [lit, c] : in.literals)
            push("bg_idata_" + std::to_string(n++), pred("idata", {cst(c)}));
        n = 0;
        for (std::size_t i = 0; i < in.literals.size(); ++i)
            for (std::size_t j = i + 1; j < in.literals.size(); ++j) {
                const auto& [la, ca] = in.literals[i];
                const auto& [lb, cb] = in.literals[j];
                if (la.datatype == lb.datatype && la.lang == lb.lang &&
                    la.lexical != lb.lexical)
                    push("bg_lit_distinct_" + std::to_string(n++), neq(cst(ca), cst(cb)));
            }
    }
    if (in.usesTopObjectProperty)
        push("bg_top_op", forall({"X0", "X1"}, pred("top_op", {var("X0"), var("X1")})));
    if (in.usesBottomObjectProperty)
        push("bg_bottom_op",
             forall({"X0", "X1"}, neg(pred("bottom_op", {var("X0"), var("X1")}))));
    return units;
}

inline std::vector<fol::TptpUnit> background_theory(bool usesDataDomain) {
    BackgroundInputs in;
    in.usesDataDomain = usesDataDomain;
    return background_theory(in);
}

// -------------------------------------------------------------------------
// Whole documents

namespace translate_detail {

struct DocScan {
    BackgroundInputs bg;
    std::set<owl::Literal> literalSet;
    std::set<std::string> seenIndividuals;

    void individual(const owl::Iri& iri) {
        std::string sym = entity_symbol(iri);
        if (seenIndividuals.insert(sym).second) bg.individualConstants.push_back(sym);
    }

    void property(const owl::Iri& iri) {
        if (iri == owl::vocab::owlTopObjectProperty) bg.usesTopObjectProperty = true;
        if (iri == owl::vocab::owlBottomObjectProperty) bg.usesBottomObjectProperty = true;
    }

    void literal(const owl::Literal& lit) {
        bg.usesDataDomain = true;
        literalSet.insert(lit);
    }

    void dataRange(const owl::DataRange& r) {
        bg.usesDataDomain = true;
        if (r.kind == owl::DataRange::Kind::Named)
            bg.datatypePredicates.insert(entity_symbol(r.datatype));
        for (const owl::Literal& lit : r.literals) literal(lit);
    }

    void classExpr(const owl::ClassExpression& ce) {
        using K = owl::ClassExpression::Kind;
        switch (ce.kind) {
        case K::DataSomeValuesFrom:
        case K::DataAllValuesFrom:
            property(ce.iri);
            bg.usesDataDomain = true;
            dataRange(ce.range);
            break;
        case K::DataHasValue:
            property(ce.iri);
            literal(ce.literal);
            break;
        case K::NamedClass:
            break;
        default:
            property(ce.iri); // harmless when empty
            break;
        }
        for (const owl::Iri& i : ce.individuals) individual(i);
        for (const owl::ClassExpression& sub : ce.subs) classExpr(sub);
    }

    void axiom(const owl::OwlAxiom& ax) {
        using K = owl::OwlAxiom::Kind;
        if (ax.kind == K::Declaration || ax.kind == K::AnnotationAssertion) return;
        for (const owl::ClassExpression& ce : ax.classes) classExpr(ce);
        for (const owl::Iri& p : ax.properties) property(p);
        for (const owl::Iri& i : ax.individuals) individual(i);
        switch (ax.kind) {
        case K::SubDataPropertyOf:
        case K::DataPropertyDomain:
        case K::FunctionalDataProperty:
            bg.usesDataDomain = true;
            break;
        case K::DataPropertyRange:
            dataRange(ax.range);
            break;
        case K::DataPropertyAssertion:
            literal(ax.literal);
            break;
        default:
            break;
        }
    }
};

} // namespace translate_detail

// Translate the document's logical axioms and append the background theory.
// Unit names: ax_<n>_<axiomKind> with n counting translated formulas.
inline fol::TptpProblem translate_ontology(const owl::OntologyDocument& doc) {
    translate_detail::DocScan scan;
    for (const owl::OwlAxiom& ax : doc.axioms) scan.axiom(ax);

    LiteralNames names = name_literals(scan.literalSet);
    for (const auto& [lit, name] : names) scan.bg.literals.emplace_back(lit, name);

    fol::TptpProblem problem;
    std::size_t n = 0;
    for (const owl::OwlAxiom& ax : doc.axioms) {
        TranslationContext ctx;
        ctx.literalNames = &names;
        for (fol::Formula& f : translate_axiom(ax, ctx))
            problem.units.push_back(fol::TptpUnit{
                "ax_" + std::to_string(n++) + "_" + owl::axiom_kind_name(ax.kind),
                fol::Role::Axiom, std::move(f)});
    }
    for (fol::TptpUnit& u : background_theory(scan.bg)) problem.units.push_back(std::move(u));
    return problem;
}

} // namespace owlfol
