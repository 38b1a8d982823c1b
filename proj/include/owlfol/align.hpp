// Copyright (c) the owlfol contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Signature alignment. FOL annotations name things like "proper_part_of"
// while the surrounding ontology knows the entity as BFO_0000175 with label
// "proper part of"; this module matches the two by normalized edit distance
// and rewrites formulas onto one signature, either full IRIs or readable
// names derived from labels.

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "owlfol/fol/ast.hpp"
#include "owlfol/fol/tptp.hpp"
#include "owlfol/owl/model.hpp"
#include "owlfol/owl/ontology.hpp"

namespace owlfol::align {

// Lowercase; underscores, hyphens, and whitespace runs collapse to a single
// space; surrounding quotes stripped.
inline std::string normalize(const std::string& name) {
    std::size_t begin = 0, end = name.size();
    while (begin < end && (name[begin] == '\'' || name[begin] == '"')) ++begin;
    while (end > begin && (name[end - 1] == '\'' || name[end - 1] == '"')) --end;
    std::string out;
    bool pendingSpace = false;
    for (std::size_t i = begin; i < end; ++i) {
        char c = name[i];
        if (c == '_' || c == '-' || std::isspace(static_cast<unsigned char>(c))) {
            pendingSpace = true;
            continue;
        }
        if (pendingSpace && !out.empty()) out.push_back(' ');
        pendingSpace = false;
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

inline int levenshtein(const std::string& a, const std::string& b) {
    const std::size_t n = a.size(), m = b.size();
    std::vector<int> row(m + 1);
    for (std::size_t j = 0; j <= m; ++j) row[j] = static_cast<int>(j);
    for (std::size_t i = 1; i <= n; ++i) {
        int diag = row[0];
        row[0] = static_cast<int>(i);
        for (std::size_t j = 1; j <= m; ++j) {
            int sub = diag + (a[i - 1] == b[j - 1] ? 0 : 1);
            diag = row[j];
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, sub});
        }
    }
    return row[m];
}

enum class MatchKind { Label, IriSuffix, None };

struct MatchEntry {
    MatchKind kind = MatchKind::None;
    owl::Entity entity;
    int distance = -1;
};

struct SignatureMap {
    std::map<std::string, MatchEntry> entries;      // FOL symbol name -> match
    std::map<owl::Entity, std::string> reverse;     // entity -> readable name
    std::map<owl::Iri, std::string> readableByIri;  // convenience index

    const MatchEntry* match(const std::string& symbol) const {
        auto it = entries.find(symbol);
        if (it == entries.end() || it->second.kind == MatchKind::None) return nullptr;
        return &it->second;
    }
};

namespace detail {

inline bool compatible(fol::SymbolKind kind, std::size_t arity, owl::EntityKind entity) {
    using E = owl::EntityKind;
    switch (kind) {
    case fol::SymbolKind::Predicate:
        if (arity == 1) return entity == E::Class || entity == E::Datatype;
        if (arity == 2) return entity == E::ObjectProperty || entity == E::DataProperty;
        return false;
    case fol::SymbolKind::Constant:
        return entity == E::NamedIndividual;
    case fol::SymbolKind::Function:
        return false;
    }
    return false;
}

// Best candidate for one (kind, arity) profile of a symbol name, or None.
inline MatchEntry bestFor(const std::string& normalized, fol::SymbolKind kind,
                          std::size_t arity,
                          const std::vector<owl::SignatureEntry>& signature) {
    const int threshold = std::max<int>(
        1, static_cast<int>(std::ceil(0.2 * static_cast<double>(normalized.size()))));
    MatchEntry best;
    auto consider = [&](int d, MatchKind mk, const owl::Entity& e) {
        if (d > threshold) return;
        if (best.kind == MatchKind::None || d < best.distance ||
            (d == best.distance &&
             (static_cast<int>(mk) < static_cast<int>(best.kind) ||
              (mk == best.kind && e.iri < best.entity.iri)))) {
            best = MatchEntry{mk, e, d};
        }
    };
    for (const owl::SignatureEntry& entry : signature) {
        if (!compatible(kind, arity, entry.entity.kind)) continue;
        for (const std::string& label : entry.labels)
            consider(levenshtein(normalized, normalize(label)), MatchKind::Label,
                     entry.entity);
        consider(levenshtein(normalized, normalize(owl::iri_local_name(entry.entity.iri))),
                 MatchKind::IriSuffix, entry.entity);
    }
    return best;
}

} // namespace detail

// Readable names: first rdfs:label else IRI local name, mangled; collisions
// resolved by numeric suffixes in IRI order so input permutations cannot
// change the result.
inline void build_readable_names(const std::vector<owl::SignatureEntry>& signature,
                                 SignatureMap& map) {
    std::vector<const owl::SignatureEntry*> ordered;
    for (const owl::SignatureEntry& e : signature) ordered.push_back(&e);
    std::sort(ordered.begin(), ordered.end(),
              [](const owl::SignatureEntry* a, const owl::SignatureEntry* b) {
                  return a->entity < b->entity;
              });
    std::set<std::string> taken{"thing", "nothing", "top_op", "bottom_op", "iobj", "idata"};
    for (const owl::SignatureEntry* e : ordered) {
        if (map.reverse.count(e->entity)) continue;
        std::string base = e->labels.empty() ? owl::iri_local_name(e->entity.iri)
                                             : e->labels.front();
        base = fol::mangle_symbol(base);
        std::string name = base;
        int n = 2;
        while (!taken.insert(name).second) name = base + "_" + std::to_string(n++);
        map.reverse[e->entity] = name;
        map.readableByIri.emplace(e->entity.iri, name);
    }
}

inline SignatureMap build_signature_map(const std::set<fol::Symbol>& folSymbols,
                                        const std::vector<owl::SignatureEntry>& signature) {
    SignatureMap map;

    // A name can occur with several (kind, arity) profiles; the map is keyed
    // by name, so the profiles' verdicts are merged: matches that agree (or a
    // single match among several None) win, disagreement means no match.
    std::map<std::string, std::vector<const fol::Symbol*>> byName;
    for (const fol::Symbol& s : folSymbols) byName[s.name].push_back(&s);

    for (auto& [name, profiles] : byName) {
        std::string normalized = normalize(name);
        MatchEntry chosen;
        bool conflict = false;
        for (const fol::Symbol* s : profiles) {
            MatchEntry m = detail::bestFor(normalized, s->kind, s->arity, signature);
            if (m.kind == MatchKind::None) continue;
            if (chosen.kind == MatchKind::None)
                chosen = m;
            else if (!(chosen.entity == m.entity))
                conflict = true;
        }
        map.entries[name] = conflict ? MatchEntry{} : chosen;
    }

    build_readable_names(signature, map);
    return map;
}

enum class RewriteTarget { Iri, Readable };

// Replace matched symbols with the entity IRI (angle-bracketed, like the OWL
// translation) or the readable name. Symbols already in <iri> form are
// resolved through the readable index so one pass handles both the
// annotation side and the translated-OWL side.
inline fol::Formula rewrite_formula(const fol::Formula& f, const SignatureMap& map,
                                    RewriteTarget target) {
    return fol::map_symbols(f, [&](fol::SymbolKind, const std::string& name,
                                   std::size_t) -> std::string {
        if (name.size() > 2 && name.front() == '<' && name.back() == '>') {
            if (target == RewriteTarget::Readable) {
                auto it = map.readableByIri.find(name.substr(1, name.size() - 2));
                if (it != map.readableByIri.end()) return it->second;
            }
            return name;
        }
        const MatchEntry* m = map.match(name);
        if (!m) return name;
        if (target == RewriteTarget::Iri) return "<" + m->entity.iri + ">";
        auto it = map.reverse.find(m->entity);
        return it == map.reverse.end() ? name : it->second;
    });
}

inline std::string format_alignment_report(const SignatureMap& map) {
    std::size_t width = 6;
    for (const auto& [name, entry] : map.entries) width = std::max(width, name.size());
    std::string out;
    for (const auto& [name, entry] : map.entries) {
        out += name;
        out.append(width - name.size() + 2, ' ');
        if (entry.kind == MatchKind::None) {
            out += "(unmatched)\n";
            continue;
        }
        out += "<" + entry.entity.iri + ">  distance=" + std::to_string(entry.distance);
        out += entry.kind == MatchKind::Label ? "  via=label" : "  via=iri-suffix";
        out += "\n";
    }
    return out;
}

} // namespace owlfol::align
