// Copyright (c) the owlfol contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Reader for the first-order fragment of Common Logic interchange format.
// Accepted sentence forms: and, or, not, if, iff, forall, exists, =, and
// atomic sentences. Names may be bare, double-quoted or single-quoted;
// quoted names keep their inner spaces. (cl:comment ...) forms are skipped,
// a trailing sentence inside one is kept. Sequence markers and other
// constructs outside plain first-order logic are rejected with an error.
//
// Name roles are resolved by position: a name heading a sentence is a
// predicate, a name heading a nested term is a function, anything else is a
// quantified variable (when bound) or a constant. Variables are renamed to
// TPTP shape (uppercase first letter) on the way in.

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "owlfol/error.hpp"
#include "owlfol/fol/ast.hpp"

namespace owlfol::fol {

namespace clif_detail {

struct SExpr {
    bool atom = false;
    std::string text;            // atom payload
    bool quotedAtom = false;     // came from a quoted name
    std::vector<SExpr> items;    // list payload
    std::size_t line = 0, col = 0;
};

class Reader {
public:
    explicit Reader(const std::string& src) : src_(src) {}

    std::vector<SExpr> readAll() {
        std::vector<SExpr> out;
        skipSpace();
        while (pos_ < src_.size()) {
            out.push_back(read());
            skipSpace();
        }
        return out;
    }

private:
    SExpr read() {
        skipSpace();
        if (pos_ >= src_.size()) throw ParseError("clif: unexpected end of input", line_, col_);
        char c = src_[pos_];
        if (c == '(') {
            SExpr list;
            list.line = line_;
            list.col = col_;
            bump();
            skipSpace();
            while (true) {
                if (pos_ >= src_.size())
                    throw ParseError("clif: unterminated list", list.line, list.col);
                if (src_[pos_] == ')') {
                    bump();
                    return list;
                }
                list.items.push_back(read());
                skipSpace();
            }
        }
        if (c == ')') throw ParseError("clif: unexpected ')'", line_, col_);
        if (c == '"' || c == '\'') return quotedName(c);
        return bareName();
    }

    SExpr quotedName(char delim) {
        SExpr atom;
        atom.atom = true;
        atom.quotedAtom = true;
        atom.line = line_;
        atom.col = col_;
        bump();
        while (true) {
            if (pos_ >= src_.size())
                throw ParseError("clif: unterminated quoted name", atom.line, atom.col);
            char c = src_[pos_];
            if (c == '\\') {
                if (pos_ + 1 >= src_.size())
                    throw ParseError("clif: dangling escape", line_, col_);
                atom.text.push_back(src_[pos_ + 1]);
                bump();
                bump();
            } else if (c == delim) {
                bump();
                return atom;
            } else {
                atom.text.push_back(c);
                bump();
            }
        }
    }

    SExpr bareName() {
        SExpr atom;
        atom.atom = true;
        atom.line = line_;
        atom.col = col_;
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' ||
                c == '"' || c == '\'')
                break;
            atom.text.push_back(c);
            bump();
        }
        if (atom.text.rfind("...", 0) == 0)
            throw ParseError("clif: sequence markers are beyond the FOL fragment",
                             atom.line, atom.col);
        return atom;
    }

    void skipSpace() {
        while (pos_ < src_.size() &&
               std::isspace(static_cast<unsigned char>(src_[pos_])))
            bump();
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

    const std::string& src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1, col_ = 1;
};

class Translator {
public:
    std::vector<Formula> run(const std::vector<SExpr>& forms) {
        std::vector<Formula> out;
        for (const SExpr& form : forms) {
            if (isComment(form)) {
                // (cl:comment "text") is dropped; (cl:comment "text" phrase)
                // keeps the annotated phrase.
                if (form.items.size() >= 3) out.push_back(sentence(form.items[2]));
                continue;
            }
            out.push_back(sentence(form));
        }
        return out;
    }

private:
    static bool isComment(const SExpr& s) {
        return !s.atom && !s.items.empty() && s.items.front().atom &&
               !s.items.front().quotedAtom && s.items.front().text == "cl:comment";
    }

    [[noreturn]] static void fail(const SExpr& at, const std::string& msg) {
        throw ParseError("clif: " + msg, at.line, at.col);
    }

    Formula sentence(const SExpr& s) {
        if (s.atom) {
            // Lenient reading of a bare name in sentence position: a
            // propositional (0-ary) predicate.
            return predicate(s, {});
        }
        if (s.items.empty()) fail(s, "empty sentence");
        const SExpr& head = s.items.front();
        std::size_t n = s.items.size() - 1;
        if (head.atom && !head.quotedAtom) {
            const std::string& op = head.text;
            if (op == "and" || op == "or") {
                std::vector<Formula> parts;
                for (std::size_t i = 1; i < s.items.size(); ++i)
                    parts.push_back(sentence(s.items[i]));
                return op == "and" ? conj(std::move(parts)) : disj(std::move(parts));
            }
            if (op == "not") {
                if (n != 1) fail(s, "'not' takes one sentence");
                return neg(sentence(s.items[1]));
            }
            if (op == "if") {
                if (n != 2) fail(s, "'if' takes two sentences");
                Formula a = sentence(s.items[1]);
                return implies(std::move(a), sentence(s.items[2]));
            }
            if (op == "iff") {
                if (n != 2) fail(s, "'iff' takes two sentences");
                Formula a = sentence(s.items[1]);
                return iff(std::move(a), sentence(s.items[2]));
            }
            if (op == "forall" || op == "exists") return quantified(s, op == "forall");
            if (op == "=") {
                if (n != 2) fail(s, "'=' takes two terms");
                Term lhs = term(s.items[1]);
                return eq(std::move(lhs), term(s.items[2]));
            }
            if (op == "cl:comment") {
                if (s.items.size() >= 3) return sentence(s.items[2]);
                fail(s, "comment in sentence position");
            }
        }
        if (!head.atom) fail(head, "sentence head must be a name");
        // Atomic sentence: head names the predicate.
        std::vector<SExpr> args(s.items.begin() + 1, s.items.end());
        return predicate(head, args);
    }

    Formula quantified(const SExpr& s, bool universal) {
        if (s.items.size() != 3) fail(s, "quantifier takes a variable list and one body");
        const SExpr& varList = s.items[1];
        if (varList.atom) fail(varList, "quantifier variable list must be a list");
        if (varList.items.empty()) fail(varList, "empty quantifier variable list");
        std::vector<std::string> folVars;
        std::vector<std::pair<std::string, std::string>> introduced;
        for (const SExpr& v : varList.items) {
            if (!v.atom) fail(v, "typed quantification is beyond the FOL fragment");
            std::string chosen = folVariable(v.text);
            scope_.emplace_back(v.text, chosen);
            introduced.emplace_back(v.text, chosen);
            folVars.push_back(std::move(chosen));
        }
        Formula body = sentence(s.items[2]);
        scope_.resize(scope_.size() - introduced.size());
        return universal ? forall(std::move(folVars), std::move(body))
                         : exists(std::move(folVars), std::move(body));
    }

    // Map a CLIF variable name to TPTP variable shape, avoiding clashes with
    // names already active in scope.
    std::string folVariable(const std::string& name) {
        std::string base = name;
        if (!base.empty() && std::isalpha(static_cast<unsigned char>(base[0])))
            base[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(base[0])));
        else
            base = "V_" + base;
        std::string candidate = base;
        int n = 2;
        while (activeFol(candidate)) candidate = base + "_" + std::to_string(n++);
        return candidate;
    }

    bool activeFol(const std::string& name) const {
        for (const auto& [orig, fol] : scope_)
            if (fol == name) return true;
        return false;
    }

    const std::string* lookup(const std::string& name) const {
        for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
            if (it->first == name) return &it->second;
        return nullptr;
    }

    Formula predicate(const SExpr& head, const std::vector<SExpr>& args) {
        if (lookup(head.text) && !head.quotedAtom)
            fail(head, "bound variable used as a predicate");
        std::vector<Term> terms;
        terms.reserve(args.size());
        for (const SExpr& a : args) terms.push_back(term(a));
        std::size_t arity = terms.size();
        auto [it, inserted] = predArity_.emplace(head.text, arity);
        if (!inserted && it->second != arity)
            fail(head, "predicate '" + head.text + "' used with conflicting arities");
        return pred(head.text, std::move(terms));
    }

    Term term(const SExpr& s) {
        if (s.atom) {
            if (!s.quotedAtom)
                if (const std::string* fol = lookup(s.text)) return var(*fol);
            return cst(s.text);
        }
        if (s.items.empty()) fail(s, "empty term");
        const SExpr& head = s.items.front();
        if (!head.atom) fail(head, "function position must hold a name");
        if (lookup(head.text) && !head.quotedAtom)
            fail(head, "bound variable used as a function");
        std::vector<Term> args;
        for (std::size_t i = 1; i < s.items.size(); ++i) args.push_back(term(s.items[i]));
        if (args.empty()) fail(s, "function application without arguments");
        return fun(head.text, std::move(args));
    }

    std::vector<std::pair<std::string, std::string>> scope_;
    std::map<std::string, std::size_t> predArity_;
};

} // namespace clif_detail

// Parse a string of CLIF sentences into formulas, one per top-level
// sentence. Throws ParseError on anything outside the FOL fragment.
inline std::vector<Formula> parse_clif(const std::string& text) {
    clif_detail::Reader reader(text);
    return clif_detail::Translator().run(reader.readAll());
}

} // namespace owlfol::fol
