// Copyright (c) the owlfol contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// TPTP FOF reader and writer. Covers the formula fragment used for ontology
// annotations plus full fof(...) unit files. Connective precedence follows
// the TPTP standard: & and | chain with themselves, every other binary
// connective is non-associative, quantifier and negation bodies are unit
// formulas. Quantifier variable lists are accepted both with and without
// the colon separator ("![X]:" and "![X]"), since published axioms appear
// in both forms.

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "owlfol/error.hpp"
#include "owlfol/fol/ast.hpp"

namespace owlfol::fol {

// -------------------------------------------------------------------------
// Lexer

namespace tptp_detail {

enum class Tok {
    LParen, RParen, LBracket, RBracket, Comma, Colon, Dot,
    Amp, VLine, Implies, Iff, RImplies, Xor, Nand, Nor,
    Not, Bang, Question, Eq, Neq,
    LowerWord, UpperWord, Quoted, DollarWord,
    End,
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
        throw ParseError("tptp: " + msg, tok_.line, tok_.col);
    }

private:
    void advance() {
        skipSpace();
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= src_.size()) {
            tok_ = Token{Tok::End, "", line_, col_};
            return;
        }
        char c = src_[pos_];
        switch (c) {
        case '(': single(Tok::LParen); return;
        case ')': single(Tok::RParen); return;
        case '[': single(Tok::LBracket); return;
        case ']': single(Tok::RBracket); return;
        case ',': single(Tok::Comma); return;
        case ':': single(Tok::Colon); return;
        case '.': single(Tok::Dot); return;
        case '&': single(Tok::Amp); return;
        case '|': single(Tok::VLine); return;
        case '=': {
            if (lookahead(1) == '>') { take(2, Tok::Implies, "=>"); return; }
            single(Tok::Eq);
            return;
        }
        case '!': {
            if (lookahead(1) == '=') { take(2, Tok::Neq, "!="); return; }
            single(Tok::Bang);
            return;
        }
        case '?': single(Tok::Question); return;
        case '~': {
            if (lookahead(1) == '&') { take(2, Tok::Nand, "~&"); return; }
            if (lookahead(1) == '|') { take(2, Tok::Nor, "~|"); return; }
            single(Tok::Not);
            return;
        }
        case '<': {
            if (lookahead(1) == '=' && lookahead(2) == '>') { take(3, Tok::Iff, "<=>"); return; }
            if (lookahead(1) == '~' && lookahead(2) == '>') { take(3, Tok::Xor, "<~>"); return; }
            if (lookahead(1) == '=') { take(2, Tok::RImplies, "<="); return; }
            throw ParseError("tptp: stray '<'", line_, col_);
        }
        case '\'': { quoted(); return; }
        case '$': { dollarWord(); return; }
        default: break;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            word();
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("tptp: numeric tokens are not supported", line_, col_);
        throw ParseError(std::string("tptp: unexpected character '") + c + "'", line_, col_);
    }

    void skipSpace() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '%') { // line comment
                while (pos_ < src_.size() && src_[pos_] != '\n') bump();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                bump();
            } else {
                break;
            }
        }
    }

    char lookahead(std::size_t n) const {
        return pos_ + n < src_.size() ? src_[pos_ + n] : '\0';
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

    void take(std::size_t n, Tok k, const char* text) {
        tok_ = Token{k, text, line_, col_};
        for (std::size_t i = 0; i < n; ++i) bump();
    }

    void word() {
        std::size_t l = line_, c = col_;
        std::string w;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
            w.push_back(src_[pos_]);
            bump();
        }
        bool upper = std::isupper(static_cast<unsigned char>(w[0])) || w[0] == '_';
        tok_ = Token{upper ? Tok::UpperWord : Tok::LowerWord, std::move(w), l, c};
    }

    void quoted() {
        std::size_t l = line_, c = col_;
        bump(); // opening quote
        std::string w;
        while (true) {
            if (pos_ >= src_.size())
                throw ParseError("tptp: unterminated quoted symbol", l, c);
            char ch = src_[pos_];
            if (ch == '\\') {
                char nxt = lookahead(1);
                if (nxt != '\'' && nxt != '\\')
                    throw ParseError("tptp: bad escape in quoted symbol", line_, col_);
                w.push_back(nxt);
                bump();
                bump();
            } else if (ch == '\'') {
                bump();
                break;
            } else {
                w.push_back(ch);
                bump();
            }
        }
        if (w.empty()) throw ParseError("tptp: empty quoted symbol", l, c);
        tok_ = Token{Tok::Quoted, std::move(w), l, c};
    }

    void dollarWord() {
        std::size_t l = line_, c = col_;
        std::string w;
        w.push_back(src_[pos_]);
        bump();
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
            w.push_back(src_[pos_]);
            bump();
        }
        tok_ = Token{Tok::DollarWord, std::move(w), l, c};
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1, col_ = 1;
    Token tok_{};
};

// -------------------------------------------------------------------------
// Parser

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) {}

    Formula parseFormulaOnly() {
        Formula f = logicFormula();
        expect(Tok::End, "end of input");
        return f;
    }

    TptpProblem parseFile() {
        TptpProblem problem;
        std::map<std::string, bool> names;
        while (lex_.peek().kind != Tok::End) {
            Token kw = lex_.next();
            if (kw.kind != Tok::LowerWord || kw.text != "fof")
                throw ParseError("tptp: expected 'fof' unit", kw.line, kw.col);
            expect(Tok::LParen, "'('");
            std::string name = unitName();
            expect(Tok::Comma, "','");
            Token roleTok = lex_.next();
            if (roleTok.kind != Tok::LowerWord)
                throw ParseError("tptp: expected unit role", roleTok.line, roleTok.col);
            Role role;
            if (roleTok.text == "axiom") role = Role::Axiom;
            else if (roleTok.text == "conjecture") role = Role::Conjecture;
            else
                throw ParseError("tptp: unsupported role '" + roleTok.text + "'",
                                 roleTok.line, roleTok.col);
            expect(Tok::Comma, "','");
            Formula f = logicFormula();
            expect(Tok::RParen, "')'");
            expect(Tok::Dot, "'.'");
            if (!names.emplace(name, true).second)
                throw ParseError("tptp: duplicate unit name '" + name + "'", kw.line, kw.col);
            // TPTP reads free unit variables as implicitly universal.
            problem.units.push_back(TptpUnit{name, role, universal_closure(std::move(f))});
        }
        return problem;
    }

private:
    void expect(Tok k, const char* what) {
        if (lex_.peek().kind != k) lex_.fail(std::string("expected ") + what);
        if (k != Tok::End) lex_.next();
    }

    std::string unitName() {
        Token t = lex_.next();
        if (t.kind != Tok::LowerWord && t.kind != Tok::Quoted)
            throw ParseError("tptp: expected unit name", t.line, t.col);
        return t.text;
    }

    static bool isBinary(Tok k) {
        switch (k) {
        case Tok::Amp: case Tok::VLine: case Tok::Implies: case Tok::Iff:
        case Tok::RImplies: case Tok::Xor: case Tok::Nand: case Tok::Nor:
            return true;
        default:
            return false;
        }
    }

    Formula logicFormula() {
        Formula left = unitFormula();
        Tok op = lex_.peek().kind;
        if (!isBinary(op)) return left;

        if (op == Tok::Amp || op == Tok::VLine) {
            std::vector<Formula> parts;
            parts.push_back(std::move(left));
            while (lex_.peek().kind == op) {
                lex_.next();
                parts.push_back(unitFormula());
            }
            if (isBinary(lex_.peek().kind))
                lex_.fail("mixed binary connectives need parentheses");
            return op == Tok::Amp ? conj(std::move(parts)) : disj(std::move(parts));
        }

        lex_.next();
        Formula right = unitFormula();
        if (isBinary(lex_.peek().kind))
            lex_.fail("non-associative connective used without parentheses");
        switch (op) {
        case Tok::Implies: return implies(std::move(left), std::move(right));
        case Tok::Iff: return iff(std::move(left), std::move(right));
        case Tok::RImplies: return implies(std::move(right), std::move(left));
        case Tok::Xor: return neg(iff(std::move(left), std::move(right)));
        case Tok::Nand: return neg(conj({std::move(left), std::move(right)}));
        case Tok::Nor: return neg(disj({std::move(left), std::move(right)}));
        default: lex_.fail("bad connective");
        }
    }

    Formula unitFormula() {
        const Token& t = lex_.peek();
        switch (t.kind) {
        case Tok::Bang:
        case Tok::Question: {
            bool universal = t.kind == Tok::Bang;
            lex_.next();
            std::vector<std::string> vars = variableList();
            if (lex_.peek().kind == Tok::Colon) lex_.next(); // optional separator
            Formula body = unitFormula();
            return universal ? forall(std::move(vars), std::move(body))
                             : exists(std::move(vars), std::move(body));
        }
        case Tok::Not:
            lex_.next();
            return neg(unitFormula());
        case Tok::LParen: {
            lex_.next();
            Formula f = logicFormula();
            expect(Tok::RParen, "')'");
            return f;
        }
        case Tok::DollarWord: {
            Token d = lex_.next();
            if (d.text == "$true") return truth();
            if (d.text == "$false") return falsity();
            throw ParseError("tptp: unsupported defined word '" + d.text + "'", d.line, d.col);
        }
        case Tok::LowerWord:
        case Tok::Quoted:
        case Tok::UpperWord:
            return atomOrEquality();
        default:
            lex_.fail("expected formula");
        }
    }

    std::vector<std::string> variableList() {
        expect(Tok::LBracket, "'['");
        std::vector<std::string> vars;
        while (true) {
            Token v = lex_.next();
            if (v.kind != Tok::UpperWord)
                throw ParseError("tptp: expected variable", v.line, v.col);
            for (const std::string& seen : vars)
                if (seen == v.text)
                    throw ParseError("tptp: duplicate variable '" + v.text + "' in quantifier",
                                     v.line, v.col);
            vars.push_back(v.text);
            if (lex_.peek().kind == Tok::Comma) {
                lex_.next();
                continue;
            }
            break;
        }
        expect(Tok::RBracket, "']'");
        return vars;
    }

    Formula atomOrEquality() {
        Token head = lex_.peek();
        Term t = term();
        if (lex_.peek().kind == Tok::Eq) {
            lex_.next();
            return eq(std::move(t), term());
        }
        if (lex_.peek().kind == Tok::Neq) {
            lex_.next();
            return neq(std::move(t), term());
        }
        if (t.kind == Term::Kind::Variable)
            throw ParseError("tptp: variable cannot stand as a formula", head.line, head.col);
        return pred(std::move(t.name), std::move(t.args));
    }

    Term term() {
        Token t = lex_.next();
        if (t.kind == Tok::UpperWord) return var(t.text);
        if (t.kind != Tok::LowerWord && t.kind != Tok::Quoted)
            throw ParseError("tptp: expected term", t.line, t.col);
        if (lex_.peek().kind != Tok::LParen) return cst(t.text);
        lex_.next();
        std::vector<Term> args;
        while (true) {
            args.push_back(term());
            if (lex_.peek().kind == Tok::Comma) {
                lex_.next();
                continue;
            }
            break;
        }
        expect(Tok::RParen, "')'");
        return fun(t.text, std::move(args));
    }

    Lexer lex_;
};

} // namespace tptp_detail

// Parse a bare FOF formula (the ontology-annotation fragment).
inline Formula parse_tptp_formula(const std::string& text) {
    return tptp_detail::Parser(text).parseFormulaOnly();
}

// Parse a file of fof(name, role, formula). units. '%' comments are skipped.
inline TptpProblem parse_tptp_file(const std::string& text) {
    return tptp_detail::Parser(text).parseFile();
}

// -------------------------------------------------------------------------
// Emitter

enum class SymbolStyle {
    Quoted,  // symbols that are not lower words get single quotes
    Mangled, // symbols are rewritten into plain lower words
};

namespace tptp_detail {

inline bool isLowerWord(const std::string& s) {
    if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

inline std::string quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('\'');
    return out;
}

} // namespace tptp_detail

// Rewrite an arbitrary symbol into a TPTP lower word: lowercase the first
// letter, replace anything outside [a-zA-Z0-9_] with '_', and prefix "s_"
// when the result starts with a digit.
inline std::string mangle_symbol(const std::string& name) {
    std::string out;
    out.reserve(name.size());
    for (char c : name) {
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') out.push_back(c);
        else out.push_back('_');
    }
    if (out.empty()) out = "sym";
    if (std::isdigit(static_cast<unsigned char>(out[0]))) out = "s_" + out;
    if (std::isupper(static_cast<unsigned char>(out[0])))
        out[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(out[0])));
    if (!std::isalpha(static_cast<unsigned char>(out[0]))) out = "s" + out;
    return out;
}

namespace tptp_detail {

// Mangling table for a whole problem: first-seen order, collisions get
// numeric suffixes. Symbol namespaces (predicate vs function/constant) are
// mangled through one shared table so distinct symbols never merge.
class MangleTable {
public:
    std::string get(SymbolKind kind, const std::string& name) {
        int space = kind == SymbolKind::Predicate ? 0 : 1;
        auto it = table_.find({space, name});
        if (it != table_.end()) return it->second;
        std::string base = mangle_symbol(name);
        std::string candidate = base;
        int n = 2;
        while (taken_.count(candidate)) candidate = base + "_" + std::to_string(n++);
        taken_.insert(candidate);
        table_.emplace(std::pair<int, std::string>{space, name}, candidate);
        return candidate;
    }

private:
    std::map<std::pair<int, std::string>, std::string> table_;
    std::set<std::string> taken_;
};

class Emitter {
public:
    Emitter(SymbolStyle style, MangleTable* mangle) : style_(style), mangle_(mangle) {}

    std::string symbol(SymbolKind kind, const std::string& name) const {
        if (style_ == SymbolStyle::Mangled) return mangle_->get(kind, name);
        return isLowerWord(name) ? name : quote(name);
    }

    void term(const Term& t, std::string& out) const {
        if (t.kind == Term::Kind::Variable) {
            out += t.name;
            return;
        }
        out += symbol(t.kind == Term::Kind::Constant ? SymbolKind::Constant
                                                     : SymbolKind::Function,
                      t.name);
        if (!t.args.empty()) {
            out.push_back('(');
            for (std::size_t i = 0; i < t.args.size(); ++i) {
                if (i) out.push_back(',');
                term(t.args[i], out);
            }
            out.push_back(')');
        }
    }

    // Emit as a unit formula: binary connectives get parentheses.
    void unit(const Formula& f, std::string& out) const {
        switch (f.kind) {
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
        case Formula::Kind::Iff:
            out.push_back('(');
            logic(f, out);
            out.push_back(')');
            return;
        default:
            logic(f, out);
            return;
        }
    }

    void logic(const Formula& f, std::string& out) const {
        switch (f.kind) {
        case Formula::Kind::True:
            out += "$true";
            return;
        case Formula::Kind::False:
            out += "$false";
            return;
        case Formula::Kind::Predicate:
            out += symbol(SymbolKind::Predicate, f.name);
            if (!f.terms.empty()) {
                out.push_back('(');
                for (std::size_t i = 0; i < f.terms.size(); ++i) {
                    if (i) out.push_back(',');
                    term(f.terms[i], out);
                }
                out.push_back(')');
            }
            return;
        case Formula::Kind::Equality:
            term(f.terms[0], out);
            out += " = ";
            term(f.terms[1], out);
            return;
        case Formula::Kind::Not:
            if (f.subs.front().kind == Formula::Kind::Equality) {
                const Formula& e = f.subs.front();
                term(e.terms[0], out);
                out += " != ";
                term(e.terms[1], out);
                return;
            }
            out += "~ ";
            unit(f.subs.front(), out);
            return;
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            const char* op = f.kind == Formula::Kind::And ? " & " : " | ";
            for (std::size_t i = 0; i < f.subs.size(); ++i) {
                if (i) out += op;
                unit(f.subs[i], out);
            }
            return;
        }
        case Formula::Kind::Implies:
        case Formula::Kind::Iff:
            unit(f.subs[0], out);
            out += f.kind == Formula::Kind::Implies ? " => " : " <=> ";
            unit(f.subs[1], out);
            return;
        case Formula::Kind::Forall:
        case Formula::Kind::Exists:
            out += f.kind == Formula::Kind::Forall ? "! [" : "? [";
            for (std::size_t i = 0; i < f.vars.size(); ++i) {
                if (i) out.push_back(',');
                out += f.vars[i];
            }
            out += "] : ";
            unit(f.subs.front(), out);
            return;
        }
    }

private:
    SymbolStyle style_;
    MangleTable* mangle_;
};

} // namespace tptp_detail

// Serialize one formula. Used by tests and for annotation-level output; the
// mangled style shares no state across calls, so within-formula collisions
// still resolve deterministically.
inline std::string emit_tptp_formula(const Formula& f, SymbolStyle style = SymbolStyle::Quoted) {
    tptp_detail::MangleTable table;
    tptp_detail::Emitter em(style, &table);
    std::string out;
    em.logic(f, out);
    return out;
}

// Serialize a whole problem. Every formula must be closed; unit names must
// stay unique (after mangling, in mangled style). The output always starts
// with a header comment and ends with a trailing newline.
inline std::string emit_tptp(const TptpProblem& problem, SymbolStyle style = SymbolStyle::Quoted) {
    tptp_detail::MangleTable symbols;
    tptp_detail::MangleTable unitNames;
    tptp_detail::Emitter em(style, &symbols);

    std::string out = "% generated by owlfol\n";
    std::set<std::string> seenNames;
    for (const TptpUnit& u : problem.units) {
        if (!is_closed(u.formula))
            throw Error("emit_tptp: unit '" + u.name + "' has free variables");
        std::string err = validate(u.formula);
        if (!err.empty())
            throw Error("emit_tptp: unit '" + u.name + "': " + err);
        std::string name = u.name;
        if (style == SymbolStyle::Mangled) name = mangle_symbol(name);
        else if (!tptp_detail::isLowerWord(name)) name = tptp_detail::quote(name);
        if (!seenNames.insert(name).second)
            throw Error("emit_tptp: unit name collision on '" + name + "'");
        out += "fof(";
        out += name;
        out += u.role == Role::Axiom ? ", axiom, " : ", conjecture, ";
        em.logic(u.formula, out);
        out += ").\n";
    }
    return out;
}

} // namespace owlfol::fol
