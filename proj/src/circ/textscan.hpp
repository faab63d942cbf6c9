#ifndef CIRC_TEXTSCAN_HPP
#define CIRC_TEXTSCAN_HPP

// Internal tokenizer and concept-expression parser shared by the KB and
// counting-formula readers. Not installed.

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "circ/ast.hpp"
#include "circ/parser.hpp"

namespace circ::detail {

enum class Tok { Name, Int, Keyword, Punct, End };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

inline bool is_keyword(const std::string& s) {
    static const char* kw[] = {"tbox", "abox", "circ", "minimize", "fix",     "vary",   "prefer",
                               "not",  "and",  "or",   "some",     "all",     "atleast", "atmost",
                               "top",  "bot",  "inv",  "univ",     "card"};
    for (const char* k : kw)
        if (s == k) return true;
    return false;
}

struct Lexer {
    const std::string& src;
    std::size_t i = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& s) : src(s) {}

    void bump(char c) {
        ++i;
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }

    void skip_ws() {
        while (i < src.size()) {
            char c = src[i];
            if (c == '#') {
                while (i < src.size() && src[i] != '\n') bump(src[i]);
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                bump(c);
            } else {
                break;
            }
        }
    }

    Token next() {
        skip_ws();
        if (i >= src.size()) return {Tok::End, "", line, col};
        int l = line, c = col;
        char ch = src[i];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string t;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
                t += src[i];
                bump(src[i]);
            }
            return {Tok::Int, t, l, c};
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::string t;
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
                t += src[i];
                bump(src[i]);
            }
            return {is_keyword(t) ? Tok::Keyword : Tok::Name, t, l, c};
        }
        if (ch == '@') {
            std::string t(1, ch);
            bump(ch);
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_' ||
                    src[i] == '/' || src[i] == '.')) {
                t += src[i];
                bump(src[i]);
            }
            if (t.size() < 4 || t.rfind("@g/", 0) != 0)
                throw ParseError(l, c, "malformed generated name '" + t + "'");
            return {Tok::Name, t, l, c};
        }
        std::string punct(1, ch);
        bump(ch);
        if (ch == '<' && i < src.size() && src[i] == '=') {
            punct = "<=";
            bump('=');
        } else if (ch == '=' && i < src.size() && src[i] == '=') {
            punct = "==";
            bump('=');
        } else if (ch == '-' && i < src.size() && src[i] == '>') {
            punct = "->";
            bump('>');
        }
        return {Tok::Punct, punct, l, c};
    }
};

struct TokenParser {
    std::vector<Token> toks;
    std::size_t pos = 0;

    explicit TokenParser(const std::string& text) {
        Lexer lx(text);
        for (;;) {
            Token t = lx.next();
            toks.push_back(t);
            if (t.kind == Tok::End) break;
        }
    }

    const Token& peek(int ahead = 0) const {
        std::size_t j = pos + ahead;
        return j < toks.size() ? toks[j] : toks.back();
    }
    Token take() { return toks[pos < toks.size() - 1 ? pos++ : pos]; }

    [[noreturn]] void fail(const std::string& msg, const std::string& expected = {}) const {
        const Token& t = peek();
        throw ParseError(t.line, t.col,
                         msg + " (got '" + (t.kind == Tok::End ? "<end>" : t.text) + "')", expected);
    }

    bool at_punct(const std::string& p) const { return peek().kind == Tok::Punct && peek().text == p; }
    bool at_kw(const std::string& k) const { return peek().kind == Tok::Keyword && peek().text == k; }

    void expect_punct(const std::string& p) {
        if (!at_punct(p)) fail("expected '" + p + "'", p);
        take();
    }
    std::string expect_name() {
        if (peek().kind != Tok::Name) fail("expected identifier", "NAME");
        return take().text;
    }
    std::uint64_t expect_int() {
        if (peek().kind != Tok::Int) fail("expected integer", "INT");
        return std::stoull(take().text);
    }

    Role role() {
        if (at_kw("univ")) {
            take();
            return Role::universal();
        }
        if (at_kw("inv")) {
            take();
            expect_punct("(");
            std::string n = expect_name();
            expect_punct(")");
            return Role::inverse(n);
        }
        return Role::named(expect_name());
    }

    Concept concept_expr() { return disjunction(); }

    Concept disjunction() {
        Concept c = conjunction();
        while (at_kw("or")) {
            take();
            c = Concept::disj(c, conjunction());
        }
        return c;
    }

    Concept conjunction() {
        Concept c = unary();
        while (at_kw("and")) {
            take();
            c = Concept::conj(c, unary());
        }
        return c;
    }

    Concept unary() {
        if (at_kw("not")) {
            take();
            return Concept::neg(unary());
        }
        if (at_kw("some")) {
            take();
            Role r = role();
            return Concept::exists(r, unary());
        }
        if (at_kw("all")) {
            take();
            Role r = role();
            return Concept::forall(r, unary());
        }
        if (at_kw("atleast")) {
            take();
            std::uint64_t n = expect_int();
            Role r = role();
            return Concept::atleast(n, r, unary());
        }
        if (at_kw("atmost")) {
            take();
            std::uint64_t n = expect_int();
            Role r = role();
            return Concept::atmost(n, r, unary());
        }
        return atom();
    }

    Concept atom() {
        if (at_kw("top")) {
            take();
            return Concept::top();
        }
        if (at_kw("bot")) {
            take();
            return Concept::bot();
        }
        if (at_punct("{")) {
            take();
            std::string n = expect_name();
            expect_punct("}");
            return Concept::nominal(n);
        }
        if (at_punct("(")) {
            take();
            Concept c = concept_expr();
            expect_punct(")");
            return c;
        }
        if (peek().kind == Tok::Name) return Concept::name(take().text);
        fail("expected concept atom", "top|bot|NAME|{NAME}|(");
    }
};

} // namespace circ::detail

#endif
