#include "circ/parser.hpp"

#include "textscan.hpp"

namespace circ {
namespace {

using detail::Tok;

struct KbParser : detail::TokenParser {
    using TokenParser::TokenParser;

    // axiom := concept "<=" concept | NAME "==" concept
    Axiom axiom() {
        if (peek().kind == Tok::Name && peek(1).kind == Tok::Punct && peek(1).text == "==") {
            std::string n = take().text;
            take();
            return Axiom::def(n, concept_expr());
        }
        Concept l = concept_expr();
        expect_punct("<=");
        return Axiom::incl(l, concept_expr());
    }

    void abox_entry(Abox& out) {
        std::string n = expect_name();
        if (at_punct(":")) {
            take();
            out.concept_assertions.push_back({n, concept_expr()});
            return;
        }
        if (at_punct("(")) {
            take();
            std::string a = expect_name();
            expect_punct(",");
            std::string b = expect_name();
            expect_punct(")");
            out.role_assertions.push_back({n, a, b});
            return;
        }
        fail("expected ':' or '(' in assertion", ": or (");
    }

    void circ_entry(CircPattern& p) {
        if (at_kw("minimize") || at_kw("fix") || at_kw("vary")) {
            std::string kw = take().text;
            auto& dst = kw == "minimize" ? p.minimized : kw == "fix" ? p.fixed : p.varying;
            dst.insert(expect_name());
            while (at_punct(",")) {
                take();
                dst.insert(expect_name());
            }
            return;
        }
        if (at_kw("prefer")) {
            take();
            std::string hi = expect_name();
            expect_punct("<");
            std::string lo = expect_name();
            p.prefer.insert({hi, lo});
            return;
        }
        fail("expected circ declaration", "minimize|fix|vary|prefer");
    }

    CircKB kb() {
        CircKB kb;
        while (peek().kind != Tok::End) {
            if (at_kw("tbox")) {
                take();
                expect_punct("{");
                while (!at_punct("}")) {
                    kb.tbox.push_back(axiom());
                    expect_punct(";");
                }
                take();
            } else if (at_kw("abox")) {
                take();
                expect_punct("{");
                while (!at_punct("}")) {
                    abox_entry(kb.abox);
                    expect_punct(";");
                }
                take();
            } else if (at_kw("circ")) {
                take();
                expect_punct("{");
                while (!at_punct("}")) {
                    circ_entry(kb.pattern);
                    expect_punct(";");
                }
                take();
            } else {
                fail("expected block", "tbox|abox|circ");
            }
        }
        return kb;
    }
};

} // namespace

CircKB parse_kb(const std::string& text) {
    KbParser p(text);
    return p.kb();
}

Concept parse_concept(const std::string& text) {
    detail::TokenParser p(text);
    Concept c = p.concept_expr();
    if (p.peek().kind != Tok::End) p.fail("trailing input after concept");
    return c;
}

} // namespace circ
