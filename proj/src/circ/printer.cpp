#include "circ/printer.hpp"

#include <sstream>

namespace circ {
namespace {

// precedence levels: 0 = or, 1 = and, 2 = unary/atom
int level(const Concept& c) {
    switch (c.kind()) {
    case CKind::Or:
        return 0;
    case CKind::And:
        return 1;
    default:
        return 2;
    }
}

void emit(std::ostringstream& os, const Concept& c, int min_level) {
    bool parens = level(c) < min_level;
    if (parens) os << "(";
    switch (c.kind()) {
    case CKind::Top:
        os << "top";
        break;
    case CKind::Bot:
        os << "bot";
        break;
    case CKind::Name:
        os << c.name();
        break;
    case CKind::Nominal:
        os << "{" << c.name() << "}";
        break;
    case CKind::Not:
        os << "not ";
        emit(os, c.left(), 2);
        break;
    case CKind::And:
        emit(os, c.left(), 1);
        os << " and ";
        emit(os, c.right(), 2);
        break;
    case CKind::Or:
        emit(os, c.left(), 0);
        os << " or ";
        emit(os, c.right(), 1);
        break;
    case CKind::Exists:
        os << "some " << render_role(c.role()) << " ";
        emit(os, c.left(), 2);
        break;
    case CKind::Forall:
        os << "all " << render_role(c.role()) << " ";
        emit(os, c.left(), 2);
        break;
    case CKind::AtLeast:
        os << "atleast " << c.num() << " " << render_role(c.role()) << " ";
        emit(os, c.left(), 2);
        break;
    case CKind::AtMost:
        os << "atmost " << c.num() << " " << render_role(c.role()) << " ";
        emit(os, c.left(), 2);
        break;
    }
    if (parens) os << ")";
}

} // namespace

std::string render_role(const Role& r) {
    switch (r.kind) {
    case RoleKind::Named:
        return r.name;
    case RoleKind::Inverse:
        return "inv(" + r.name + ")";
    case RoleKind::Universal:
        return "univ";
    }
    return {};
}

std::string render_concept(const Concept& c) {
    std::ostringstream os;
    emit(os, c, 0);
    return os.str();
}

std::string render_kb(const CircKB& kb) {
    std::ostringstream os;
    os << "tbox {\n";
    for (const auto& ax : kb.tbox) {
        if (ax.kind == AxKind::Definition)
            os << "  " << ax.lhs.name() << " == " << render_concept(ax.rhs) << ";\n";
        else
            os << "  " << render_concept(ax.lhs) << " <= " << render_concept(ax.rhs) << ";\n";
    }
    os << "}\nabox {\n";
    for (const auto& ca : kb.abox.concept_assertions)
        os << "  " << ca.indiv << " : " << render_concept(ca.c) << ";\n";
    for (const auto& ra : kb.abox.role_assertions)
        os << "  " << ra.role << "(" << ra.a << ", " << ra.b << ");\n";
    os << "}\ncirc {\n";
    auto list = [&os](const char* kw, const std::set<std::string>& names) {
        if (names.empty()) return;
        os << "  " << kw << " ";
        bool first = true;
        for (const auto& n : names) {
            if (!first) os << ", ";
            os << n;
            first = false;
        }
        os << ";\n";
    };
    list("minimize", kb.pattern.minimized);
    list("fix", kb.pattern.fixed);
    list("vary", kb.pattern.varying);
    for (const auto& [hi, lo] : kb.pattern.prefer) os << "  prefer " << hi << " < " << lo << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace circ
