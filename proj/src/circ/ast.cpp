#include "circ/ast.hpp"

namespace circ {

bool Concept::operator==(const Concept& o) const {
    const ConceptNode* x = p_.get();
    const ConceptNode* y = o.p_.get();
    if (x == y) return true;
    if (x->kind != y->kind || x->name != y->name || x->num != y->num || x->role != y->role)
        return false;
    if (!!x->a != !!y->a || !!x->b != !!y->b) return false;
    if (x->a && !(left() == o.left())) return false;
    if (x->b && !(right() == o.right())) return false;
    return true;
}

Concept nary_and(const std::vector<Concept>& cs) {
    if (cs.empty()) return Concept::top();
    Concept acc = cs.front();
    for (std::size_t i = 1; i < cs.size(); ++i) acc = Concept::conj(acc, cs[i]);
    return acc;
}

Concept nary_or(const std::vector<Concept>& cs) {
    if (cs.empty()) return Concept::bot();
    Concept acc = cs.front();
    for (std::size_t i = 1; i < cs.size(); ++i) acc = Concept::disj(acc, cs[i]);
    return acc;
}

void collect_signature(const Concept& c, Signature& out) {
    switch (c.kind()) {
    case CKind::Top:
    case CKind::Bot:
        return;
    case CKind::Name:
        out.concepts.insert(c.name());
        return;
    case CKind::Nominal:
        out.individuals.insert(c.name());
        return;
    case CKind::Not:
        collect_signature(c.left(), out);
        return;
    case CKind::And:
    case CKind::Or:
        collect_signature(c.left(), out);
        collect_signature(c.right(), out);
        return;
    case CKind::AtLeast:
    case CKind::AtMost:
    case CKind::Exists:
    case CKind::Forall:
        if (c.role().kind != RoleKind::Universal) out.roles.insert(c.role().name);
        collect_signature(c.left(), out);
        return;
    }
}

Signature signature_of(const Concept& c) {
    Signature s;
    collect_signature(c, s);
    return s;
}

Signature signature_of(const CircKB& kb) {
    Signature s;
    for (const auto& ax : kb.tbox) {
        collect_signature(ax.lhs, s);
        collect_signature(ax.rhs, s);
    }
    for (const auto& ca : kb.abox.concept_assertions) {
        s.individuals.insert(ca.indiv);
        collect_signature(ca.c, s);
    }
    for (const auto& ra : kb.abox.role_assertions) {
        s.roles.insert(ra.role);
        s.individuals.insert(ra.a);
        s.individuals.insert(ra.b);
    }
    return s;
}

} // namespace circ
