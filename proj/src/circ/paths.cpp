#include "circ/paths.hpp"

#include "circ/printer.hpp"
#include "circ/validate.hpp"

namespace circ {

std::set<std::pair<PathsTable::Word, Concept>> concept_paths(const Concept& c) {
    using Word = PathsTable::Word;
    std::set<std::pair<Word, Concept>> out;
    switch (c.kind()) {
    case CKind::Top:
    case CKind::Bot:
    case CKind::Name:
        out.insert({{}, c});
        return out;
    case CKind::Not:
        out.insert({{}, c});
        for (const auto& p : concept_paths(c.left())) out.insert(p);
        return out;
    case CKind::And:
    case CKind::Or:
        out.insert({{}, c});
        for (const auto& p : concept_paths(c.left())) out.insert(p);
        for (const auto& p : concept_paths(c.right())) out.insert(p);
        return out;
    case CKind::Exists:
    case CKind::Forall: {
        if (c.role().kind != RoleKind::Named)
            throw ValidationError("path table requires named roles: " + render_concept(c));
        out.insert({{}, c});
        for (const auto& [w, e] : concept_paths(c.left())) {
            Word ext{c.role().name};
            ext.insert(ext.end(), w.begin(), w.end());
            out.insert({ext, e});
        }
        return out;
    }
    case CKind::Nominal:
    case CKind::AtLeast:
    case CKind::AtMost:
        throw ValidationError("path table is defined for ALC concepts only: " + render_concept(c));
    }
    return out;
}

PathsTable compute_paths(const std::vector<ConceptAssertion>& assertions) {
    PathsTable t;
    for (const auto& ca : assertions) {
        auto& dst = t.entries[ca.indiv];
        for (const auto& p : concept_paths(ca.c)) dst.insert(p);
    }
    return t;
}

Concept forall_word(const PathsTable::Word& w, const Concept& c) {
    Concept out = c;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out = Concept::forall(Role::named(*it), out);
    return out;
}

} // namespace circ
