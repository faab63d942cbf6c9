#include "circ/metrics.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace circ {

std::uint64_t size_of(const Concept& c) {
    switch (c.kind()) {
    case CKind::Top:
    case CKind::Bot:
    case CKind::Name:
    case CKind::Nominal:
        return 1;
    case CKind::Not:
        return 1 + size_of(c.left());
    case CKind::And:
    case CKind::Or:
        return 1 + size_of(c.left()) + size_of(c.right());
    case CKind::Exists:
    case CKind::Forall:
        return 2 + size_of(c.left());
    case CKind::AtLeast:
    case CKind::AtMost:
        return 3 + size_of(c.left());
    }
    return 0;
}

std::uint64_t size_of(const std::vector<Axiom>& tbox) {
    std::uint64_t n = 0;
    for (const auto& ax : tbox) {
        std::uint64_t s = size_of(ax.lhs) + size_of(ax.rhs);
        n += ax.kind == AxKind::Definition ? 2 * s : s;
    }
    return n;
}

std::uint64_t size_of(const Abox& abox) {
    std::uint64_t n = 0;
    for (const auto& ca : abox.concept_assertions) n += size_of(ca.c);
    n += abox.role_assertions.size();
    return n;
}

std::uint64_t role_depth(const Concept& c) {
    switch (c.kind()) {
    case CKind::Top:
    case CKind::Bot:
    case CKind::Name:
    case CKind::Nominal:
        return 0;
    case CKind::Not:
        return role_depth(c.left());
    case CKind::And:
    case CKind::Or:
        return std::max(role_depth(c.left()), role_depth(c.right()));
    case CKind::Exists:
    case CKind::Forall:
    case CKind::AtLeast:
    case CKind::AtMost:
        return 1 + role_depth(c.left());
    }
    return 0;
}

std::uint64_t max_number_parameter(const Concept& c) {
    std::uint64_t n = 0;
    if (c.kind() == CKind::AtLeast || c.kind() == CKind::AtMost) n = c.num();
    if (c.node()->a) n = std::max(n, max_number_parameter(c.left()));
    if (c.node()->b) n = std::max(n, max_number_parameter(c.right()));
    return n;
}

namespace {

void names_in(const Concept& c, std::set<std::string>& out) {
    if (c.kind() == CKind::Name) out.insert(c.name());
    if (c.node()->a) names_in(c.left(), out);
    if (c.node()->b) names_in(c.right(), out);
}

} // namespace

bool is_acyclic(const std::vector<Axiom>& tbox) {
    std::set<std::string> lhs_names;
    std::map<std::string, std::set<std::string>> deps;
    for (const auto& ax : tbox) {
        if (ax.lhs.kind() != CKind::Name) return false;
        if (!lhs_names.insert(ax.lhs.name()).second) return false;
        names_in(ax.rhs, deps[ax.lhs.name()]);
    }
    // well-foundedness: no cycle in the dependency graph restricted to lhs names
    std::map<std::string, int> state; // 0 new, 1 open, 2 done
    std::vector<std::pair<std::string, bool>> stack;
    for (const auto& [start, _] : deps) {
        if (state[start]) continue;
        stack.push_back({start, false});
        while (!stack.empty()) {
            auto [n, leaving] = stack.back();
            stack.pop_back();
            if (leaving) {
                state[n] = 2;
                continue;
            }
            if (state[n] == 1) return false;
            if (state[n] == 2) continue;
            state[n] = 1;
            stack.push_back({n, true});
            auto it = deps.find(n);
            if (it != deps.end())
                for (const auto& m : it->second) {
                    if (state[m] == 1) return false;
                    if (state[m] == 0 && lhs_names.count(m)) stack.push_back({m, false});
                }
        }
    }
    return true;
}

std::string Fragment::label() const {
    std::string s = "ALC";
    if (counting) s += "Q";
    if (inverses) s += "I";
    if (nominals) s += "O";
    if (universal) s += "+universal-role";
    return s;
}

void Fragment::scan(const Concept& c) {
    switch (c.kind()) {
    case CKind::Nominal:
        nominals = true;
        break;
    case CKind::AtLeast:
    case CKind::AtMost:
        counting = true;
        break;
    default:
        break;
    }
    if (c.kind() == CKind::Exists || c.kind() == CKind::Forall || c.kind() == CKind::AtLeast ||
        c.kind() == CKind::AtMost) {
        if (c.role().kind == RoleKind::Inverse) inverses = true;
        if (c.role().kind == RoleKind::Universal) universal = true;
    }
    if (c.node()->a) scan(c.left());
    if (c.node()->b) scan(c.right());
}

Fragment detect_fragment(const CircKB& kb) {
    Fragment f;
    for (const auto& ax : kb.tbox) {
        f.scan(ax.lhs);
        f.scan(ax.rhs);
    }
    for (const auto& ca : kb.abox.concept_assertions) f.scan(ca.c);
    return f;
}

Fragment detect_fragment(const CircKB& kb, const Query& q) {
    Fragment f = detect_fragment(kb);
    f.scan(q.c);
    if (q.kind == Query::Kind::Subsumes) f.scan(q.d);
    return f;
}

} // namespace circ
