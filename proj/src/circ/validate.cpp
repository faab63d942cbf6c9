#include "circ/validate.hpp"

#include <algorithm>

namespace circ {

bool ValidatedKB::concept_circumscribed() const {
    for (const auto& p : kb.pattern.minimized)
        if (kind_of(p) == PredKind::RoleName) return false;
    for (const auto& p : kb.pattern.fixed)
        if (kind_of(p) == PredKind::RoleName) return false;
    return true;
}

bool ValidatedKB::role_minimizing() const {
    for (const auto& p : kb.pattern.fixed)
        if (kind_of(p) == PredKind::RoleName) return false;
    return true;
}

bool ValidatedKB::role_fixing() const {
    for (const auto& p : kb.pattern.minimized)
        if (kind_of(p) == PredKind::RoleName) return false;
    return true;
}

std::vector<std::string> ValidatedKB::pattern_names(const std::set<std::string>& s, PredKind k) const {
    std::vector<std::string> out;
    for (const auto& n : s)
        if (kind_of(n) == k) out.push_back(n);
    return out;
}

namespace {

void close_transitively(std::set<std::pair<std::string, std::string>>& rel) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::pair<std::string, std::string>> add;
        for (const auto& [a, b] : rel)
            for (const auto& [c, d] : rel)
                if (b == c && !rel.count({a, d})) add.push_back({a, d});
        for (auto& p : add) changed |= rel.insert(p).second;
    }
}

} // namespace

ValidatedKB validate(const CircKB& kb, bool strict) {
    ValidatedKB v;
    v.kb = kb;
    v.sig = signature_of(kb);

    for (const auto& n : v.sig.concepts)
        if (v.sig.roles.count(n))
            throw ValidationError("predicate '" + n + "' used as both concept and role", n);

    const auto& pat = kb.pattern;
    auto check_disjoint = [](const std::set<std::string>& a, const std::set<std::string>& b,
                             const char* la, const char* lb) {
        for (const auto& n : a)
            if (b.count(n))
                throw ValidationError(std::string("predicate '") + n + "' declared both " + la +
                                          " and " + lb,
                                      n);
    };
    check_disjoint(pat.minimized, pat.fixed, "minimized", "fixed");
    check_disjoint(pat.minimized, pat.varying, "minimized", "varying");
    check_disjoint(pat.fixed, pat.varying, "fixed", "varying");

    for (const auto& [hi, lo] : pat.prefer) {
        if (!pat.minimized.count(hi))
            throw ValidationError("prefer relates non-minimized predicate '" + hi + "'", hi);
        if (!pat.minimized.count(lo))
            throw ValidationError("prefer relates non-minimized predicate '" + lo + "'", lo);
    }
    v.prec = pat.prefer;
    close_transitively(v.prec);
    for (const auto& [a, b] : v.prec)
        if (a == b) throw ValidationError("priority order is not irreflexive at '" + a + "'", a);

    // kinds: occurring names by usage, declared-but-unused names default to concept
    for (const auto& n : v.sig.concepts) v.kinds[n] = PredKind::ConceptName;
    for (const auto& n : v.sig.roles) v.kinds[n] = PredKind::RoleName;
    for (const auto* s : {&pat.minimized, &pat.fixed, &pat.varying})
        for (const auto& n : *s)
            v.kinds.emplace(n, PredKind::ConceptName);

    // coverage of occurring predicates
    auto declared = [&pat](const std::string& n) {
        return pat.minimized.count(n) || pat.fixed.count(n) || pat.varying.count(n);
    };
    std::vector<std::string> undeclared;
    for (const auto& n : v.sig.concepts)
        if (!declared(n)) undeclared.push_back(n);
    for (const auto& n : v.sig.roles)
        if (!declared(n)) undeclared.push_back(n);
    std::sort(undeclared.begin(), undeclared.end());
    for (const auto& n : undeclared) {
        if (strict)
            throw ValidationError("predicate '" + n + "' is not assigned by the circumscription pattern",
                                  n);
        v.kb.pattern.varying.insert(n);
        v.warnings.push_back("predicate '" + n + "' not declared; defaulting to vary");
    }
    return v;
}

void register_query_names(ValidatedKB& v, const Concept& c) {
    Signature qs = signature_of(c);
    for (const auto& n : qs.concepts) {
        if (v.sig.roles.count(n) || (v.kinds.count(n) && v.kinds[n] == PredKind::RoleName))
            throw ValidationError("query uses '" + n + "' as a concept but it is a role", n);
        v.kinds.emplace(n, PredKind::ConceptName);
        if (!v.kb.pattern.minimized.count(n) && !v.kb.pattern.fixed.count(n))
            v.kb.pattern.varying.insert(n);
    }
    for (const auto& n : qs.roles) {
        if (v.sig.concepts.count(n))
            throw ValidationError("query uses '" + n + "' as a role but it is a concept", n);
        v.kinds[n] = PredKind::RoleName;
        if (!v.kb.pattern.minimized.count(n) && !v.kb.pattern.fixed.count(n))
            v.kb.pattern.varying.insert(n);
    }
    for (const auto& n : qs.individuals) v.sig.individuals.insert(n);
}

} // namespace circ
