#include "circ/reductions.hpp"

#include <algorithm>
#include <functional>

#include "circ/printer.hpp"

namespace circ {
namespace {

Concept rename_concepts(const Concept& c, const std::map<std::string, std::string>& cmap) {
    switch (c.kind()) {
    case CKind::Top:
    case CKind::Bot:
    case CKind::Nominal:
        return c;
    case CKind::Name: {
        auto it = cmap.find(c.name());
        return it == cmap.end() ? c : Concept::name(it->second);
    }
    case CKind::Not:
        return Concept::neg(rename_concepts(c.left(), cmap));
    case CKind::And:
        return Concept::conj(rename_concepts(c.left(), cmap), rename_concepts(c.right(), cmap));
    case CKind::Or:
        return Concept::disj(rename_concepts(c.left(), cmap), rename_concepts(c.right(), cmap));
    case CKind::AtLeast:
        return Concept::atleast(c.num(), c.role(), rename_concepts(c.left(), cmap));
    case CKind::AtMost:
        return Concept::atmost(c.num(), c.role(), rename_concepts(c.left(), cmap));
    case CKind::Exists:
        return Concept::exists(c.role(), rename_concepts(c.left(), cmap));
    case CKind::Forall:
        return Concept::forall(c.role(), rename_concepts(c.left(), cmap));
    }
    return c;
}

std::set<std::string> pattern_universe(const CircKB& kb) {
    std::set<std::string> out;
    for (const auto* s : {&kb.pattern.minimized, &kb.pattern.fixed, &kb.pattern.varying})
        out.insert(s->begin(), s->end());
    return out;
}

} // namespace

ReducedKb eliminate_fixed_concepts(const ValidatedKB& v) {
    ReducedKb out;
    out.kb = v.kb;
    std::vector<std::string> fixed_concepts = v.pattern_names(v.kb.pattern.fixed, PredKind::ConceptName);
    out.cert.direction = "satisfiability preserved for every query concept";
    if (fixed_concepts.empty()) return out;

    FreshNames fresh;
    fresh.reserve(v.sig);
    fresh.reserve_names(pattern_universe(v.kb));
    for (const auto& a : fixed_concepts) {
        std::string prime = fresh.fresh(a + ".c");
        out.cert.fresh.push_back(prime);
        out.kb.tbox.push_back(Axiom::def(prime, Concept::neg(Concept::name(a))));
        out.kb.pattern.fixed.erase(a);
        out.kb.pattern.minimized.insert(a);
        out.kb.pattern.minimized.insert(prime);
    }
    return out;
}

ReducedInstance eliminate_fixed_concepts_empty_tbox(const ValidatedKB& v, const std::string& a0,
                                                    const Concept& c0) {
    if (!v.kb.tbox.empty())
        throw ValidationError("fixed-name elimination without a TBox requires an empty TBox");
    if (!v.role_minimizing())
        throw ValidationError("fixed-name elimination without a TBox forbids fixed role names");

    ReducedInstance out;
    out.kb = v.kb;
    out.indiv = a0;
    out.query = c0;
    out.cert.source_query = "instance " + a0 + " : " + render_concept(c0);
    out.cert.target_query = out.cert.source_query;
    out.cert.direction = "instance answer preserved";

    std::vector<std::string> fixed_concepts = v.pattern_names(v.kb.pattern.fixed, PredKind::ConceptName);
    if (fixed_concepts.empty()) return out;

    std::vector<ConceptAssertion> relevant = v.kb.abox.concept_assertions;
    relevant.push_back({a0, c0});
    PathsTable paths = compute_paths(relevant);

    std::set<std::string> named = v.sig.individuals;
    named.insert(a0);
    for (const auto& ra : v.kb.abox.role_assertions) {
        named.insert(ra.a);
        named.insert(ra.b);
    }

    FreshNames fresh;
    fresh.reserve(v.sig);
    Signature qs = signature_of(c0);
    fresh.reserve(qs);
    fresh.reserve_names(pattern_universe(v.kb));
    for (const auto& a : fixed_concepts) {
        std::string prime = fresh.fresh(a + ".c");
        out.cert.fresh.push_back(prime);
        Concept complement =
            iff(Concept::name(prime), Concept::neg(Concept::name(a)));
        for (const auto& ind : named) {
            std::set<PathsTable::Word> ws = paths.words(ind);
            ws.insert({}); // every named individual carries the empty word
            for (const auto& w : ws)
                out.kb.abox.concept_assertions.push_back({ind, forall_word(w, complement)});
        }
        out.kb.pattern.fixed.erase(a);
        out.kb.pattern.minimized.insert(a);
        out.kb.pattern.minimized.insert(prime);
    }
    return out;
}

ReducedSat general_to_acyclic(const ValidatedKB& v, const Concept& c0) {
    ReducedSat out;
    out.kb = v.kb;

    // fold the TBox into a single globally valid concept
    std::vector<Concept> conjuncts;
    for (const auto& ax : v.kb.tbox) {
        conjuncts.push_back(implies(ax.lhs, ax.rhs));
        if (ax.kind == AxKind::Definition) conjuncts.push_back(implies(ax.rhs, ax.lhs));
    }
    Concept folded = nary_and(conjuncts);

    FreshNames fresh;
    fresh.reserve(v.sig);
    Signature qs = signature_of(c0);
    fresh.reserve(qs);
    fresh.reserve_names(pattern_universe(v.kb));
    std::string a = fresh.fresh("A");
    std::string b = fresh.fresh("B");
    std::string ap = fresh.fresh("A.c");
    std::string bp = fresh.fresh("B.c");
    std::string u = fresh.fresh("u");
    out.cert.fresh = {a, b, ap, bp, u};

    out.kb.tbox = {
        Axiom::def(a, folded),
        Axiom::def(b, Concept::exists(Role::named(u), Concept::neg(Concept::name(a)))),
        Axiom::def(ap, Concept::neg(Concept::name(a))),
        Axiom::def(bp, Concept::neg(Concept::name(b))),
    };
    out.kb.pattern.minimized.insert(ap);
    out.kb.pattern.minimized.insert(bp);
    out.kb.pattern.varying.insert(a);
    out.kb.pattern.varying.insert(b);
    out.kb.pattern.varying.insert(u);

    out.query = Concept::conj(c0, Concept::name(bp));
    out.cert.source_query = "sat " + render_concept(c0);
    out.cert.target_query = "sat " + render_concept(out.query);
    out.cert.direction = "satisfiable iff satisfiable";
    return out;
}

namespace {

// two-KB merge step; kb2 may be empty
ReducedInstance merge_pair(const ValidatedKB& v1, const ValidatedKB& v2, const Concept& c0) {
    for (const auto& r : v1.sig.roles)
        if (v2.sig.roles.count(r))
            throw ValidationError("knowledge bases share the role name '" + r + "'", r);

    std::set<std::string> names1 = v1.sig.concepts, names2 = v2.sig.concepts;
    for (const auto& n : pattern_universe(v1.kb))
        if (v1.kind_of(n) == PredKind::ConceptName) names1.insert(n);
    for (const auto& n : pattern_universe(v2.kb))
        if (v2.kind_of(n) == PredKind::ConceptName) names2.insert(n);

    FreshNames fresh;
    fresh.reserve(v1.sig);
    fresh.reserve(v2.sig);
    Signature qs = signature_of(c0);
    fresh.reserve(qs);
    fresh.reserve_names(pattern_universe(v1.kb));
    fresh.reserve_names(pattern_universe(v2.kb));

    std::map<std::string, std::string> rename;
    for (const auto& n : names2)
        if (names1.count(n)) rename[n] = fresh.fresh(n + ".c");

    ReducedInstance out;
    out.kb.tbox = v1.kb.tbox;
    for (const auto& ax : v2.kb.tbox) {
        Axiom ren = ax;
        ren.lhs = rename_concepts(ax.lhs, rename);
        ren.rhs = rename_concepts(ax.rhs, rename);
        out.kb.tbox.push_back(ren);
    }
    out.kb.abox = v1.kb.abox;
    for (const auto& ca : v2.kb.abox.concept_assertions)
        out.kb.abox.concept_assertions.push_back({ca.indiv, rename_concepts(ca.c, rename)});
    for (const auto& ra : v2.kb.abox.role_assertions)
        out.kb.abox.role_assertions.push_back(ra);

    auto renamed = [&rename](const std::string& n) {
        auto it = rename.find(n);
        return it == rename.end() ? n : it->second;
    };
    out.kb.pattern = v1.kb.pattern;
    for (const auto& n : v2.kb.pattern.minimized) out.kb.pattern.minimized.insert(renamed(n));
    for (const auto& n : v2.kb.pattern.fixed) out.kb.pattern.fixed.insert(renamed(n));
    for (const auto& n : v2.kb.pattern.varying) out.kb.pattern.varying.insert(renamed(n));
    for (const auto& [hi, lo] : v2.kb.pattern.prefer)
        out.kb.pattern.prefer.insert({renamed(hi), renamed(lo)});

    std::string p = fresh.fresh("P");
    std::string r0 = fresh.fresh("r0");
    out.cert.fresh.push_back(p);
    out.cert.fresh.push_back(r0);
    for (const auto& [from, to] : rename) out.cert.fresh.push_back(to);

    // disagreement on a shared name anywhere propagates to P everywhere
    Concept pc = Concept::name(p);
    for (const auto& [n, n2] : rename) {
        Concept a = Concept::name(n), a2 = Concept::name(n2);
        out.kb.tbox.push_back(Axiom::incl(Concept::conj(a, Concept::neg(a2)), pc));
        out.kb.tbox.push_back(Axiom::incl(Concept::conj(Concept::neg(a), a2), pc));
    }
    std::set<std::string> all_roles = v1.sig.roles;
    all_roles.insert(v2.sig.roles.begin(), v2.sig.roles.end());
    all_roles.insert(r0);
    for (const auto& r : all_roles) {
        out.kb.tbox.push_back(Axiom::incl(pc, Concept::forall(Role::named(r), pc)));
        out.kb.tbox.push_back(Axiom::incl(Concept::exists(Role::named(r), pc), pc));
    }

    std::set<std::string> named = v1.sig.individuals;
    named.insert(v2.sig.individuals.begin(), v2.sig.individuals.end());
    if (named.empty()) {
        std::string anchor = fresh.fresh("a0");
        out.cert.fresh.push_back(anchor);
        named.insert(anchor);
    }
    for (const auto& b1 : named)
        for (const auto& b2 : named) out.kb.abox.role_assertions.push_back({r0, b1, b2});

    out.kb.pattern.varying.insert(p);
    out.kb.pattern.varying.insert(r0);

    out.indiv = *named.begin();
    out.query = Concept::neg(
        Concept::conj(Concept::neg(pc), Concept::exists(Role::named(r0), c0)));
    out.cert.direction = "simultaneously satisfiable iff " + out.indiv +
                         " is not an instance of the target concept";
    return out;
}

} // namespace

ReducedInstance merge_simultaneous(const std::vector<ValidatedKB>& kbs, const Concept& c0) {
    if (kbs.empty()) throw ValidationError("nothing to merge");
    for (std::size_t i = 0; i < kbs.size(); ++i)
        for (std::size_t j = i + 1; j < kbs.size(); ++j)
            for (const auto& r : kbs[i].sig.roles)
                if (kbs[j].sig.roles.count(r))
                    throw ValidationError("knowledge bases share the role name '" + r + "'", r);

    ValidatedKB empty_kb = validate(CircKB{});
    if (kbs.size() == 1) {
        auto out = merge_pair(kbs[0], empty_kb, c0);
        out.cert.source_query = "simultaneous-sat " + render_concept(c0);
        out.cert.target_query = "non-instance " + out.indiv + " : " + render_concept(out.query);
        return out;
    }

    ValidatedKB acc = kbs[0];
    Concept query = c0;
    ReducedInstance step;
    std::vector<std::string> fresh_all;
    for (std::size_t i = 1; i < kbs.size(); ++i) {
        step = merge_pair(acc, kbs[i], query);
        fresh_all.insert(fresh_all.end(), step.cert.fresh.begin(), step.cert.fresh.end());
        if (i + 1 == kbs.size()) break;
        // convert the non-instance statement back to a satisfiability query
        ValidatedKB merged = validate(step.kb);
        FreshNames fresh;
        fresh.reserve(merged.sig);
        std::string marker = fresh.fresh("sim");
        fresh_all.push_back(marker);
        CircKB next = step.kb;
        next.abox.concept_assertions.push_back({step.indiv, Concept::name(marker)});
        next.pattern.minimized.insert(marker);
        acc = validate(next);
        query = Concept::conj(Concept::name(marker), Concept::neg(step.query));
    }
    step.cert.fresh = fresh_all;
    step.cert.source_query = "simultaneous-sat " + render_concept(c0);
    step.cert.target_query = "non-instance " + step.indiv + " : " + render_concept(step.query);
    return step;
}

SatForm task_reduce(const ValidatedKB& v, const Query& q) {
    SatForm out;
    out.kb = v.kb;
    switch (q.kind) {
    case Query::Kind::Sat:
        out.query = q.c;
        out.holds_iff_unsat = false;
        out.cert.source_query = "sat " + render_concept(q.c);
        out.cert.direction = "identity";
        break;
    case Query::Kind::Subsumes:
        out.query = Concept::conj(q.c, Concept::neg(q.d));
        out.holds_iff_unsat = true;
        out.cert.source_query =
            "subsumes " + render_concept(q.c) + " <= " + render_concept(q.d);
        out.cert.direction = "subsumption holds iff the target concept is unsatisfiable";
        break;
    case Query::Kind::Instance: {
        FreshNames fresh;
        fresh.reserve(v.sig);
        Signature qs = signature_of(q.c);
        fresh.reserve(qs);
        fresh.reserve_names(pattern_universe(v.kb));
        std::string marker = fresh.fresh("inst");
        out.cert.fresh.push_back(marker);
        out.kb.abox.concept_assertions.push_back({q.indiv, Concept::name(marker)});
        out.kb.pattern.minimized.insert(marker);
        out.query = Concept::conj(Concept::name(marker), Concept::neg(q.c));
        out.holds_iff_unsat = true;
        out.cert.source_query = "instance " + q.indiv + " : " + render_concept(q.c);
        out.cert.direction = "instance holds iff the target concept is unsatisfiable";
        break;
    }
    }
    out.cert.target_query = "sat " + render_concept(out.query);
    return out;
}

ReducedSat abox_to_acyclic_tbox(const ValidatedKB& v, const Concept& query) {
    if (!v.kb.tbox.empty()) throw ValidationError("construction requires an empty TBox");
    if (v.kb.abox.concept_assertions.size() != 1 || !v.kb.abox.role_assertions.empty())
        throw ValidationError("construction requires a single concept assertion");
    if (!v.kb.pattern.prefer.empty())
        throw ValidationError("construction requires an empty priority order");

    const ConceptAssertion& ca = v.kb.abox.concept_assertions.front();
    FreshNames fresh;
    fresh.reserve(v.sig);
    Signature qs = signature_of(query);
    fresh.reserve(qs);
    fresh.reserve_names(pattern_universe(v.kb));
    std::string a = fresh.fresh("A");
    std::string u = fresh.fresh("u");

    ReducedSat out;
    out.kb = v.kb;
    out.kb.abox = Abox{};
    out.kb.tbox = {Axiom::incl(Concept::name(a), Concept::exists(Role::named(u), ca.c))};
    out.kb.pattern.fixed.insert(a);
    out.kb.pattern.varying.insert(u);
    out.query = Concept::conj(Concept::name(a), query);
    out.cert.fresh = {a, u};
    out.cert.source_query = "sat " + render_concept(query);
    out.cert.target_query = "sat " + render_concept(out.query);
    out.cert.direction = "satisfiable iff satisfiable";
    return out;
}

ReducedSat min_concepts_to_min_role(const ValidatedKB& v, const Concept& c0) {
    if (!v.kb.tbox.empty()) throw ValidationError("construction requires an empty TBox");
    if (!v.kb.pattern.fixed.empty()) throw ValidationError("construction requires no fixed predicates");
    if (!v.kb.pattern.prefer.empty())
        throw ValidationError("construction requires an empty priority order");
    if (!v.concept_circumscribed())
        throw ValidationError("construction requires concept-only minimization");

    std::vector<std::string> mins(v.kb.pattern.minimized.begin(), v.kb.pattern.minimized.end());
    std::size_t k = mins.size();

    FreshNames fresh;
    fresh.reserve(v.sig);
    Signature qs = signature_of(c0);
    fresh.reserve(qs);
    fresh.reserve_names(pattern_universe(v.kb));
    std::string r0 = fresh.fresh("r0");
    std::string r1 = fresh.fresh("r1");
    std::string anchor = fresh.fresh("a");
    std::vector<std::string> b;
    for (std::size_t i = 0; i < k; ++i) b.push_back(fresh.fresh("B" + std::to_string(i + 1)));

    std::vector<Concept> selectors;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Concept> parts;
        for (std::size_t j = 0; j < k; ++j)
            parts.push_back(j == i ? Concept::neg(Concept::name(b[j])) : Concept::name(b[j]));
        selectors.push_back(nary_and(parts));
    }

    std::function<Concept(const Concept&)> replace = [&](const Concept& c) -> Concept {
        if (c.kind() == CKind::Name) {
            auto it = std::find(mins.begin(), mins.end(), c.name());
            if (it != mins.end())
                return Concept::exists(Role::named(r0), selectors[static_cast<std::size_t>(it - mins.begin())]);
            return c;
        }
        switch (c.kind()) {
        case CKind::Not:
            return Concept::neg(replace(c.left()));
        case CKind::And:
            return Concept::conj(replace(c.left()), replace(c.right()));
        case CKind::Or:
            return Concept::disj(replace(c.left()), replace(c.right()));
        case CKind::AtLeast:
            return Concept::atleast(c.num(), c.role(), replace(c.left()));
        case CKind::AtMost:
            return Concept::atmost(c.num(), c.role(), replace(c.left()));
        case CKind::Exists:
            return Concept::exists(c.role(), replace(c.left()));
        case CKind::Forall:
            return Concept::forall(c.role(), replace(c.left()));
        default:
            return c;
        }
    };

    ReducedSat out;
    out.kb = v.kb;
    out.kb.abox.concept_assertions.clear();
    for (const auto& ca : v.kb.abox.concept_assertions)
        out.kb.abox.concept_assertions.push_back({ca.indiv, replace(ca.c)});
    for (std::size_t i = 0; i < k; ++i)
        out.kb.abox.concept_assertions.push_back(
            {anchor, Concept::exists(Role::named(r1), selectors[i])});

    out.kb.pattern.minimized.clear();
    out.kb.pattern.minimized.insert(r0);
    out.kb.pattern.varying.insert(r1);
    for (const auto& n : b) out.kb.pattern.varying.insert(n);

    out.query = replace(c0);
    out.cert.fresh = {r0, r1, anchor};
    out.cert.fresh.insert(out.cert.fresh.end(), b.begin(), b.end());
    out.cert.source_query = "sat " + render_concept(c0);
    out.cert.target_query = "sat " + render_concept(out.query);
    out.cert.notes.push_back("equivalence requires source models with at least " +
                             std::to_string(k) + " elements");
    out.cert.direction = "satisfiable in a model of size >= #minimized iff satisfiable";
    return out;
}

} // namespace circ
