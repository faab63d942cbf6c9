#include "circ/eval.hpp"

#include <unordered_map>

#include "circ/printer.hpp"

namespace circ {

std::string element_name(int e) { return "d" + std::to_string(e); }

nlohmann::json witness_to_json(const Interpretation& i) {
    nlohmann::json j;
    auto dom = nlohmann::json::array();
    for (int e = 0; e < i.size; ++e) dom.push_back(element_name(e));
    j["domain"] = dom;
    auto cs = nlohmann::json::object();
    for (const auto& [n, ext] : i.concepts) {
        auto arr = nlohmann::json::array();
        for (int e : ext) arr.push_back(element_name(e));
        cs[n] = arr;
    }
    j["concepts"] = cs;
    auto rs = nlohmann::json::object();
    for (const auto& [n, ext] : i.roles) {
        auto arr = nlohmann::json::array();
        for (auto [a, b] : ext) arr.push_back(nlohmann::json::array({element_name(a), element_name(b)}));
        rs[n] = arr;
    }
    j["roles"] = rs;
    auto is = nlohmann::json::object();
    for (const auto& [n, e] : i.individuals) is[n] = element_name(e);
    j["individuals"] = is;
    return j;
}

std::set<std::pair<int, int>> eval_role(const Interpretation& i, const Role& r) {
    switch (r.kind) {
    case RoleKind::Named:
        return i.role_ext(r.name);
    case RoleKind::Inverse: {
        std::set<std::pair<int, int>> out;
        for (auto [a, b] : i.role_ext(r.name)) out.insert({b, a});
        return out;
    }
    case RoleKind::Universal: {
        std::set<std::pair<int, int>> out;
        for (int a = 0; a < i.size; ++a)
            for (int b = 0; b < i.size; ++b) out.insert({a, b});
        return out;
    }
    }
    return {};
}

namespace {

// structural evaluation with per-call memoisation on node identity
struct Evaluator {
    const Interpretation& i;
    std::unordered_map<const ConceptNode*, std::set<int>> memo;

    std::set<int> full() const {
        std::set<int> s;
        for (int e = 0; e < i.size; ++e) s.insert(e);
        return s;
    }

    std::set<int> eval(const Concept& c) {
        auto it = memo.find(c.node());
        if (it != memo.end()) return it->second;
        std::set<int> r = compute(c);
        memo.emplace(c.node(), r);
        return r;
    }

    std::set<int> compute(const Concept& c) {
        switch (c.kind()) {
        case CKind::Top:
            return full();
        case CKind::Bot:
            return {};
        case CKind::Name:
            return i.concept_ext(c.name());
        case CKind::Nominal: {
            auto it = i.individuals.find(c.name());
            if (it == i.individuals.end())
                throw EvalError("individual '" + c.name() + "' is not mapped");
            return {it->second};
        }
        case CKind::Not: {
            std::set<int> sub = eval(c.left());
            std::set<int> out;
            for (int e = 0; e < i.size; ++e)
                if (!sub.count(e)) out.insert(e);
            return out;
        }
        case CKind::And: {
            std::set<int> a = eval(c.left()), b = eval(c.right()), out;
            for (int e : a)
                if (b.count(e)) out.insert(e);
            return out;
        }
        case CKind::Or: {
            std::set<int> out = eval(c.left());
            for (int e : eval(c.right())) out.insert(e);
            return out;
        }
        case CKind::AtLeast:
        case CKind::AtMost:
        case CKind::Exists:
        case CKind::Forall: {
            std::set<int> sub = eval(c.left());
            auto rel = eval_role(i, c.role());
            std::set<int> out;
            for (int e = 0; e < i.size; ++e) {
                std::uint64_t cnt = 0;
                for (auto [a, b] : rel)
                    if (a == e && sub.count(b)) ++cnt;
                bool in = false;
                switch (c.kind()) {
                case CKind::AtLeast:
                    in = cnt >= c.num();
                    break;
                case CKind::AtMost:
                    in = cnt <= c.num();
                    break;
                case CKind::Exists:
                    in = cnt >= 1;
                    break;
                case CKind::Forall: {
                    // all successors in sub
                    std::uint64_t succ = 0;
                    for (auto [a, b] : rel)
                        if (a == e) ++succ;
                    std::uint64_t succ_in = cnt;
                    in = succ == succ_in;
                    break;
                }
                default:
                    break;
                }
                if (in) out.insert(e);
            }
            return out;
        }
        }
        return {};
    }
};

} // namespace

std::set<int> eval_concept(const Interpretation& i, const Concept& c) {
    Evaluator ev{i, {}};
    return ev.eval(c);
}

bool satisfies(const Interpretation& i, const Axiom& ax) {
    std::set<int> l = eval_concept(i, ax.lhs);
    std::set<int> r = eval_concept(i, ax.rhs);
    auto subset = [](const std::set<int>& a, const std::set<int>& b) {
        for (int e : a)
            if (!b.count(e)) return false;
        return true;
    };
    if (ax.kind == AxKind::Definition) return l == r;
    return subset(l, r);
}

bool is_model(const Interpretation& i, const std::vector<Axiom>& tbox, const Abox& abox) {
    for (const auto& ax : tbox)
        if (!satisfies(i, ax)) return false;
    for (const auto& ca : abox.concept_assertions) {
        auto it = i.individuals.find(ca.indiv);
        if (it == i.individuals.end()) return false;
        if (!eval_concept(i, ca.c).count(it->second)) return false;
    }
    for (const auto& ra : abox.role_assertions) {
        auto a = i.individuals.find(ra.a);
        auto b = i.individuals.find(ra.b);
        if (a == i.individuals.end() || b == i.individuals.end()) return false;
        if (!i.role_ext(ra.role).count({a->second, b->second})) return false;
    }
    return true;
}

namespace {

// extension comparison that works for both predicate kinds
struct ExtCmp {
    bool equal, subset, strict;
};

ExtCmp compare_ext(const Interpretation& i, const Interpretation& j, const std::string& p,
                   PredKind k) {
    if (k == PredKind::ConceptName) {
        auto a = i.concept_ext(p), b = j.concept_ext(p);
        bool sub = true;
        for (int e : a)
            if (!b.count(e)) sub = false;
        return {a == b, sub, sub && a != b};
    }
    auto a = i.role_ext(p), b = j.role_ext(p);
    bool sub = true;
    for (auto& e : a)
        if (!b.count(e)) sub = false;
    return {a == b, sub, sub && a != b};
}

} // namespace

std::optional<PreferenceWitness> prefers(const Interpretation& i, const Interpretation& j,
                                         const ValidatedKB& v) {
    // condition 1: same domain and individual map on the KB's individuals
    if (i.size != j.size) return std::nullopt;
    for (const auto& a : v.sig.individuals) {
        auto x = i.individuals.find(a);
        auto y = j.individuals.find(a);
        if (x == i.individuals.end() || y == j.individuals.end() || x->second != y->second)
            return std::nullopt;
    }
    // condition 2: fixed predicates coincide
    for (const auto& p : v.kb.pattern.fixed)
        if (!compare_ext(i, j, p, v.kind_of(p)).equal) return std::nullopt;

    PreferenceWitness w;
    // condition 3: growth at p is compensated by a strictly shrunk q with priority
    for (const auto& p : v.kb.pattern.minimized) {
        ExtCmp c = compare_ext(i, j, p, v.kind_of(p));
        if (c.subset) continue;
        bool compensated = false;
        for (const auto& q : v.kb.pattern.minimized) {
            if (!v.prec.count({q, p})) continue;
            if (compare_ext(i, j, q, v.kind_of(q)).strict) {
                w.compensation[p] = q;
                compensated = true;
                break;
            }
        }
        if (!compensated) return std::nullopt;
    }
    // condition 4: some p strictly shrinks with all higher-priority predicates equal
    for (const auto& p : v.kb.pattern.minimized) {
        if (!compare_ext(i, j, p, v.kind_of(p)).strict) continue;
        bool higher_equal = true;
        for (const auto& q : v.kb.pattern.minimized) {
            if (!v.prec.count({q, p})) continue;
            if (!compare_ext(i, j, q, v.kind_of(q)).equal) {
                higher_equal = false;
                break;
            }
        }
        if (higher_equal) {
            w.shrunk = p;
            return w;
        }
    }
    return std::nullopt;
}

} // namespace circ
