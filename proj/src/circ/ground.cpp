#include "circ/ground.hpp"

#include <algorithm>

namespace circ {

Grounding::Grounding(int domain, Sig sig) : d_(domain), sig_(std::move(sig)) {
    for (const auto& a : sig_.individuals) {
        ibase_[a] = s_.num_vars() + 1;
        for (int e = 0; e < d_; ++e) s_.new_var();
    }
    for (const auto& c : sig_.concepts) {
        cbase_[c] = s_.num_vars() + 1;
        for (int e = 0; e < d_; ++e) s_.new_var();
    }
    for (const auto& r : sig_.roles) {
        rbase_[r] = s_.num_vars() + 1;
        for (int e = 0; e < d_ * d_; ++e) s_.new_var();
    }
    // decision order: individuals, concepts, roles
    for (const auto& a : sig_.individuals)
        for (int e = 0; e < d_; ++e) order_.push_back(ibase_[a] + e);
    for (const auto& c : sig_.concepts)
        for (int e = 0; e < d_; ++e) order_.push_back(cbase_[c] + e);
    for (const auto& r : sig_.roles)
        for (int e = 0; e < d_ * d_; ++e) order_.push_back(rbase_[r] + e);
    // each individual denotes exactly one element
    for (const auto& a : sig_.individuals) {
        std::vector<int> one;
        for (int e = 0; e < d_; ++e) one.push_back(indiv_var(a, e));
        s_.add_clause(one);
        for (int e = 0; e < d_; ++e)
            for (int f = e + 1; f < d_; ++f)
                s_.add_clause({-indiv_var(a, e), -indiv_var(a, f)});
    }
}

int Grounding::concept_var(const std::string& name, int e) const {
    return cbase_.at(name) + e;
}
int Grounding::role_var(const std::string& name, int e, int f) const {
    return rbase_.at(name) + e * d_ + f;
}
int Grounding::indiv_var(const std::string& name, int e) const {
    return ibase_.at(name) + e;
}

std::vector<int> Grounding::successor_conjuncts(const Role& r, int e, const Concept& c) {
    std::vector<int> ts;
    for (int f = 0; f < d_; ++f) {
        int cf = compile(c, f);
        switch (r.kind) {
        case RoleKind::Named:
            ts.push_back(s_.make_and({role_var(r.name, e, f), cf}));
            break;
        case RoleKind::Inverse:
            ts.push_back(s_.make_and({role_var(r.name, f, e), cf}));
            break;
        case RoleKind::Universal:
            ts.push_back(cf);
            break;
        }
    }
    return ts;
}

int Grounding::at_least_lit(const std::vector<int>& ts, std::uint64_t n) {
    int d = static_cast<int>(ts.size());
    if (n == 0) return s_.true_lit();
    if (n > static_cast<std::uint64_t>(d)) return -s_.true_lit();
    int v = s_.new_var();
    int k = static_cast<int>(n);
    // v -> every (d-k+1)-subset contains a true
    std::vector<int> idx(static_cast<std::size_t>(d - k + 1));
    auto choose = [&](auto&& self, int start, int depth, int need, auto&& sink) -> void {
        if (depth == need) {
            sink();
            return;
        }
        for (int i = start; i <= d - (need - depth); ++i) {
            idx[static_cast<std::size_t>(depth)] = i;
            self(self, i + 1, depth + 1, need, sink);
        }
    };
    choose(choose, 0, 0, d - k + 1, [&] {
        std::vector<int> cl{-v};
        for (int i = 0; i < d - k + 1; ++i) cl.push_back(ts[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]);
        s_.add_clause(cl);
    });
    // not v -> every k-subset contains a false
    choose(choose, 0, 0, k, [&] {
        std::vector<int> cl{v};
        for (int i = 0; i < k; ++i) cl.push_back(-ts[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]);
        s_.add_clause(cl);
    });
    return v;
}

int Grounding::compile(const Concept& c, int e) {
    auto key = std::make_pair(c.node(), e);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    int lit = 0;
    switch (c.kind()) {
    case CKind::Top:
        lit = s_.true_lit();
        break;
    case CKind::Bot:
        lit = -s_.true_lit();
        break;
    case CKind::Name:
        lit = concept_var(c.name(), e);
        break;
    case CKind::Nominal:
        lit = indiv_var(c.name(), e);
        break;
    case CKind::Not:
        lit = -compile(c.left(), e);
        break;
    case CKind::And:
        lit = s_.make_and({compile(c.left(), e), compile(c.right(), e)});
        break;
    case CKind::Or:
        lit = s_.make_or({compile(c.left(), e), compile(c.right(), e)});
        break;
    case CKind::Exists:
        lit = s_.make_or(successor_conjuncts(c.role(), e, c.left()));
        break;
    case CKind::Forall: {
        std::vector<int> parts;
        for (int f = 0; f < d_; ++f) {
            int cf = compile(c.left(), f);
            switch (c.role().kind) {
            case RoleKind::Named:
                parts.push_back(s_.make_or({-role_var(c.role().name, e, f), cf}));
                break;
            case RoleKind::Inverse:
                parts.push_back(s_.make_or({-role_var(c.role().name, f, e), cf}));
                break;
            case RoleKind::Universal:
                parts.push_back(cf);
                break;
            }
        }
        lit = s_.make_and(parts);
        break;
    }
    case CKind::AtLeast:
        lit = at_least_lit(successor_conjuncts(c.role(), e, c.left()), c.num());
        break;
    case CKind::AtMost:
        lit = -at_least_lit(successor_conjuncts(c.role(), e, c.left()), c.num() + 1);
        break;
    }
    memo_.emplace(key, lit);
    return lit;
}

void Grounding::require_axiom(const Axiom& ax) {
    for (int e = 0; e < d_; ++e) {
        s_.add_clause({-compile(ax.lhs, e), compile(ax.rhs, e)});
        if (ax.kind == AxKind::Definition)
            s_.add_clause({compile(ax.lhs, e), -compile(ax.rhs, e)});
    }
}

void Grounding::require_concept_assertion(const ConceptAssertion& ca) {
    for (int e = 0; e < d_; ++e)
        s_.add_clause({-indiv_var(ca.indiv, e), compile(ca.c, e)});
}

void Grounding::require_role_assertion(const RoleAssertion& ra) {
    for (int e = 0; e < d_; ++e)
        for (int f = 0; f < d_; ++f)
            s_.add_clause({-indiv_var(ra.a, e), -indiv_var(ra.b, f), role_var(ra.role, e, f)});
}

void Grounding::require_kb(const ValidatedKB& v) {
    for (const auto& ax : v.kb.tbox) require_axiom(ax);
    for (const auto& ca : v.kb.abox.concept_assertions) require_concept_assertion(ca);
    for (const auto& ra : v.kb.abox.role_assertions) require_role_assertion(ra);
}

void Grounding::require_nonempty(const Concept& c) {
    std::vector<int> any;
    for (int e = 0; e < d_; ++e) any.push_back(compile(c, e));
    s_.add_clause(any);
}

void Grounding::pin(const Interpretation& partial) {
    for (const auto& [n, ext] : partial.concepts) {
        if (!cbase_.count(n)) continue;
        for (int e = 0; e < d_; ++e)
            s_.add_unit(ext.count(e) ? concept_var(n, e) : -concept_var(n, e));
    }
    for (const auto& [n, ext] : partial.roles) {
        if (!rbase_.count(n)) continue;
        for (int e = 0; e < d_; ++e)
            for (int f = 0; f < d_; ++f)
                s_.add_unit(ext.count({e, f}) ? role_var(n, e, f) : -role_var(n, e, f));
    }
    for (const auto& [a, e] : partial.individuals) {
        if (!ibase_.count(a)) continue;
        s_.add_unit(indiv_var(a, e));
    }
}

void Grounding::add_symmetry_breaking() {
    for (std::size_t k = 1; k < sig_.individuals.size(); ++k) {
        const auto& ak = sig_.individuals[k];
        for (int e = 1; e < d_; ++e) {
            // ak may take e only if some predecessor reaches e-1 or beyond
            std::vector<int> cl{-indiv_var(ak, e)};
            for (std::size_t j = 0; j < k; ++j)
                for (int f = e - 1; f < d_; ++f) cl.push_back(indiv_var(sig_.individuals[j], f));
            s_.add_clause(cl);
        }
    }
    if (!sig_.individuals.empty()) s_.add_unit(indiv_var(sig_.individuals[0], 0));
}

std::vector<int> Grounding::ext_vars(const std::string& p, PredKind k) const {
    std::vector<int> out;
    if (k == PredKind::ConceptName) {
        for (int e = 0; e < d_; ++e) out.push_back(concept_var(p, e));
    } else {
        for (int e = 0; e < d_; ++e)
            for (int f = 0; f < d_; ++f) out.push_back(role_var(p, e, f));
    }
    return out;
}

std::vector<char> Grounding::ext_bits(const Interpretation& i, const std::string& p,
                                      PredKind k) const {
    std::vector<char> out;
    if (k == PredKind::ConceptName) {
        auto ext = i.concept_ext(p);
        for (int e = 0; e < d_; ++e) out.push_back(ext.count(e) ? 1 : 0);
    } else {
        auto ext = i.role_ext(p);
        for (int e = 0; e < d_; ++e)
            for (int f = 0; f < d_; ++f) out.push_back(ext.count({e, f}) ? 1 : 0);
    }
    return out;
}

void Grounding::require_preferred_than(const Interpretation& i, const ValidatedKB& v) {
    // condition 1: same individual map
    for (const auto& a : sig_.individuals) {
        auto it = i.individuals.find(a);
        if (it != i.individuals.end()) s_.add_unit(indiv_var(a, it->second));
    }
    // condition 2: fixed predicates coincide with i
    for (const auto& p : v.kb.pattern.fixed) {
        if (v.kind_of(p) == PredKind::ConceptName ? !cbase_.count(p) : !rbase_.count(p)) continue;
        auto vars = ext_vars(p, v.kind_of(p));
        auto bits = ext_bits(i, p, v.kind_of(p));
        for (std::size_t x = 0; x < vars.size(); ++x) s_.add_unit(bits[x] ? vars[x] : -vars[x]);
    }
    auto subset_lit = [&](const std::string& p) { // p^J included in p^i
        auto vars = ext_vars(p, v.kind_of(p));
        auto bits = ext_bits(i, p, v.kind_of(p));
        std::vector<int> conj;
        for (std::size_t x = 0; x < vars.size(); ++x)
            if (!bits[x]) conj.push_back(-vars[x]);
        return s_.make_and(conj);
    };
    auto strict_lit = [&](const std::string& p) { // p^J strictly below p^i
        auto vars = ext_vars(p, v.kind_of(p));
        auto bits = ext_bits(i, p, v.kind_of(p));
        std::vector<int> missing;
        for (std::size_t x = 0; x < vars.size(); ++x)
            if (bits[x]) missing.push_back(-vars[x]);
        return s_.make_and({subset_lit(p), s_.make_or(missing)});
    };
    auto equal_lit = [&](const std::string& p) {
        auto vars = ext_vars(p, v.kind_of(p));
        auto bits = ext_bits(i, p, v.kind_of(p));
        std::vector<int> conj;
        for (std::size_t x = 0; x < vars.size(); ++x) conj.push_back(bits[x] ? vars[x] : -vars[x]);
        return s_.make_and(conj);
    };
    // condition 3
    for (const auto& p : v.kb.pattern.minimized) {
        std::vector<int> alts{subset_lit(p)};
        for (const auto& q : v.kb.pattern.minimized)
            if (v.prec.count({q, p})) alts.push_back(strict_lit(q));
        s_.add_unit(s_.make_or(alts));
    }
    // condition 4
    std::vector<int> cases;
    for (const auto& p : v.kb.pattern.minimized) {
        std::vector<int> conj{strict_lit(p)};
        for (const auto& q : v.kb.pattern.minimized)
            if (v.prec.count({q, p})) conj.push_back(equal_lit(q));
        cases.push_back(s_.make_and(conj));
    }
    s_.add_unit(s_.make_or(cases));
}

void Grounding::forbid_preferred_than(const Interpretation& j, const ValidatedKB& v) {
    std::vector<int> conj;
    // condition 1: the solved I uses j's individual map
    for (const auto& a : sig_.individuals) {
        auto it = j.individuals.find(a);
        if (it != j.individuals.end()) conj.push_back(indiv_var(a, it->second));
    }
    // condition 2: fixed extensions equal j's
    for (const auto& p : v.kb.pattern.fixed) {
        if (v.kind_of(p) == PredKind::ConceptName ? !cbase_.count(p) : !rbase_.count(p)) continue;
        auto vars = ext_vars(p, v.kind_of(p));
        auto bits = ext_bits(j, p, v.kind_of(p));
        for (std::size_t x = 0; x < vars.size(); ++x) conj.push_back(bits[x] ? vars[x] : -vars[x]);
    }
    auto subset_lit = [&](const std::string& p) { // p^j included in p^I
        auto vars = ext_vars(p, v.kind_of(p));
        auto bits = ext_bits(j, p, v.kind_of(p));
        std::vector<int> c2;
        for (std::size_t x = 0; x < vars.size(); ++x)
            if (bits[x]) c2.push_back(vars[x]);
        return s_.make_and(c2);
    };
    auto strict_lit = [&](const std::string& p) { // p^j strictly below p^I
        auto vars = ext_vars(p, v.kind_of(p));
        auto bits = ext_bits(j, p, v.kind_of(p));
        std::vector<int> extra;
        for (std::size_t x = 0; x < vars.size(); ++x)
            if (!bits[x]) extra.push_back(vars[x]);
        return s_.make_and({subset_lit(p), s_.make_or(extra)});
    };
    auto equal_lit = [&](const std::string& p) {
        auto vars = ext_vars(p, v.kind_of(p));
        auto bits = ext_bits(j, p, v.kind_of(p));
        std::vector<int> c2;
        for (std::size_t x = 0; x < vars.size(); ++x) c2.push_back(bits[x] ? vars[x] : -vars[x]);
        return s_.make_and(c2);
    };
    for (const auto& p : v.kb.pattern.minimized) {
        std::vector<int> alts{subset_lit(p)};
        for (const auto& q : v.kb.pattern.minimized)
            if (v.prec.count({q, p})) alts.push_back(strict_lit(q));
        conj.push_back(s_.make_or(alts));
    }
    std::vector<int> cases;
    for (const auto& p : v.kb.pattern.minimized) {
        std::vector<int> c4{strict_lit(p)};
        for (const auto& q : v.kb.pattern.minimized)
            if (v.prec.count({q, p})) c4.push_back(equal_lit(q));
        cases.push_back(s_.make_and(c4));
    }
    conj.push_back(s_.make_or(cases));
    s_.add_unit(-s_.make_and(conj));
}

std::optional<Interpretation> Grounding::next_model() {
    auto m = s_.solve(order_);
    if (!m) return std::nullopt;
    Interpretation out;
    out.size = d_;
    for (const auto& [n, base] : cbase_) {
        auto& ext = out.concepts[n];
        for (int e = 0; e < d_; ++e)
            if ((*m)[static_cast<std::size_t>(base + e)] == 1) ext.insert(e);
    }
    for (const auto& [n, base] : rbase_) {
        auto& ext = out.roles[n];
        for (int e = 0; e < d_; ++e)
            for (int f = 0; f < d_; ++f)
                if ((*m)[static_cast<std::size_t>(base + e * d_ + f)] == 1) ext.insert({e, f});
    }
    for (const auto& [a, base] : ibase_)
        for (int e = 0; e < d_; ++e)
            if ((*m)[static_cast<std::size_t>(base + e)] == 1) out.individuals[a] = e;
    return out;
}

Grounding::Sig ground_signature(const ValidatedKB& v, const std::vector<Concept>& extra_concepts,
                                const std::vector<std::string>& extra_individuals) {
    std::set<std::string> cs(v.sig.concepts.begin(), v.sig.concepts.end());
    std::set<std::string> rs(v.sig.roles.begin(), v.sig.roles.end());
    std::set<std::string> is(v.sig.individuals.begin(), v.sig.individuals.end());
    for (const auto* pat : {&v.kb.pattern.minimized, &v.kb.pattern.fixed})
        for (const auto& p : *pat)
            (v.kind_of(p) == PredKind::RoleName ? rs : cs).insert(p);
    for (const auto& c : extra_concepts) {
        Signature qs = signature_of(c);
        cs.insert(qs.concepts.begin(), qs.concepts.end());
        rs.insert(qs.roles.begin(), qs.roles.end());
        is.insert(qs.individuals.begin(), qs.individuals.end());
    }
    for (const auto& a : extra_individuals) is.insert(a);
    Grounding::Sig sig;
    sig.concepts.assign(cs.begin(), cs.end());
    sig.roles.assign(rs.begin(), rs.end());
    sig.individuals.assign(is.begin(), is.end());
    return sig;
}

} // namespace circ
