#include "circ/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>

namespace circ {
namespace {

// ---- index-resolved concept expressions over bit-mask interpretations ----

struct MExpr {
    CKind kind;
    int idx = -1;       // concept or individual index
    std::uint64_t num = 0;
    int role_idx = -1;  // -1 for the universal role
    bool role_inv = false;
    std::unique_ptr<MExpr> a, b;
};

struct NameIndex {
    std::vector<std::string> concepts, roles, individuals; // sorted
    int cidx(const std::string& n) const {
        return static_cast<int>(std::lower_bound(concepts.begin(), concepts.end(), n) - concepts.begin());
    }
    int ridx(const std::string& n) const {
        return static_cast<int>(std::lower_bound(roles.begin(), roles.end(), n) - roles.begin());
    }
    int iidx(const std::string& n) const {
        return static_cast<int>(std::lower_bound(individuals.begin(), individuals.end(), n) - individuals.begin());
    }
};

std::unique_ptr<MExpr> compile_mask(const Concept& c, const NameIndex& ix) {
    auto e = std::make_unique<MExpr>();
    e->kind = c.kind();
    switch (c.kind()) {
    case CKind::Top:
    case CKind::Bot:
        break;
    case CKind::Name:
        e->idx = ix.cidx(c.name());
        break;
    case CKind::Nominal:
        e->idx = ix.iidx(c.name());
        break;
    case CKind::Not:
        e->a = compile_mask(c.left(), ix);
        break;
    case CKind::And:
    case CKind::Or:
        e->a = compile_mask(c.left(), ix);
        e->b = compile_mask(c.right(), ix);
        break;
    case CKind::AtLeast:
    case CKind::AtMost:
    case CKind::Exists:
    case CKind::Forall:
        e->num = c.num();
        if (c.role().kind == RoleKind::Universal) {
            e->role_idx = -1;
        } else {
            e->role_idx = ix.ridx(c.role().name);
            e->role_inv = c.role().kind == RoleKind::Inverse;
        }
        e->a = compile_mask(c.left(), ix);
        break;
    }
    return e;
}

struct MaskView {
    int d;
    const std::vector<std::uint32_t>& cm; // per concept name: d bits
    const std::vector<std::uint64_t>& rm; // per role name: d*d bits, bit e*d+f
    const std::vector<int>& imap;         // per individual: element
};

std::uint32_t full_mask(int d) { return d >= 32 ? ~0u : ((1u << d) - 1); }

std::uint32_t successors(const MaskView& m, int role_idx, bool inv, int e) {
    if (role_idx < 0) return full_mask(m.d); // universal role
    std::uint64_t r = m.rm[static_cast<std::size_t>(role_idx)];
    std::uint32_t out = 0;
    if (!inv) {
        out = static_cast<std::uint32_t>((r >> (e * m.d)) & full_mask(m.d));
    } else {
        for (int f = 0; f < m.d; ++f)
            if (r & (1ull << (f * m.d + e))) out |= 1u << f;
    }
    return out;
}

std::uint32_t meval(const MExpr& x, const MaskView& m) {
    switch (x.kind) {
    case CKind::Top:
        return full_mask(m.d);
    case CKind::Bot:
        return 0;
    case CKind::Name:
        return m.cm[static_cast<std::size_t>(x.idx)];
    case CKind::Nominal:
        return 1u << m.imap[static_cast<std::size_t>(x.idx)];
    case CKind::Not:
        return full_mask(m.d) & ~meval(*x.a, m);
    case CKind::And:
        return meval(*x.a, m) & meval(*x.b, m);
    case CKind::Or:
        return meval(*x.a, m) | meval(*x.b, m);
    case CKind::Exists: {
        std::uint32_t sub = meval(*x.a, m), out = 0;
        for (int e = 0; e < m.d; ++e)
            if (successors(m, x.role_idx, x.role_inv, e) & sub) out |= 1u << e;
        return out;
    }
    case CKind::Forall: {
        std::uint32_t sub = meval(*x.a, m), out = 0;
        for (int e = 0; e < m.d; ++e)
            if ((successors(m, x.role_idx, x.role_inv, e) & ~sub) == 0) out |= 1u << e;
        return out;
    }
    case CKind::AtLeast:
    case CKind::AtMost: {
        std::uint32_t sub = meval(*x.a, m), out = 0;
        for (int e = 0; e < m.d; ++e) {
            int cnt = __builtin_popcount(successors(m, x.role_idx, x.role_inv, e) & sub);
            bool in = x.kind == CKind::AtLeast ? static_cast<std::uint64_t>(cnt) >= x.num
                                               : static_cast<std::uint64_t>(cnt) <= x.num;
            if (in) out |= 1u << e;
        }
        return out;
    }
    }
    return 0;
}

// ---- enumeration state ----

struct CompiledKb {
    struct Ax {
        std::unique_ptr<MExpr> l, r;
        bool definition;
    };
    std::vector<Ax> axioms;
    struct CAssert {
        int indiv;
        std::unique_ptr<MExpr> c;
    };
    std::vector<CAssert> cassert;
    struct RAssert {
        int role, a, b;
    };
    std::vector<RAssert> rassert;

    bool is_model(const MaskView& m) const {
        for (const auto& ax : axioms) {
            std::uint32_t l = meval(*ax.l, m), r = meval(*ax.r, m);
            if (ax.definition ? l != r : (l & ~r) != 0) return false;
        }
        for (const auto& ca : cassert)
            if (!(meval(*ca.c, m) & (1u << m.imap[static_cast<std::size_t>(ca.indiv)]))) return false;
        for (const auto& ra : rassert) {
            int e = m.imap[static_cast<std::size_t>(ra.a)], f = m.imap[static_cast<std::size_t>(ra.b)];
            if (!(m.rm[static_cast<std::size_t>(ra.role)] & (1ull << (e * m.d + f)))) return false;
        }
        return true;
    }
};

CompiledKb compile_kb(const CircKB& kb, const NameIndex& ix) {
    CompiledKb out;
    for (const auto& ax : kb.tbox)
        out.axioms.push_back({compile_mask(ax.lhs, ix), compile_mask(ax.rhs, ix),
                              ax.kind == AxKind::Definition});
    for (const auto& ca : kb.abox.concept_assertions)
        out.cassert.push_back({ix.iidx(ca.indiv), compile_mask(ca.c, ix)});
    for (const auto& ra : kb.abox.role_assertions)
        out.rassert.push_back({ix.ridx(ra.role), ix.iidx(ra.a), ix.iidx(ra.b)});
    return out;
}

// minimized-predicate projection: masks of the minimized names in fixed order
using MVec = std::vector<std::uint64_t>;

struct PatternView {
    // per minimized predicate (sorted): index into cm (roles offset by #concepts)
    struct Pred {
        bool is_role;
        int idx;
    };
    std::vector<Pred> minimized;
    std::vector<std::pair<int, int>> prec; // (hi, lo) indices into minimized
};

bool vec_below(const MVec& a, const MVec& b, const PatternView& pv) {
    // strict preference of a over b per the minimized-predicate conditions
    std::size_t n = pv.minimized.size();
    auto subset = [&](std::size_t p) { return (a[p] & ~b[p]) == 0; };
    auto strict = [&](std::size_t p) { return subset(p) && a[p] != b[p]; };
    for (std::size_t p = 0; p < n; ++p) {
        if (subset(p)) continue;
        bool comp = false;
        for (auto [hi, lo] : pv.prec)
            if (static_cast<std::size_t>(lo) == p && strict(static_cast<std::size_t>(hi))) {
                comp = true;
                break;
            }
        if (!comp) return false;
    }
    for (std::size_t p = 0; p < n; ++p) {
        if (!strict(p)) continue;
        bool higher_equal = true;
        for (auto [hi, lo] : pv.prec)
            if (static_cast<std::size_t>(lo) == p && a[static_cast<std::size_t>(hi)] != b[static_cast<std::size_t>(hi)]) {
                higher_equal = false;
                break;
            }
        if (higher_equal) return true;
    }
    return false;
}

struct Enumerator {
    NameIndex ix;
    PatternView pv;
    std::vector<CompiledKb> kbs;
    int d = 1;

    // free-bit layout: fixed group then the rest, each entry (is_role, idx, width)
    struct Slot {
        bool is_role;
        int idx;
        int width;
    };
    std::vector<Slot> fixed_slots, free_slots;
    int fixed_bits = 0, free_bits = 0;

    std::vector<std::uint32_t> cm;
    std::vector<std::uint64_t> rm;
    std::vector<int> imap;

    void apply_bits(const std::vector<Slot>& slots, std::uint64_t word) {
        for (const auto& s : slots) {
            std::uint64_t v = word & ((s.width >= 64 ? ~0ull : (1ull << s.width) - 1));
            word >>= s.width;
            if (s.is_role)
                rm[static_cast<std::size_t>(s.idx)] = v;
            else
                cm[static_cast<std::size_t>(s.idx)] = static_cast<std::uint32_t>(v);
        }
    }

    MVec mvec() const {
        MVec v;
        for (const auto& p : pv.minimized)
            v.push_back(p.is_role ? rm[static_cast<std::size_t>(p.idx)]
                                  : static_cast<std::uint64_t>(cm[static_cast<std::size_t>(p.idx)]));
        return v;
    }

    Interpretation decode() const {
        Interpretation out;
        out.size = d;
        for (std::size_t c = 0; c < ix.concepts.size(); ++c) {
            auto& ext = out.concepts[ix.concepts[c]];
            for (int e = 0; e < d; ++e)
                if (cm[c] & (1u << e)) ext.insert(e);
        }
        for (std::size_t r = 0; r < ix.roles.size(); ++r) {
            auto& ext = out.roles[ix.roles[r]];
            for (int e = 0; e < d; ++e)
                for (int f = 0; f < d; ++f)
                    if (rm[r] & (1ull << (e * d + f))) ext.insert({e, f});
        }
        for (std::size_t a = 0; a < ix.individuals.size(); ++a)
            out.individuals[ix.individuals[a]] = imap[a];
        return out;
    }
};

// Builds the enumerator for a merged signature. Fixed predicates of any KB go
// into the outer group; everything else is free during the minimality scan.
Enumerator make_enumerator(const std::vector<const ValidatedKB*>& vs,
                           const std::vector<Concept>& extra_concepts,
                           const std::vector<std::string>& extra_indivs) {
    Enumerator en;
    std::set<std::string> cs, rs, is, fixed, minimized;
    std::set<std::pair<std::string, std::string>> prec;
    for (const auto* v : vs) {
        cs.insert(v->sig.concepts.begin(), v->sig.concepts.end());
        rs.insert(v->sig.roles.begin(), v->sig.roles.end());
        is.insert(v->sig.individuals.begin(), v->sig.individuals.end());
        for (const auto* s : {&v->kb.pattern.minimized, &v->kb.pattern.fixed})
            for (const auto& p : *s)
                (v->kind_of(p) == PredKind::RoleName ? rs : cs).insert(p);
        fixed.insert(v->kb.pattern.fixed.begin(), v->kb.pattern.fixed.end());
        minimized.insert(v->kb.pattern.minimized.begin(), v->kb.pattern.minimized.end());
        prec.insert(v->prec.begin(), v->prec.end());
    }
    for (const auto& c : extra_concepts) {
        Signature qs = signature_of(c);
        cs.insert(qs.concepts.begin(), qs.concepts.end());
        rs.insert(qs.roles.begin(), qs.roles.end());
        is.insert(qs.individuals.begin(), qs.individuals.end());
    }
    for (const auto& a : extra_indivs) is.insert(a);
    en.ix.concepts.assign(cs.begin(), cs.end());
    en.ix.roles.assign(rs.begin(), rs.end());
    en.ix.individuals.assign(is.begin(), is.end());

    std::vector<std::string> mins(minimized.begin(), minimized.end());
    for (const auto& p : mins) {
        bool is_role = rs.count(p) && !cs.count(p);
        en.pv.minimized.push_back({is_role, is_role ? en.ix.ridx(p) : en.ix.cidx(p)});
    }
    auto min_pos = [&](const std::string& n) {
        return static_cast<int>(std::lower_bound(mins.begin(), mins.end(), n) - mins.begin());
    };
    for (const auto& [hi, lo] : prec)
        if (minimized.count(hi) && minimized.count(lo)) en.pv.prec.push_back({min_pos(hi), min_pos(lo)});

    for (const auto* v : vs) en.kbs.push_back(compile_kb(v->kb, en.ix));

    en.cm.resize(en.ix.concepts.size());
    en.rm.resize(en.ix.roles.size());
    en.imap.resize(en.ix.individuals.size());

    auto slot_for = [&](const std::string& n, bool role) {
        return Enumerator::Slot{role, role ? en.ix.ridx(n) : en.ix.cidx(n), 0};
    };
    for (std::size_t c = 0; c < en.ix.concepts.size(); ++c) {
        auto s = slot_for(en.ix.concepts[c], false);
        (fixed.count(en.ix.concepts[c]) ? en.fixed_slots : en.free_slots).push_back(s);
    }
    for (std::size_t r = 0; r < en.ix.roles.size(); ++r) {
        auto s = slot_for(en.ix.roles[r], true);
        (fixed.count(en.ix.roles[r]) ? en.fixed_slots : en.free_slots).push_back(s);
    }
    return en;
}

void set_widths(Enumerator& en) {
    en.fixed_bits = en.free_bits = 0;
    for (auto& s : en.fixed_slots) {
        s.width = s.is_role ? en.d * en.d : en.d;
        en.fixed_bits += s.width;
    }
    for (auto& s : en.free_slots) {
        s.width = s.is_role ? en.d * en.d : en.d;
        en.free_bits += s.width;
    }
}

// Walks every interpretation at size d grouped by (individual map, fixed
// extensions). For each group: first collect the minimized projections of all
// models, then stream the models again through `visit`; `circ` tells whether a
// model's projection is minimal within its group.
template <typename Visit>
bool enumerate_at(Enumerator& en, int d, double ceiling, Visit visit) {
    en.d = d;
    set_widths(en);
    double total = std::pow(static_cast<double>(d), static_cast<double>(en.imap.size())) *
                   std::pow(2.0, static_cast<double>(en.fixed_bits + en.free_bits));
    if (total > ceiling)
        throw OracleError("enumeration estimate " + std::to_string(total) +
                          " exceeds the configured ceiling");

    std::uint64_t n_imaps = 1;
    for (std::size_t k = 0; k < en.imap.size(); ++k) n_imaps *= static_cast<std::uint64_t>(d);

    MaskView view{d, en.cm, en.rm, en.imap};
    for (std::uint64_t im = 0; im < n_imaps; ++im) {
        std::uint64_t t = im;
        for (std::size_t k = 0; k < en.imap.size(); ++k) {
            en.imap[k] = static_cast<int>(t % static_cast<std::uint64_t>(d));
            t /= static_cast<std::uint64_t>(d);
        }
        for (std::uint64_t fb = 0; fb < (1ull << en.fixed_bits); ++fb) {
            en.apply_bits(en.fixed_slots, fb);
            // pass 1: minimized projections of the models in this group
            std::set<MVec> proj;
            for (std::uint64_t mb = 0; mb < (1ull << en.free_bits); ++mb) {
                en.apply_bits(en.free_slots, mb);
                bool model = true;
                for (const auto& kb : en.kbs)
                    if (!kb.is_model(view)) {
                        model = false;
                        break;
                    }
                if (model) proj.insert(en.mvec());
            }
            if (proj.empty()) continue;
            std::map<MVec, bool> minimal_memo;
            auto circ = [&](const MVec& m) {
                auto it = minimal_memo.find(m);
                if (it != minimal_memo.end()) return it->second;
                bool minimal = true;
                for (const auto& other : proj)
                    if (vec_below(other, m, en.pv)) {
                        minimal = false;
                        break;
                    }
                minimal_memo.emplace(m, minimal);
                return minimal;
            };
            // pass 2: stream models
            for (std::uint64_t mb = 0; mb < (1ull << en.free_bits); ++mb) {
                en.apply_bits(en.free_slots, mb);
                bool model = true;
                for (const auto& kb : en.kbs)
                    if (!kb.is_model(view)) {
                        model = false;
                        break;
                    }
                if (!model) continue;
                if (!visit(view, circ)) return false; // early stop
            }
        }
    }
    return true;
}

Verdict oracle_sat_impl(const Concept& c0, const std::vector<const ValidatedKB*>& vs,
                        const OracleConfig& cfg) {
    Enumerator en = make_enumerator(vs, {c0}, {});
    auto q = compile_mask(c0, en.ix);
    for (int d = 1; d <= cfg.d_max; ++d) {
        std::optional<Interpretation> found;
        enumerate_at(en, d, cfg.enumeration_ceiling, [&](const MaskView& m, auto&& circ) {
            if (meval(*q, m) == 0) return true;
            if (!circ(en.mvec())) return true;
            found = en.decode();
            return false;
        });
        if (found) return Verdict::sat(*found, d);
    }
    return Verdict::exhausted(cfg.d_max);
}

} // namespace

Verdict oracle_sat(const Concept& c0, const ValidatedKB& vin, const OracleConfig& cfg) {
    ValidatedKB v = vin;
    register_query_names(v, c0);
    return oracle_sat_impl(c0, {&v}, cfg);
}

Verdict oracle_simultaneous_sat(const Concept& c0, const std::vector<ValidatedKB>& vs,
                                const OracleConfig& cfg) {
    std::vector<const ValidatedKB*> ps;
    std::vector<ValidatedKB> copies = vs;
    for (auto& v : copies) ps.push_back(&v);
    return oracle_sat_impl(c0, ps, cfg);
}

EntailVerdict oracle_subsumes(const Concept& c, const Concept& d, const ValidatedKB& vin,
                              const OracleConfig& cfg) {
    ValidatedKB v = vin;
    register_query_names(v, c);
    register_query_names(v, d);
    Enumerator en = make_enumerator({&v}, {c, d}, {});
    auto qc = compile_mask(c, en.ix);
    auto qd = compile_mask(d, en.ix);
    EntailVerdict out;
    out.tag = EntailVerdict::Tag::HoldsUpTo;
    out.bound = cfg.d_max;
    for (int dd = 1; dd <= cfg.d_max; ++dd) {
        std::optional<Interpretation> counter;
        enumerate_at(en, dd, cfg.enumeration_ceiling, [&](const MaskView& m, auto&& circ) {
            if ((meval(*qc, m) & ~meval(*qd, m)) == 0) return true;
            if (!circ(en.mvec())) return true;
            counter = en.decode();
            return false;
        });
        if (counter) {
            out.tag = EntailVerdict::Tag::Countermodel;
            out.witness = counter;
            out.domain_size = dd;
            return out;
        }
    }
    return out;
}

EntailVerdict oracle_instance(const std::string& a, const Concept& c, const ValidatedKB& vin,
                              const OracleConfig& cfg) {
    ValidatedKB v = vin;
    register_query_names(v, c);
    Enumerator en = make_enumerator({&v}, {c}, {a});
    auto qc = compile_mask(c, en.ix);
    int ai = en.ix.iidx(a);
    EntailVerdict out;
    out.tag = EntailVerdict::Tag::HoldsUpTo;
    out.bound = cfg.d_max;
    for (int dd = 1; dd <= cfg.d_max; ++dd) {
        std::optional<Interpretation> counter;
        enumerate_at(en, dd, cfg.enumeration_ceiling, [&](const MaskView& m, auto&& circ) {
            if (meval(*qc, m) & (1u << m.imap[static_cast<std::size_t>(ai)])) return true;
            if (!circ(en.mvec())) return true;
            counter = en.decode();
            return false;
        });
        if (counter) {
            out.tag = EntailVerdict::Tag::Countermodel;
            out.witness = counter;
            out.domain_size = dd;
            return out;
        }
    }
    return out;
}

} // namespace circ
