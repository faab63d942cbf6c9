#include "circ/engine.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "circ/classify.hpp"
#include "circ/metrics.hpp"
#include "circ/oracle.hpp"

namespace circ {

std::optional<Interpretation> classical_model_search(const std::vector<Axiom>& tbox,
                                                     const Abox& abox,
                                                     const std::vector<Concept>& nonempty, int d,
                                                     const Interpretation& pinned) {
    CircKB kb;
    kb.tbox = tbox;
    kb.abox = abox;
    ValidatedKB v = validate(kb);
    std::vector<Concept> extras = nonempty;
    std::vector<std::string> indivs;
    for (const auto& [n, ext] : pinned.concepts) extras.push_back(Concept::name(n));
    for (const auto& [a, e] : pinned.individuals) indivs.push_back(a);
    Grounding g(d, ground_signature(v, extras, indivs));
    g.require_kb(v);
    for (const auto& c : nonempty) g.require_nonempty(c);
    g.pin(pinned);
    return g.next_model();
}

namespace {

Grounding make_search_grounding(int d, const ValidatedKB& v, const std::vector<Concept>& extras) {
    return Grounding(d, ground_signature(v, extras, {}));
}

} // namespace

std::optional<Interpretation> find_preferred(const Interpretation& i, const ValidatedKB& v) {
    Grounding g = make_search_grounding(i.size, v, {});
    g.require_kb(v);
    g.require_preferred_than(i, v);
    return g.next_model();
}

bool is_circ_model(const Interpretation& i, const ValidatedKB& v) {
    if (!is_model(i, v.kb)) return false;
    return !find_preferred(i, v).has_value();
}

namespace {

// Guess-and-refute loop at a fixed domain size. Enumerates candidate models in
// lexicographic order; a candidate beaten by some j is discarded along with
// everything else j beats, so the first survivor is the least circumscribed
// model.
std::optional<Interpretation> circ_model_at(const Concept& c0, const ValidatedKB& v, int d) {
    Grounding g = make_search_grounding(d, v, {c0});
    g.require_kb(v);
    g.require_nonempty(c0);
    if (v.sig.individuals.empty()) {
        // no individual map to canonicalize
    } else {
        g.add_symmetry_breaking();
    }
    for (;;) {
        auto cand = g.next_model();
        if (!cand) return std::nullopt;
        auto better = find_preferred(*cand, v);
        if (!better) return cand;
        g.forbid_preferred_than(*better, v);
    }
}

Verdict finish_unsat(const Concept& c0, const ValidatedKB& v, const SearchConfig& cfg) {
    Verdict out = Verdict::exhausted(cfg.max_domain);
    if (!cfg.certify) return out;
    auto mode = admissible_bound_mode(v, c0);
    if (!mode) {
        out.notes.push_back("certification unavailable: no admissible completeness bound");
        return out;
    }
    BigInt bound = completeness_bound(v, c0, *mode);
    if (BigInt(cfg.max_domain) >= bound) {
        Verdict cert = Verdict::certified(cfg.max_domain);
        cert.notes.push_back("completeness bound " + bigint_brief(bound) + " covered");
        return cert;
    }
    out.notes.push_back("verdict is bounded only: completeness bound is " + bigint_brief(bound));
    return out;
}

} // namespace

Verdict circ_sat(const Concept& c0, const ValidatedKB& vin, const SearchConfig& cfg) {
    ValidatedKB v = vin;
    register_query_names(v, c0);
    if (cfg.strategy == SearchConfig::Strategy::BruteForce) {
        OracleConfig ocfg;
        ocfg.d_max = cfg.max_domain;
        Verdict o = oracle_sat(c0, v, ocfg);
        if (o.is_sat()) return o;
        return finish_unsat(c0, v, cfg);
    }
#ifdef _OPENMP
    if (cfg.threads > 1) {
        std::vector<std::optional<Interpretation>> found(static_cast<std::size_t>(cfg.max_domain));
        #pragma omp parallel for schedule(dynamic, 1) num_threads(cfg.threads)
        for (int d = 1; d <= cfg.max_domain; ++d)
            found[static_cast<std::size_t>(d - 1)] = circ_model_at(c0, v, d);
        for (int d = 1; d <= cfg.max_domain; ++d)
            if (found[static_cast<std::size_t>(d - 1)])
                return Verdict::sat(*found[static_cast<std::size_t>(d - 1)], d);
        return finish_unsat(c0, v, cfg);
    }
#endif
    for (int d = 1; d <= cfg.max_domain; ++d)
        if (auto m = circ_model_at(c0, v, d)) return Verdict::sat(*m, d);
    return finish_unsat(c0, v, cfg);
}

namespace {

EntailVerdict entail_from(const Verdict& s) {
    EntailVerdict out;
    switch (s.tag) {
    case Verdict::Tag::Sat:
        out.tag = EntailVerdict::Tag::Countermodel;
        out.witness = s.witness;
        out.domain_size = s.domain_size;
        break;
    case Verdict::Tag::Exhausted:
        out.tag = EntailVerdict::Tag::HoldsUpTo;
        out.bound = s.bound;
        break;
    case Verdict::Tag::UnsatCertified:
        out.tag = EntailVerdict::Tag::HoldsCertified;
        out.bound = s.bound;
        break;
    }
    out.notes = s.notes;
    return out;
}

} // namespace

EntailVerdict circ_subsumes(const Concept& c, const Concept& d, const ValidatedKB& v,
                            const SearchConfig& cfg) {
    return entail_from(circ_sat(Concept::conj(c, Concept::neg(d)), v, cfg));
}

EntailVerdict circ_instance(const std::string& a, const Concept& c, const ValidatedKB& v,
                            const SearchConfig& cfg) {
    // fresh marker concept asserted at a, added to the minimized set
    FreshNames fresh;
    fresh.reserve(v.sig);
    Signature qs = signature_of(c);
    fresh.reserve(qs);
    std::string marker = fresh.fresh("inst");
    CircKB kb2 = v.kb;
    kb2.abox.concept_assertions.push_back({a, Concept::name(marker)});
    kb2.pattern.minimized.insert(marker);
    ValidatedKB v2 = validate(kb2);
    return entail_from(circ_sat(Concept::conj(Concept::name(marker), Concept::neg(c)), v2, cfg));
}

BigInt completeness_bound(const ValidatedKB& v, const Concept& c0, BoundMode mode) {
    Fragment f = detect_fragment(v.kb);
    f.scan(c0);
    auto pow2 = [](std::uint64_t e) {
        BigInt r = 1;
        return r << static_cast<unsigned>(e);
    };
    switch (mode) {
    case BoundMode::ConceptCircAlcio: {
        if (!v.concept_circumscribed())
            throw ValidationError("bound mode requires a concept circumscription pattern");
        if (f.counting) throw ValidationError("bound mode excludes number restrictions");
        std::uint64_t n = size_of(c0) + size_of(v.kb.tbox) + size_of(v.kb.abox);
        return pow2(2 * n);
    }
    case BoundMode::ConceptCircAlcqo: {
        if (!v.concept_circumscribed())
            throw ValidationError("bound mode requires a concept circumscription pattern");
        if (f.inverses) throw ValidationError("bound mode excludes inverse roles");
        std::uint64_t n = size_of(c0) + size_of(v.kb.tbox) + size_of(v.kb.abox);
        std::uint64_t m = max_number_parameter(c0);
        for (const auto& ax : v.kb.tbox) {
            m = std::max(m, max_number_parameter(ax.lhs));
            m = std::max(m, max_number_parameter(ax.rhs));
        }
        for (const auto& ca : v.kb.abox.concept_assertions)
            m = std::max(m, max_number_parameter(ca.c));
        return pow2(2 * n) * BigInt(m + 1) * BigInt(n);
    }
    case BoundMode::RoleMinEmptyTbox: {
        if (!v.kb.tbox.empty()) throw ValidationError("bound mode requires an empty TBox");
        if (!v.role_minimizing()) throw ValidationError("bound mode forbids fixed role names");
        if (f.inverses) throw ValidationError("bound mode excludes inverse roles");
        std::uint64_t n = role_depth(c0);
        std::uint64_t m0 = max_number_parameter(c0);
        for (const auto& ca : v.kb.abox.concept_assertions) {
            n = std::max(n, role_depth(ca.c));
            m0 = std::max(m0, max_number_parameter(ca.c));
        }
        BigInt base = BigInt(m0 + 1) * BigInt(size_of(v.kb.abox) + size_of(c0));
        BigInt out = 1;
        for (std::uint64_t i = 0; i <= n; ++i) out *= base;
        return out;
    }
    }
    throw ValidationError("unknown bound mode");
}

std::optional<BoundMode> admissible_bound_mode(const ValidatedKB& v, const Concept& c0) {
    Fragment f = detect_fragment(v.kb);
    f.scan(c0);
    if (f.universal) return std::nullopt;
    if (v.concept_circumscribed()) {
        if (!f.counting) return BoundMode::ConceptCircAlcio;
        if (!f.inverses) return BoundMode::ConceptCircAlcqo;
        return std::nullopt;
    }
    if (v.role_minimizing() && v.kb.tbox.empty() && !f.inverses) return BoundMode::RoleMinEmptyTbox;
    return std::nullopt;
}

std::string bigint_brief(const BigInt& n) {
    std::ostringstream os;
    if (n < BigInt(1000000000)) {
        os << n;
        return os.str();
    }
    std::string digits = n.str();
    os << digits[0] << "." << digits.substr(1, 3) << "e" << (digits.size() - 1);
    return os.str();
}

} // namespace circ
