#include "circ/counting.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "circ/printer.hpp"
#include "circ/reductions.hpp"
#include "textscan.hpp"

namespace circ {

CFormula cf_conj(const std::vector<CFormula>& parts) {
    if (parts.empty()) return CFormula::card(Concept::bot(), 0);
    CFormula acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = CFormula::conj(acc, parts[i]);
    return acc;
}

bool eval_cf(const Interpretation& i, const CFormula& f) {
    switch (f.kind()) {
    case CFKind::Incl: {
        auto l = eval_concept(i, f.lhs());
        auto r = eval_concept(i, f.rhs());
        for (int e : l)
            if (!r.count(e)) return false;
        return true;
    }
    case CFKind::Assert: {
        auto it = i.individuals.find(f.indiv());
        if (it == i.individuals.end()) throw EvalError("individual '" + f.indiv() + "' is not mapped");
        return eval_concept(i, f.lhs()).count(it->second) != 0;
    }
    case CFKind::Card:
        return BigInt(eval_concept(i, f.lhs()).size()) == f.count();
    case CFKind::Not:
        return !eval_cf(i, f.left());
    case CFKind::And:
        return eval_cf(i, f.left()) && eval_cf(i, f.right());
    case CFKind::Or:
        return eval_cf(i, f.left()) || eval_cf(i, f.right());
    case CFKind::Implies:
        return !eval_cf(i, f.left()) || eval_cf(i, f.right());
    }
    return false;
}

// ---------------------------------------------------------------- text form

namespace {

struct CfParser : detail::TokenParser {
    using TokenParser::TokenParser;

    CFormula formula() {
        CFormula l = or_formula();
        if (at_punct("->")) {
            take();
            return CFormula::implies(l, formula());
        }
        return l;
    }
    CFormula or_formula() {
        CFormula l = and_formula();
        while (at_punct("|")) {
            take();
            l = CFormula::disj(l, and_formula());
        }
        return l;
    }
    CFormula and_formula() {
        CFormula l = not_formula();
        while (at_punct("&")) {
            take();
            l = CFormula::conj(l, not_formula());
        }
        return l;
    }
    CFormula not_formula() {
        if (at_punct("!")) {
            take();
            return CFormula::neg(not_formula());
        }
        return primary();
    }
    CFormula primary() {
        if (at_kw("card")) {
            take();
            expect_punct("(");
            Concept c = concept_expr();
            expect_punct(")");
            expect_punct("=");
            if (peek().kind != detail::Tok::Int) fail("expected integer", "INT");
            BigInt n(take().text);
            return CFormula::card(c, n);
        }
        if (peek().kind == detail::Tok::Name && peek(1).kind == detail::Tok::Punct &&
            peek(1).text == ":") {
            std::string a = take().text;
            take();
            return CFormula::assertion(concept_expr(), a);
        }
        if (at_punct("(")) {
            std::size_t save = pos;
            take();
            try {
                CFormula f = formula();
                expect_punct(")");
                return f;
            } catch (const ParseError&) {
                pos = save; // the parenthesis opened a concept
            }
        }
        Concept l = concept_expr();
        expect_punct("<=");
        return CFormula::incl(l, concept_expr());
    }
};

int prec_of(CFKind k) {
    switch (k) {
    case CFKind::Implies:
        return 0;
    case CFKind::Or:
        return 1;
    case CFKind::And:
        return 2;
    case CFKind::Not:
        return 3;
    default:
        return 4;
    }
}

void render_cf(std::ostringstream& os, const CFormula& f, int min_prec) {
    int p = prec_of(f.kind());
    bool parens = p < min_prec;
    if (parens) os << "(";
    switch (f.kind()) {
    case CFKind::Incl:
        os << render_concept(f.lhs()) << " <= " << render_concept(f.rhs());
        break;
    case CFKind::Assert:
        os << f.indiv() << " : " << render_concept(f.lhs());
        break;
    case CFKind::Card:
        os << "card(" << render_concept(f.lhs()) << ") = " << f.count();
        break;
    case CFKind::Not:
        os << "!";
        render_cf(os, f.left(), 4);
        break;
    case CFKind::And:
        render_cf(os, f.left(), 2);
        os << " & ";
        render_cf(os, f.right(), 3);
        break;
    case CFKind::Or:
        render_cf(os, f.left(), 1);
        os << " | ";
        render_cf(os, f.right(), 2);
        break;
    case CFKind::Implies:
        render_cf(os, f.left(), 1);
        os << " -> ";
        render_cf(os, f.right(), 0);
        break;
    }
    if (parens) os << ")";
}

} // namespace

CFormula parse_cformula(const std::string& text) {
    CfParser p(text);
    CFormula f = p.formula();
    if (p.peek().kind != detail::Tok::End) p.fail("trailing input after formula");
    return f;
}

std::string render_cformula(const CFormula& f) {
    std::ostringstream os;
    render_cf(os, f, 0);
    return os.str();
}

// ---------------------------------------------------------------- grounding

namespace {

void cf_signature(const CFormula& f, Signature& out) {
    switch (f.kind()) {
    case CFKind::Incl:
        collect_signature(f.lhs(), out);
        collect_signature(f.rhs(), out);
        return;
    case CFKind::Assert:
        out.individuals.insert(f.indiv());
        collect_signature(f.lhs(), out);
        return;
    case CFKind::Card:
        collect_signature(f.lhs(), out);
        return;
    case CFKind::Not:
        cf_signature(f.left(), out);
        return;
    case CFKind::And:
    case CFKind::Or:
    case CFKind::Implies:
        cf_signature(f.left(), out);
        cf_signature(f.right(), out);
        return;
    }
}

int compile_cf(Grounding& g, const CFormula& f) {
    Solver& s = g.solver();
    switch (f.kind()) {
    case CFKind::Incl: {
        std::vector<int> parts;
        for (int e = 0; e < g.domain(); ++e)
            parts.push_back(s.make_or({-g.compile(f.lhs(), e), g.compile(f.rhs(), e)}));
        return s.make_and(parts);
    }
    case CFKind::Assert: {
        std::vector<int> parts;
        for (int e = 0; e < g.domain(); ++e)
            parts.push_back(s.make_or({-g.indiv_var(f.indiv(), e), g.compile(f.lhs(), e)}));
        return s.make_and(parts);
    }
    case CFKind::Card: {
        if (f.count() > BigInt(g.domain())) return -s.true_lit();
        std::uint64_t n = f.count().convert_to<std::uint64_t>();
        std::vector<int> bits;
        for (int e = 0; e < g.domain(); ++e) bits.push_back(g.compile(f.lhs(), e));
        return s.make_and({g.at_least_lit(bits, n), -g.at_least_lit(bits, n + 1)});
    }
    case CFKind::Not:
        return -compile_cf(g, f.left());
    case CFKind::And:
        return s.make_and({compile_cf(g, f.left()), compile_cf(g, f.right())});
    case CFKind::Or:
        return s.make_or({compile_cf(g, f.left()), compile_cf(g, f.right())});
    case CFKind::Implies:
        return s.make_or({-compile_cf(g, f.left()), compile_cf(g, f.right())});
    }
    return 0;
}

std::optional<Interpretation> cf_model_at(const CFormula& f, int d) {
    Signature fs;
    cf_signature(f, fs);
    Grounding::Sig sig;
    sig.concepts.assign(fs.concepts.begin(), fs.concepts.end());
    sig.roles.assign(fs.roles.begin(), fs.roles.end());
    sig.individuals.assign(fs.individuals.begin(), fs.individuals.end());
    Grounding g(d, sig);
    g.add_symmetry_breaking();
    g.solver().add_unit(compile_cf(g, f));
    return g.next_model();
}

} // namespace

Verdict cf_bounded_sat(const CFormula& f, int max_domain) {
    for (int d = 1; d <= max_domain; ++d)
        if (auto m = cf_model_at(f, d)) return Verdict::sat(*m, d);
    return Verdict::exhausted(max_domain);
}

// ---------------------------------------------------------------- profiles

namespace {

std::vector<std::string> minimized_names(const ValidatedKB& v) {
    return std::vector<std::string>(v.kb.pattern.minimized.begin(), v.kb.pattern.minimized.end());
}

Concept cell_concept(const std::vector<std::string>& m, std::size_t mask) {
    std::vector<Concept> parts;
    for (std::size_t i = 0; i < m.size(); ++i)
        parts.push_back(mask & (1ull << i) ? Concept::name(m[i])
                                           : Concept::neg(Concept::name(m[i])));
    return nary_and(parts);
}

std::vector<std::string> guess_individuals(const ValidatedKB& v, const Concept& c0) {
    std::set<std::string> is = v.sig.individuals;
    Signature qs = signature_of(c0);
    is.insert(qs.individuals.begin(), qs.individuals.end());
    return std::vector<std::string>(is.begin(), is.end());
}

std::vector<CFormula> kb_atoms(const CircKB& kb, const std::function<Concept(const Concept&)>& tr,
                               const std::function<std::string(const std::string&)>& trr) {
    std::vector<CFormula> parts;
    for (const auto& ax : kb.tbox) {
        parts.push_back(CFormula::incl(tr(ax.lhs), tr(ax.rhs)));
        if (ax.kind == AxKind::Definition) parts.push_back(CFormula::incl(tr(ax.rhs), tr(ax.lhs)));
    }
    for (const auto& ca : kb.abox.concept_assertions)
        parts.push_back(CFormula::assertion(tr(ca.c), ca.indiv));
    for (const auto& ra : kb.abox.role_assertions)
        parts.push_back(CFormula::assertion(
            Concept::exists(Role::named(trr(ra.role)), Concept::nominal(ra.b)), ra.a));
    return parts;
}

void profile_atoms(const ValidatedKB& v, const Guess& g, std::vector<CFormula>& parts) {
    std::vector<std::string> m = minimized_names(v);
    for (std::size_t mask = 0; mask < g.cell_counts.size(); ++mask)
        parts.push_back(CFormula::card(cell_concept(m, mask), g.cell_counts[mask]));
    for (const auto& [a, mask] : g.indiv_cell)
        parts.push_back(CFormula::assertion(cell_concept(m, mask), a));
    std::vector<std::string> indivs;
    for (const auto& [a, mask] : g.indiv_cell) indivs.push_back(a);
    for (const auto& a : indivs)
        for (const auto& b : indivs) {
            CFormula eq = CFormula::incl(Concept::nominal(a), Concept::nominal(b));
            parts.push_back(g.equal.count({a, b}) ? eq : CFormula::neg(eq));
        }
}

} // namespace

CFormula build_phi1(const ValidatedKB& v, const Concept& c0, const Guess& g) {
    if (!v.kb.pattern.fixed.empty())
        throw ValidationError("profile construction requires no fixed predicates");
    auto id = [](const Concept& c) { return c; };
    auto idr = [](const std::string& r) { return r; };
    std::vector<CFormula> parts = kb_atoms(v.kb, id, idr);
    parts.push_back(CFormula::neg(CFormula::card(c0, 0)));
    profile_atoms(v, g, parts);
    return cf_conj(parts);
}

CFormula build_phi2(const ValidatedKB& v, const Guess& g) {
    if (!v.kb.pattern.fixed.empty())
        throw ValidationError("profile construction requires no fixed predicates");
    // prime every concept and role name of the KB
    FreshNames fresh;
    fresh.reserve(v.sig);
    std::map<std::string, std::string> cmap, rmap;
    for (const auto& n : v.sig.concepts) cmap[n] = fresh.fresh(n + "'");
    for (const auto& n : v.kb.pattern.minimized) cmap.emplace(n, fresh.fresh(n + "'"));
    for (const auto& n : v.sig.roles) rmap[n] = fresh.fresh(n + "'");

    std::function<Concept(const Concept&)> prime = [&](const Concept& c) -> Concept {
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
            return Concept::neg(prime(c.left()));
        case CKind::And:
            return Concept::conj(prime(c.left()), prime(c.right()));
        case CKind::Or:
            return Concept::disj(prime(c.left()), prime(c.right()));
        case CKind::AtLeast:
        case CKind::AtMost:
        case CKind::Exists:
        case CKind::Forall: {
            Role r = c.role();
            if (r.kind != RoleKind::Universal) {
                auto it = rmap.find(r.name);
                if (it != rmap.end()) r.name = it->second;
            }
            switch (c.kind()) {
            case CKind::AtLeast:
                return Concept::atleast(c.num(), r, prime(c.left()));
            case CKind::AtMost:
                return Concept::atmost(c.num(), r, prime(c.left()));
            case CKind::Exists:
                return Concept::exists(r, prime(c.left()));
            default:
                return Concept::forall(r, prime(c.left()));
            }
        }
        }
        return c;
    };
    auto prime_role = [&](const std::string& r) {
        auto it = rmap.find(r);
        return it == rmap.end() ? r : it->second;
    };

    std::vector<CFormula> parts = kb_atoms(v.kb, prime, prime_role);
    profile_atoms(v, g, parts);

    std::vector<std::string> m = minimized_names(v);
    auto primed_of = [&](const std::string& n) { return Concept::name(cmap.at(n)); };
    for (const auto& a : m) {
        std::vector<CFormula> comp;
        for (const auto& b : m)
            if (v.prec.count({b, a}))
                comp.push_back(CFormula::strict(primed_of(b), Concept::name(b)));
        CFormula rhs = comp.empty() ? CFormula::card(Concept::top(), 0) // empty disjunction
                                    : comp.front();
        for (std::size_t i = 1; i < comp.size(); ++i) rhs = CFormula::disj(rhs, comp[i]);
        parts.push_back(CFormula::implies(
            CFormula::neg(CFormula::incl(primed_of(a), Concept::name(a))), rhs));
    }
    std::vector<CFormula> cases;
    for (const auto& a : m) {
        std::vector<CFormula> conj{CFormula::strict(primed_of(a), Concept::name(a))};
        for (const auto& b : m)
            if (v.prec.count({b, a})) {
                conj.push_back(CFormula::incl(Concept::name(b), primed_of(b)));
                conj.push_back(CFormula::incl(primed_of(b), Concept::name(b)));
            }
        cases.push_back(cf_conj(conj));
    }
    CFormula final_case = cases.empty() ? CFormula::card(Concept::top(), 0) : cases.front();
    for (std::size_t i = 1; i < cases.size(); ++i) final_case = CFormula::disj(final_case, cases[i]);
    parts.push_back(final_case);
    return cf_conj(parts);
}

// ---------------------------------------------------------------- procedure

namespace {

// restricted-growth strings enumerate set partitions canonically
std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int maxv) {
        if (i == n) {
            out.push_back(rgs);
            return;
        }
        for (int v2 = 0; v2 <= maxv + 1; ++v2) {
            rgs[static_cast<std::size_t>(i)] = v2;
            rec(i + 1, std::max(maxv, v2));
        }
    };
    rec(0, -1);
    return out;
}

void vectors_with_sum_at_most(int len, int bound, std::vector<BigInt>& cur,
                              const std::function<void(const std::vector<BigInt>&)>& sink) {
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == len) {
            sink(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[static_cast<std::size_t>(i)] = v;
            rec(i + 1, left - v);
        }
    };
    rec(0, bound);
}

} // namespace

Verdict theorem13_sat(const Concept& c0, const ValidatedKB& vin, const CountingConfig& cfg) {
    ValidatedKB v = vin;
    register_query_names(v, c0);
    if (!v.concept_circumscribed())
        throw ValidationError("profile-based search requires a concept circumscription pattern");

    // fold fixed concept names into the minimized set first
    auto elim = eliminate_fixed_concepts(v);
    ValidatedKB v2 = validate(elim.kb);

    std::vector<std::string> m = minimized_names(v2);
    std::size_t cells = std::size_t{1} << m.size();
    std::vector<std::string> indivs = guess_individuals(v2, c0);
    int n = static_cast<int>(indivs.size());
    int sum_cap = std::min(cfg.budget, cfg.max_domain);

    auto parts = partitions_of(n);
    // guess-space estimate
    {
        double vectors = 1;
        for (int i = 0; i < sum_cap; ++i) vectors = vectors * (static_cast<double>(cells) + i) / (i + 1);
        // vectors ~= C(cells + cap, cap); cells per class choice adds cells^n
        double est = static_cast<double>(parts.size()) * vectors *
                     std::pow(static_cast<double>(cells), static_cast<double>(n));
        if (est > cfg.guess_ceiling)
            throw ValidationError("guess-space estimate exceeds the configured ceiling");
    }

    struct Prepared {
        Guess g;
        int size;
    };
    std::vector<Prepared> guesses;
    for (const auto& rgs : parts) {
        int nclasses = 0;
        for (int c : rgs) nclasses = std::max(nclasses, c + 1);
        std::set<std::pair<std::string, std::string>> equal;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (rgs[static_cast<std::size_t>(i)] == rgs[static_cast<std::size_t>(j)])
                    equal.insert({indivs[static_cast<std::size_t>(i)], indivs[static_cast<std::size_t>(j)]});
        // cell per class
        std::vector<std::size_t> class_cell(static_cast<std::size_t>(nclasses), 0);
        std::function<void(int)> assign = [&](int k) {
            if (k == nclasses) {
                std::vector<std::size_t> class_count_per_cell(cells, 0);
                for (int c = 0; c < nclasses; ++c) ++class_count_per_cell[class_cell[static_cast<std::size_t>(c)]];
                std::vector<BigInt> cur(cells);
                vectors_with_sum_at_most(static_cast<int>(cells), sum_cap, cur,
                                         [&](const std::vector<BigInt>& vec) {
                    BigInt sum = 0;
                    for (const auto& x : vec) sum += x;
                    if (sum == 0) return;
                    for (std::size_t cell = 0; cell < cells; ++cell)
                        if (BigInt(class_count_per_cell[cell]) > vec[cell]) return;
                    Guess g;
                    g.cell_counts = vec;
                    for (int i = 0; i < n; ++i)
                        g.indiv_cell[indivs[static_cast<std::size_t>(i)]] =
                            class_cell[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])];
                    g.equal = equal;
                    guesses.push_back({std::move(g), static_cast<int>(sum.convert_to<long>())});
                });
                return;
            }
            for (std::size_t cell = 0; cell < cells; ++cell) {
                class_cell[static_cast<std::size_t>(k)] = cell;
                assign(k + 1);
            }
        };
        assign(0);
    }

    auto try_guess = [&](const Prepared& p) -> std::optional<Interpretation> {
        CFormula phi1 = build_phi1(v2, c0, p.g);
        auto m1 = cf_model_at(phi1, p.size);
        if (!m1) return std::nullopt;
        CFormula phi2 = build_phi2(v2, p.g);
        if (cf_model_at(phi2, p.size)) return std::nullopt;
        return m1;
    };

    std::optional<Interpretation> witness;
    int witness_size = 0;
#ifdef _OPENMP
    if (cfg.threads > 1) {
        std::atomic<long> best(static_cast<long>(guesses.size()));
        std::vector<std::optional<Interpretation>> results(guesses.size());
        #pragma omp parallel for schedule(dynamic, 8) num_threads(cfg.threads)
        for (long gi = 0; gi < static_cast<long>(guesses.size()); ++gi) {
            if (gi > best.load()) continue;
            auto r = try_guess(guesses[static_cast<std::size_t>(gi)]);
            if (r) {
                results[static_cast<std::size_t>(gi)] = std::move(r);
                long cur = best.load();
                while (gi < cur && !best.compare_exchange_weak(cur, gi)) {
                }
            }
        }
        for (std::size_t gi = 0; gi < guesses.size(); ++gi)
            if (results[gi]) {
                witness = results[gi];
                witness_size = guesses[gi].size;
                break;
            }
    } else
#endif
    {
        for (const auto& p : guesses) {
            if (auto r = try_guess(p)) {
                witness = r;
                witness_size = p.size;
                break;
            }
        }
    }

    if (witness) {
        Verdict out = Verdict::sat(*witness, witness_size);
        out.notes.push_back("profile sum capped at " + std::to_string(sum_cap));
        return out;
    }
    Verdict out = Verdict::exhausted(cfg.max_domain);
    out.notes.push_back("profile sum capped at " + std::to_string(sum_cap));
    return out;
}

} // namespace circ
