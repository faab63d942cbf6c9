#ifndef CIRC_ENGINE_HPP
#define CIRC_ENGINE_HPP

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "circ/eval.hpp"
#include "circ/ground.hpp"
#include "circ/validate.hpp"

namespace circ {

using BigInt = boost::multiprecision::cpp_int;

struct SearchConfig {
    int max_domain = 4;
    bool certify = false;
    enum class Strategy { Backtracking, BruteForce };
    Strategy strategy = Strategy::Backtracking;
    std::optional<std::uint64_t> seed; // reserved; search order stays lexicographic
    int threads = 1;
};

struct Verdict {
    enum class Tag { Sat, Exhausted, UnsatCertified };
    Tag tag = Tag::Exhausted;
    std::optional<Interpretation> witness; // Sat
    int domain_size = 0;                   // Sat
    int bound = 0;                         // Exhausted / UnsatCertified
    std::vector<std::string> notes;

    static Verdict sat(Interpretation w, int d) { return {Tag::Sat, std::move(w), d, 0, {}}; }
    static Verdict exhausted(int b) { return {Tag::Exhausted, std::nullopt, 0, b, {}}; }
    static Verdict certified(int b) { return {Tag::UnsatCertified, std::nullopt, 0, b, {}}; }
    bool is_sat() const { return tag == Tag::Sat; }
};

struct EntailVerdict {
    enum class Tag { Countermodel, HoldsUpTo, HoldsCertified };
    Tag tag = Tag::HoldsUpTo;
    std::optional<Interpretation> witness; // Countermodel
    int domain_size = 0;
    int bound = 0;
    std::vector<std::string> notes;
    bool holds() const { return tag != Tag::Countermodel; }
};

// Complete bounded search for a classical model over exactly d elements
// extending the pinned fragment, with every listed concept non-empty.
std::optional<Interpretation> classical_model_search(const std::vector<Axiom>& tbox,
                                                     const Abox& abox,
                                                     const std::vector<Concept>& nonempty, int d,
                                                     const Interpretation& pinned);

// A model of the KB strictly preferred to i over the same domain, or none.
std::optional<Interpretation> find_preferred(const Interpretation& i, const ValidatedKB& v);

Verdict circ_sat(const Concept& c0, const ValidatedKB& v, const SearchConfig& cfg);
EntailVerdict circ_subsumes(const Concept& c, const Concept& d, const ValidatedKB& v,
                            const SearchConfig& cfg);
EntailVerdict circ_instance(const std::string& a, const Concept& c, const ValidatedKB& v,
                            const SearchConfig& cfg);

enum class BoundMode { ConceptCircAlcio, ConceptCircAlcqo, RoleMinEmptyTbox };

// Size bound on minimal witnesses for the given regime; throws
// ValidationError when the mode does not apply to the KB and query.
BigInt completeness_bound(const ValidatedKB& v, const Concept& c0, BoundMode mode);

// Picks an admissible bound mode for the KB/query, if any.
std::optional<BoundMode> admissible_bound_mode(const ValidatedKB& v, const Concept& c0);

std::string bigint_brief(const BigInt& n); // exact when small, scientific otherwise

} // namespace circ

#endif
