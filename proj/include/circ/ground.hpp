#ifndef CIRC_GROUND_HPP
#define CIRC_GROUND_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "circ/eval.hpp"
#include "circ/solver.hpp"
#include "circ/validate.hpp"

namespace circ {

// Grounds predicates to Boolean atoms over a fixed domain 0..d-1 and compiles
// concepts clause-wise. Decision order: individual-map atoms, then concept
// atoms, then role atoms, each in name-lexicographic order; the solver's
// false-first rule then yields lexicographically least witnesses.
class Grounding {
  public:
    struct Sig {
        std::vector<std::string> concepts, roles, individuals; // sorted, unique
    };

    Grounding(int domain, Sig sig);

    int domain() const { return d_; }
    Solver& solver() { return s_; }

    int concept_var(const std::string& name, int e) const;
    int role_var(const std::string& name, int e, int f) const;
    int indiv_var(const std::string& name, int e) const;

    // Tseitin compilation of "element e satisfies c"; returns a literal.
    int compile(const Concept& c, int e);

    // literal meaning "at least n of the given literals hold"
    int at_least_lit(const std::vector<int>& ts, std::uint64_t n);

    void require_axiom(const Axiom& ax);
    void require_concept_assertion(const ConceptAssertion& ca);
    void require_role_assertion(const RoleAssertion& ra);
    void require_kb(const ValidatedKB& v);
    void require_nonempty(const Concept& c);

    // Forces the listed predicate extensions / individuals exactly.
    void pin(const Interpretation& partial);
    // Canonical individual maps: the k-th individual may only use an element
    // adjacent to the range of its predecessors. Sound for fresh searches.
    void add_symmetry_breaking();

    // Requires the solved interpretation (as candidate J) to be preferred to
    // the concrete i. Pins condition-1/2 parts.
    void require_preferred_than(const Interpretation& i, const ValidatedKB& v);
    // Adds the negation "j is not preferred to the solved interpretation";
    // used to carve away candidates dominated by an already found model j.
    void forbid_preferred_than(const Interpretation& j, const ValidatedKB& v);

    std::optional<Interpretation> next_model();

  private:
    int d_;
    Sig sig_;
    Solver s_;
    std::map<std::string, int> cbase_, rbase_, ibase_;
    std::map<std::pair<const ConceptNode*, int>, int> memo_;
    std::vector<int> order_;

    std::vector<int> successor_conjuncts(const Role& r, int e, const Concept& c);
    std::vector<int> ext_vars(const std::string& p, PredKind k) const;
    std::vector<char> ext_bits(const Interpretation& i, const std::string& p, PredKind k) const;
};

Grounding::Sig ground_signature(const ValidatedKB& v, const std::vector<Concept>& extra_concepts,
                                const std::vector<std::string>& extra_individuals);

} // namespace circ

#endif
