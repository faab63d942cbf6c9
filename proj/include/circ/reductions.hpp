#ifndef CIRC_REDUCTIONS_HPP
#define CIRC_REDUCTIONS_HPP

#include <string>
#include <vector>

#include "circ/paths.hpp"
#include "circ/validate.hpp"

namespace circ {

struct ReductionCertificate {
    std::string source_query;
    std::string target_query;
    std::string direction; // how answers map across the transformation
    std::vector<std::string> fresh;
    std::vector<std::string> notes;
};

struct ReducedKb {
    CircKB kb;
    ReductionCertificate cert;
};

struct ReducedSat {
    CircKB kb;
    Concept query;
    ReductionCertificate cert;
};

struct ReducedInstance {
    CircKB kb;
    std::string indiv;
    Concept query;
    ReductionCertificate cert;
};

// Fixed concept names become minimized alongside fresh complements defined in
// the TBox; satisfiability is preserved for every query concept.
ReducedKb eliminate_fixed_concepts(const ValidatedKB& v);

// The empty-TBox variant: complements are forced by assertions along the role
// words reachable from named individuals. Preserves the instance answer for
// c0 at a0. Requires an empty TBox and no fixed role names.
ReducedInstance eliminate_fixed_concepts_empty_tbox(const ValidatedKB& v, const std::string& a0,
                                                    const Concept& c0);

// Replaces the TBox by four acyclic definitions over fresh names; c0 is
// satisfiable w.r.t. the source iff query() is satisfiable w.r.t. the result.
ReducedSat general_to_acyclic(const ValidatedKB& v, const Concept& c0);

// Merges KBs sharing no role names into one; c0 is simultaneously satisfiable
// iff indiv is NOT an instance of query in the merged KB. Folds left to right
// beyond two inputs.
ReducedInstance merge_simultaneous(const std::vector<ValidatedKB>& kbs, const Concept& c0);

// Normalization of any reasoning task to concept satisfiability. When
// holds_iff_unsat is set the source statement holds iff the target concept is
// NOT satisfiable.
struct SatForm {
    CircKB kb;
    Concept query;
    bool holds_iff_unsat = false;
    ReductionCertificate cert;
};
SatForm task_reduce(const ValidatedKB& v, const Query& q);

// Single concept assertion becomes a one-axiom acyclic TBox reached through a
// fresh fixed name; query becomes A and C. Requires an empty priority order.
ReducedSat abox_to_acyclic_tbox(const ValidatedKB& v, const Concept& query);

// Minimized concept names become successor tests along a single minimized
// role. Equivalence holds for models with at least #M elements. Requires an
// empty TBox, concept-only minimization, no fixed predicates, no priorities.
ReducedSat min_concepts_to_min_role(const ValidatedKB& v, const Concept& c0);

} // namespace circ

#endif
