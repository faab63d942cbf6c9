#ifndef CIRC_EVAL_HPP
#define CIRC_EVAL_HPP

#include <optional>
#include <set>
#include <stdexcept>

#include "circ/interpretation.hpp"
#include "circ/validate.hpp"

namespace circ {

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::set<std::pair<int, int>> eval_role(const Interpretation& i, const Role& r);
// Throws EvalError for a nominal whose individual is unmapped.
std::set<int> eval_concept(const Interpretation& i, const Concept& c);

bool satisfies(const Interpretation& i, const Axiom& ax);
bool is_model(const Interpretation& i, const std::vector<Axiom>& tbox, const Abox& abox);
inline bool is_model(const Interpretation& i, const CircKB& kb) {
    return is_model(i, kb.tbox, kb.abox);
}

// Condition-3 record: the strictly shrunk predicate of condition 4 plus, for
// every minimized predicate that did not stay within its old extension, the
// higher-priority predicate that compensates.
struct PreferenceWitness {
    std::string shrunk;
    std::map<std::string, std::string> compensation;
};

// Non-empty iff i is preferred to j.
std::optional<PreferenceWitness> prefers(const Interpretation& i, const Interpretation& j,
                                         const ValidatedKB& v);

// True iff i models the KB and no same-domain model is preferred to it.
// The preferred-model search is the engine's; declared here, defined there.
bool is_circ_model(const Interpretation& i, const ValidatedKB& v);

} // namespace circ

#endif
