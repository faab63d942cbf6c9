#ifndef CIRC_CLASSIFY_HPP
#define CIRC_CLASSIFY_HPP

#include <optional>
#include <string>

#include "circ/validate.hpp"

namespace circ {

enum class ProblemClass {
    ConceptCirc,                        // NExp^NP
    ConceptCircBounded,                 // NP^NExp, #M and #F within a given bound
    RoleMinimizingEmptyTBox,            // NExp^NP, no inverse roles
    RoleMinimizingEmptyTBoxWithInverse, // undecidable
    RoleMinimizingWithTBox,             // undecidable
    RoleFixing,                         // highly undecidable
};

// Short machine tag, e.g. "role-minimizing-with-tbox".
std::string problem_class_tag(ProblemClass c);
// Decidability / complexity note, e.g. "undecidable".
std::string problem_class_note(ProblemClass c);

ProblemClass classify_problem(const ValidatedKB& v, std::optional<int> c_bound = std::nullopt);

} // namespace circ

#endif
