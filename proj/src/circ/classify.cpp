#include "circ/classify.hpp"

#include "circ/metrics.hpp"

namespace circ {

std::string problem_class_tag(ProblemClass c) {
    switch (c) {
    case ProblemClass::ConceptCirc:
        return "concept-circumscription";
    case ProblemClass::ConceptCircBounded:
        return "concept-circumscription-bounded";
    case ProblemClass::RoleMinimizingEmptyTBox:
        return "role-minimizing-empty-tbox";
    case ProblemClass::RoleMinimizingEmptyTBoxWithInverse:
        return "role-minimizing-empty-tbox-with-inverse";
    case ProblemClass::RoleMinimizingWithTBox:
        return "role-minimizing-with-tbox";
    case ProblemClass::RoleFixing:
        return "role-fixing";
    }
    return {};
}

std::string problem_class_note(ProblemClass c) {
    switch (c) {
    case ProblemClass::ConceptCirc:
        return "NExp^NP";
    case ProblemClass::ConceptCircBounded:
        return "NP^NExp";
    case ProblemClass::RoleMinimizingEmptyTBox:
        return "NExp^NP";
    case ProblemClass::RoleMinimizingEmptyTBoxWithInverse:
        return "undecidable";
    case ProblemClass::RoleMinimizingWithTBox:
        return "undecidable";
    case ProblemClass::RoleFixing:
        return "highly undecidable";
    }
    return {};
}

ProblemClass classify_problem(const ValidatedKB& v, std::optional<int> c_bound) {
    if (!v.role_minimizing()) return ProblemClass::RoleFixing; // role name fixed
    if (!v.role_fixing()) {
        // role names minimized
        if (!v.kb.tbox.empty()) return ProblemClass::RoleMinimizingWithTBox;
        Fragment f = detect_fragment(v.kb);
        return f.inverses ? ProblemClass::RoleMinimizingEmptyTBoxWithInverse
                          : ProblemClass::RoleMinimizingEmptyTBox;
    }
    if (c_bound && static_cast<int>(v.kb.pattern.minimized.size()) <= *c_bound &&
        static_cast<int>(v.kb.pattern.fixed.size()) <= *c_bound)
        return ProblemClass::ConceptCircBounded;
    return ProblemClass::ConceptCirc;
}

} // namespace circ
