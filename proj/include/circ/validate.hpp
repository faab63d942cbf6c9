#ifndef CIRC_VALIDATE_HPP
#define CIRC_VALIDATE_HPP

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "circ/ast.hpp"

namespace circ {

struct ValidationError : std::runtime_error {
    std::string offender;
    ValidationError(const std::string& msg, std::string off = {})
        : std::runtime_error(msg), offender(std::move(off)) {}
};

// A knowledge base that passed validation, with resolved predicate kinds,
// the transitive closure of the priority order, and collected individuals.
struct ValidatedKB {
    CircKB kb;
    std::map<std::string, PredKind> kinds; // every pattern/occurring predicate
    std::set<std::pair<std::string, std::string>> prec; // transitive closure of prefer
    Signature sig;                                      // occurring names
    std::vector<std::string> warnings;

    bool minimized(const std::string& p) const { return kb.pattern.minimized.count(p) != 0; }
    bool fixed(const std::string& p) const { return kb.pattern.fixed.count(p) != 0; }
    PredKind kind_of(const std::string& p) const {
        auto it = kinds.find(p);
        return it == kinds.end() ? PredKind::ConceptName : it->second;
    }
    bool concept_circumscribed() const;
    bool role_minimizing() const; // no role names fixed
    bool role_fixing() const;     // no role names minimized
    // names of one kind drawn from a pattern set
    std::vector<std::string> pattern_names(const std::set<std::string>& s, PredKind k) const;
};

// Checks pattern well-formedness and the coverage condition. Predicates used
// in the KB but not declared default to varying (with a warning); under
// strict mode that is an error instead. Throws ValidationError on violation.
ValidatedKB validate(const CircKB& kb, bool strict = false);

// Registers predicates of a query concept with the validated KB: unseen names
// become varying for minimality purposes.
void register_query_names(ValidatedKB& v, const Concept& c);

} // namespace circ

#endif
