#ifndef CIRC_PATHS_HPP
#define CIRC_PATHS_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "circ/ast.hpp"

namespace circ {

// Role words paired with the subconcepts they lead to, per individual.
struct PathsTable {
    using Word = std::vector<std::string>;
    std::map<std::string, std::set<std::pair<Word, Concept>>> entries;

    std::set<Word> words(const std::string& indiv) const {
        std::set<Word> out;
        auto it = entries.find(indiv);
        if (it != entries.end())
            for (const auto& [w, c] : it->second) out.insert(w);
        return out;
    }
};

// Set of (word, subconcept) pairs reachable through the quantifier structure
// of an ALC concept. Throws ValidationError on non-ALC constructors.
std::set<std::pair<PathsTable::Word, Concept>> concept_paths(const Concept& c);

PathsTable compute_paths(const std::vector<ConceptAssertion>& assertions);

// all r1 all r2 ... all rn C; the empty word yields C itself
Concept forall_word(const PathsTable::Word& w, const Concept& c);

} // namespace circ

#endif
