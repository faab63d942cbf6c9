#ifndef CIRC_INTERPRETATION_HPP
#define CIRC_INTERPRETATION_HPP

#include <map>
#include <set>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "circ/ast.hpp"

namespace circ {

// Explicit finite interpretation. Elements are 0..size-1 in a fixed total
// order; element i prints as "d<i>". Absent predicates have empty extensions.
struct Interpretation {
    int size = 1;
    std::map<std::string, std::set<int>> concepts;
    std::map<std::string, std::set<std::pair<int, int>>> roles;
    std::map<std::string, int> individuals;

    std::set<int> concept_ext(const std::string& n) const {
        auto it = concepts.find(n);
        return it == concepts.end() ? std::set<int>{} : it->second;
    }
    std::set<std::pair<int, int>> role_ext(const std::string& n) const {
        auto it = roles.find(n);
        return it == roles.end() ? std::set<std::pair<int, int>>{} : it->second;
    }

    bool operator==(const Interpretation& o) const {
        return size == o.size && concepts == o.concepts && roles == o.roles &&
               individuals == o.individuals;
    }
};

std::string element_name(int e);
nlohmann::json witness_to_json(const Interpretation& i);

} // namespace circ

#endif
