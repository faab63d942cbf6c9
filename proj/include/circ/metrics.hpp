#ifndef CIRC_METRICS_HPP
#define CIRC_METRICS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "circ/ast.hpp"

namespace circ {

// Concept length: number of symbol occurrences. Quantified constructors count
// the constructor and the role; number restrictions also count the parameter.
std::uint64_t size_of(const Concept& c);
// Sum over axioms of |lhs| + |rhs|; a definition contributes both directions.
std::uint64_t size_of(const std::vector<Axiom>& tbox);
// Concept assertions contribute |C|, role assertions contribute 1.
std::uint64_t size_of(const Abox& abox);

// Maximal nesting of atleast/atmost/some/all.
std::uint64_t role_depth(const Concept& c);
// Largest parameter of a number restriction, 0 when none occur.
std::uint64_t max_number_parameter(const Concept& c);

// True iff every axiom defines a concept name (A == C, or a primitive
// inclusion A <= C), lhs names are pairwise distinct, and the name
// dependency relation is well-founded.
bool is_acyclic(const std::vector<Axiom>& tbox);

struct Fragment {
    bool inverses = false;
    bool nominals = false;
    bool counting = false;
    bool universal = false;
    std::string label() const;
    void scan(const Concept& c);
    bool within_alcio() const { return !counting; }
    bool within_alcqo() const { return !inverses; }
};

Fragment detect_fragment(const CircKB& kb);
Fragment detect_fragment(const CircKB& kb, const Query& q);

} // namespace circ

#endif
