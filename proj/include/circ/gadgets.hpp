#ifndef CIRC_GADGETS_HPP
#define CIRC_GADGETS_HPP

#include <array>
#include <map>
#include <optional>

#include "circ/circuit.hpp"
#include "circ/reductions.hpp"

namespace circ {

struct TilingProblem {
    std::vector<std::string> tiles;
    std::set<std::pair<std::string, std::string>> horizontal, vertical;
};

// "tiles t1 t2; H t1 t2, t2 t1; V t1 t1;"
TilingProblem parse_tiling(const std::string& text);
std::string render_tiling(const TilingProblem& p);

struct GadgetOutput {
    CircKB kb;
    Query query;
    ReductionCertificate cert;
};

// Grid encoding with a TBox; roles are minimized, so deciding the query is
// out of reach for the bounded engines. Output is structural only.
GadgetOutput gen_tiling_tbox(const TilingProblem& p);
// The spy-point variant: empty TBox, inverse roles.
GadgetOutput gen_tiling_abox_alci(const TilingProblem& p);

struct SuccinctGraph {
    int n = 1;
    Circuit edge, sign1, sign2;             // c_E, c_S(1), c_S(2)
    std::vector<std::array<Circuit, 4>> label_bits; // label_bits[j][i-1] = c_j^(i), j < n
};

struct Cert3Col {
    CircKB kb;
    Concept query; // satisfiability query over the raw output
    // after the optional fixed-name elimination: satisfiable iff indiv is NOT
    // an instance of the concept
    std::optional<std::pair<std::string, Concept>> instance_form;
    ReductionCertificate cert;
    std::map<int, int> line_counts; // schema line -> instances emitted
};

Cert3Col gen_cert3col(const SuccinctGraph& g, int n_cap = 2, bool eliminate_fixed = false);

// Frame-consequence encoders: the query individual is an instance of the
// emitted concept iff D holds on every frame validating C.
GadgetOutput gen_frame_consequence_univ(const Concept& c, const Concept& d);
GadgetOutput gen_frame_consequence_alc(const Concept& c, const Concept& d);

// Bounded-reach relativization: m = 0 yields the concept itself.
Concept forall_power(int m, const std::vector<Role>& roles, const Concept& c);

} // namespace circ

#endif
