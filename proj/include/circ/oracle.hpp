#ifndef CIRC_ORACLE_HPP
#define CIRC_ORACLE_HPP

#include <stdexcept>

#include "circ/engine.hpp"

namespace circ {

// Reference implementation by exhaustive enumeration of every interpretation
// over domains 1..d_max. Deliberately shares no search machinery with the
// engine; evaluation is a separate bit-mask recursion.
struct OracleConfig {
    int d_max = 3;
    double enumeration_ceiling = 2.0e8; // interpretations per domain size
};

struct OracleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Verdict oracle_sat(const Concept& c0, const ValidatedKB& v, const OracleConfig& cfg = {});
EntailVerdict oracle_subsumes(const Concept& c, const Concept& d, const ValidatedKB& v,
                              const OracleConfig& cfg = {});
EntailVerdict oracle_instance(const std::string& a, const Concept& c, const ValidatedKB& v,
                              const OracleConfig& cfg = {});

// Simultaneous satisfiability: an interpretation that is a circumscribed model
// of every KB at once and makes c0 non-empty. Signatures are merged.
Verdict oracle_simultaneous_sat(const Concept& c0, const std::vector<ValidatedKB>& vs,
                                const OracleConfig& cfg = {});

} // namespace circ

#endif
