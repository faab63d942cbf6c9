#ifndef CIRC_COUNTING_HPP
#define CIRC_COUNTING_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "circ/engine.hpp"

namespace circ {

// Boolean combinations of concept inclusions, concept assertions, and
// cardinality assertions with arbitrary-precision counts.
enum class CFKind { Incl, Assert, Card, Not, And, Or, Implies };

class CFormula;

struct CFNode {
    CFKind kind;
    Concept c, d;      // Incl: c <= d; Assert/Card: c
    std::string indiv; // Assert
    BigInt n;          // Card
    std::shared_ptr<const CFNode> a, b;
};

class CFormula {
    std::shared_ptr<const CFNode> p_;
    explicit CFormula(std::shared_ptr<const CFNode> p) : p_(std::move(p)) {}

  public:
    CFKind kind() const { return p_->kind; }
    const CFNode* node() const { return p_.get(); }
    const Concept& lhs() const { return p_->c; }
    const Concept& rhs() const { return p_->d; }
    const std::string& indiv() const { return p_->indiv; }
    const BigInt& count() const { return p_->n; }
    CFormula left() const { return CFormula(p_->a); }
    CFormula right() const { return CFormula(p_->b); }

    static CFormula incl(Concept c, Concept d) {
        return CFormula(std::make_shared<const CFNode>(CFNode{CFKind::Incl, std::move(c), std::move(d), {}, 0, nullptr, nullptr}));
    }
    static CFormula assertion(Concept c, std::string a) {
        return CFormula(std::make_shared<const CFNode>(CFNode{CFKind::Assert, std::move(c), {}, std::move(a), 0, nullptr, nullptr}));
    }
    static CFormula card(Concept c, BigInt n) {
        return CFormula(std::make_shared<const CFNode>(CFNode{CFKind::Card, std::move(c), {}, {}, std::move(n), nullptr, nullptr}));
    }
    static CFormula neg(CFormula x) {
        return CFormula(std::make_shared<const CFNode>(CFNode{CFKind::Not, {}, {}, {}, 0, x.p_, nullptr}));
    }
    static CFormula conj(CFormula x, CFormula y) {
        return CFormula(std::make_shared<const CFNode>(CFNode{CFKind::And, {}, {}, {}, 0, x.p_, y.p_}));
    }
    static CFormula disj(CFormula x, CFormula y) {
        return CFormula(std::make_shared<const CFNode>(CFNode{CFKind::Or, {}, {}, {}, 0, x.p_, y.p_}));
    }
    static CFormula implies(CFormula x, CFormula y) {
        return CFormula(std::make_shared<const CFNode>(CFNode{CFKind::Implies, {}, {}, {}, 0, x.p_, y.p_}));
    }
    // c strictly below d: (c <= d) and not (d <= c)
    static CFormula strict(Concept c, Concept d) {
        return conj(incl(c, d), neg(incl(d, c)));
    }
};

CFormula cf_conj(const std::vector<CFormula>& parts); // empty -> card(bot)=0 tautology
bool eval_cf(const Interpretation& i, const CFormula& f);
CFormula parse_cformula(const std::string& text);
std::string render_cformula(const CFormula& f);

Verdict cf_bounded_sat(const CFormula& f, int max_domain);

// One branch of the bounded decision procedure: the cardinality profile of a
// candidate model, the cell of each named individual, and the guessed
// equalities between individuals.
struct Guess {
    std::vector<BigInt> cell_counts;              // indexed by subset bitmask of the minimized names
    std::map<std::string, std::size_t> indiv_cell; // individual -> subset bitmask
    std::set<std::pair<std::string, std::string>> equal; // reflexive-symmetric-transitive
};

// The satisfiability side: KB plus query non-emptiness plus the profile.
CFormula build_phi1(const ValidatedKB& v, const Concept& c0, const Guess& g);
// The minimality side: primed KB against the unprimed profile plus the
// priority conditions. Fails unless the KB has no fixed predicates.
CFormula build_phi2(const ValidatedKB& v, const Guess& g);

struct CountingConfig {
    int budget = 3;
    int max_domain = 3;
    double guess_ceiling = 2.0e7;
    int threads = 1;
};

// Bounded variant of the profile-guessing decision procedure. Fixed concept
// names are first folded into the minimized set.
Verdict theorem13_sat(const Concept& c0, const ValidatedKB& v, const CountingConfig& cfg);

} // namespace circ

#endif
