#ifndef CIRC_AST_HPP
#define CIRC_AST_HPP

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace circ {

// ---------------------------------------------------------------- roles

enum class RoleKind { Named, Inverse, Universal };

struct Role {
    RoleKind kind = RoleKind::Named;
    std::string name; // empty for Universal

    static Role named(std::string n) { return {RoleKind::Named, std::move(n)}; }
    static Role inverse(std::string n) { return {RoleKind::Inverse, std::move(n)}; }
    static Role universal() { return {RoleKind::Universal, {}}; }

    bool operator==(const Role& o) const { return kind == o.kind && name == o.name; }
    bool operator!=(const Role& o) const { return !(*this == o); }
    bool operator<(const Role& o) const {
        if (kind != o.kind) return kind < o.kind;
        return name < o.name;
    }
};

// ---------------------------------------------------------------- concepts

enum class CKind {
    Top,
    Bot,
    Name,
    Nominal,
    Not,
    And,
    Or,
    AtLeast,
    AtMost,
    Exists,
    Forall,
};

class Concept;

struct ConceptNode {
    CKind kind;
    std::string name;  // Name: concept name; Nominal: individual name
    std::uint64_t num = 0; // AtLeast/AtMost parameter
    Role role;             // quantified constructors
    std::shared_ptr<const ConceptNode> a, b;
};

// Immutable value wrapper around a shared syntax tree.
class Concept {
    std::shared_ptr<const ConceptNode> p_;
    explicit Concept(std::shared_ptr<const ConceptNode> p) : p_(std::move(p)) {}

  public:
    Concept() : Concept(top()) {}

    CKind kind() const { return p_->kind; }
    const std::string& name() const { return p_->name; }
    std::uint64_t num() const { return p_->num; }
    const Role& role() const { return p_->role; }
    Concept left() const { return Concept(p_->a); }
    Concept right() const { return Concept(p_->b); }
    const ConceptNode* node() const { return p_.get(); }

    static Concept top() {
        static auto n = std::make_shared<const ConceptNode>(ConceptNode{CKind::Top, {}, 0, {}, nullptr, nullptr});
        return Concept(n);
    }
    static Concept bot() {
        static auto n = std::make_shared<const ConceptNode>(ConceptNode{CKind::Bot, {}, 0, {}, nullptr, nullptr});
        return Concept(n);
    }
    static Concept name(std::string s) {
        return Concept(std::make_shared<const ConceptNode>(ConceptNode{CKind::Name, std::move(s), 0, {}, nullptr, nullptr}));
    }
    static Concept nominal(std::string indiv) {
        return Concept(std::make_shared<const ConceptNode>(ConceptNode{CKind::Nominal, std::move(indiv), 0, {}, nullptr, nullptr}));
    }
    static Concept neg(Concept c) {
        return Concept(std::make_shared<const ConceptNode>(ConceptNode{CKind::Not, {}, 0, {}, c.p_, nullptr}));
    }
    static Concept conj(Concept l, Concept r) {
        return Concept(std::make_shared<const ConceptNode>(ConceptNode{CKind::And, {}, 0, {}, l.p_, r.p_}));
    }
    static Concept disj(Concept l, Concept r) {
        return Concept(std::make_shared<const ConceptNode>(ConceptNode{CKind::Or, {}, 0, {}, l.p_, r.p_}));
    }
    static Concept atleast(std::uint64_t n, Role r, Concept c) {
        return Concept(std::make_shared<const ConceptNode>(ConceptNode{CKind::AtLeast, {}, n, std::move(r), c.p_, nullptr}));
    }
    static Concept atmost(std::uint64_t n, Role r, Concept c) {
        return Concept(std::make_shared<const ConceptNode>(ConceptNode{CKind::AtMost, {}, n, std::move(r), c.p_, nullptr}));
    }
    static Concept exists(Role r, Concept c) {
        return Concept(std::make_shared<const ConceptNode>(ConceptNode{CKind::Exists, {}, 0, std::move(r), c.p_, nullptr}));
    }
    static Concept forall(Role r, Concept c) {
        return Concept(std::make_shared<const ConceptNode>(ConceptNode{CKind::Forall, {}, 0, std::move(r), c.p_, nullptr}));
    }

    bool operator==(const Concept& o) const;
    bool operator!=(const Concept& o) const { return !(*this == o); }
};

// C -> D  as  not C or D
inline Concept implies(Concept c, Concept d) { return Concept::disj(Concept::neg(c), d); }
// C <-> D expanded to (not C or D) and (not D or C)
inline Concept iff(Concept c, Concept d) {
    return Concept::conj(implies(c, d), implies(d, c));
}

// Empty conjunction is top, empty disjunction is bot; singletons fold to themselves.
Concept nary_and(const std::vector<Concept>& cs);
Concept nary_or(const std::vector<Concept>& cs);

// ---------------------------------------------------------------- axioms, aboxes

enum class AxKind { Inclusion, Definition };

struct Axiom {
    AxKind kind = AxKind::Inclusion;
    Concept lhs, rhs; // Definition: lhs is a bare concept name

    static Axiom incl(Concept l, Concept r) { return {AxKind::Inclusion, std::move(l), std::move(r)}; }
    static Axiom def(std::string name, Concept r) { return {AxKind::Definition, Concept::name(std::move(name)), std::move(r)}; }
    bool operator==(const Axiom& o) const { return kind == o.kind && lhs == o.lhs && rhs == o.rhs; }
};

struct ConceptAssertion {
    std::string indiv;
    Concept c;
    bool operator==(const ConceptAssertion& o) const { return indiv == o.indiv && c == o.c; }
};

struct RoleAssertion {
    std::string role; // role name only
    std::string a, b;
    bool operator==(const RoleAssertion& o) const { return role == o.role && a == o.a && b == o.b; }
};

struct Abox {
    std::vector<ConceptAssertion> concept_assertions;
    std::vector<RoleAssertion> role_assertions;
    bool empty() const { return concept_assertions.empty() && role_assertions.empty(); }
    bool operator==(const Abox& o) const {
        return concept_assertions == o.concept_assertions && role_assertions == o.role_assertions;
    }
};

// ---------------------------------------------------------------- circumscription pattern

struct CircPattern {
    std::set<std::string> minimized, fixed, varying;
    // generator pairs; (q, p) means q takes priority over p
    std::set<std::pair<std::string, std::string>> prefer;

    bool empty() const { return minimized.empty() && fixed.empty() && varying.empty() && prefer.empty(); }
    bool operator==(const CircPattern& o) const {
        return minimized == o.minimized && fixed == o.fixed && varying == o.varying && prefer == o.prefer;
    }
};

struct CircKB {
    std::vector<Axiom> tbox;
    Abox abox;
    CircPattern pattern;
    bool operator==(const CircKB& o) const {
        return tbox == o.tbox && abox == o.abox && pattern == o.pattern;
    }
};

// ---------------------------------------------------------------- queries

struct Query {
    enum class Kind { Sat, Subsumes, Instance };
    Kind kind = Kind::Sat;
    Concept c, d;      // Sat: c; Subsumes: c sub d; Instance: indiv in c
    std::string indiv; // Instance only

    static Query sat(Concept c) { return {Kind::Sat, std::move(c), Concept::top(), {}}; }
    static Query subsumes(Concept c, Concept d) { return {Kind::Subsumes, std::move(c), std::move(d), {}}; }
    static Query instance(std::string a, Concept c) { return {Kind::Instance, std::move(c), Concept::top(), std::move(a)}; }
};

// ---------------------------------------------------------------- signature

enum class PredKind { ConceptName, RoleName };

struct Signature {
    std::set<std::string> concepts, roles, individuals;
    void merge(const Signature& o) {
        concepts.insert(o.concepts.begin(), o.concepts.end());
        roles.insert(o.roles.begin(), o.roles.end());
        individuals.insert(o.individuals.begin(), o.individuals.end());
    }
};

void collect_signature(const Concept& c, Signature& out);
Signature signature_of(const CircKB& kb);
Signature signature_of(const Concept& c);

// Supplies collision-free generated names; generated names carry the
// reserved "@g/" prefix which ordinary input identifiers cannot use.
class FreshNames {
    std::set<std::string> used_;

  public:
    FreshNames() = default;
    explicit FreshNames(std::set<std::string> used) : used_(std::move(used)) {}
    void reserve(const Signature& sig) {
        used_.insert(sig.concepts.begin(), sig.concepts.end());
        used_.insert(sig.roles.begin(), sig.roles.end());
        used_.insert(sig.individuals.begin(), sig.individuals.end());
    }
    void reserve_names(const std::set<std::string>& names) { used_.insert(names.begin(), names.end()); }
    std::string fresh(const std::string& hint) {
        std::string base = "@g/" + hint;
        if (used_.insert(base).second) return base;
        for (int i = 2;; ++i) {
            std::string cand = base + "." + std::to_string(i);
            if (used_.insert(cand).second) return cand;
        }
    }
};

} // namespace circ

#endif
