#ifndef CIRC_SOLVER_HPP
#define CIRC_SOLVER_HPP

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <vector>

namespace circ {

// Chronological DPLL over clauses with two watched literals. Variables are
// 1-based; a literal is +v or -v. Decisions follow the given variable order,
// assigning false before true, so the first model is the lexicographically
// least assignment over that order. Clauses may be added between solve calls.
class Solver {
  public:
    int new_var() { return ++nvars_; }
    int num_vars() const { return nvars_; }

    void add_clause(std::vector<int> lits);
    void add_unit(int lit) { add_clause({lit}); }

    // t <-> AND(lits) / OR(lits); returns the defined variable as a literal
    int make_and(const std::vector<int>& lits);
    int make_or(const std::vector<int>& lits);

    int true_lit(); // a literal fixed to true

    // Lexicographically least satisfying assignment with the given decision
    // prefix (remaining variables are decided in index order afterwards).
    std::optional<std::vector<std::int8_t>> solve(const std::vector<int>& order);

    std::uint64_t decisions = 0, propagations = 0;

  private:
    int nvars_ = 0;
    int true_var_ = 0;
    bool empty_clause_ = false;
    std::vector<std::vector<int>> clauses_;
    std::vector<int> units_;
    std::vector<std::vector<int>> watch_; // literal index -> clause ids

    std::vector<std::int8_t> val_; // per var: -1 unassigned, 0 false, 1 true
    std::vector<int> trail_;

    static std::size_t widx(int lit) { return 2 * static_cast<std::size_t>(std::abs(lit)) + (lit < 0); }
    std::int8_t value_of(int lit) const {
        std::int8_t v = val_[std::abs(lit)];
        if (v < 0) return -1;
        return (lit > 0) == (v == 1) ? 1 : 0;
    }
    bool assign(int lit);
    bool propagate(std::size_t& qhead);
    void undo_to(std::size_t mark);
};

} // namespace circ

#endif
