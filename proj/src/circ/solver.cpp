#include "circ/solver.hpp"

#include <algorithm>

namespace circ {

void Solver::add_clause(std::vector<int> lits) {
    std::sort(lits.begin(), lits.end(), [](int a, int b) {
        int va = std::abs(a), vb = std::abs(b);
        return va != vb ? va < vb : a < b;
    });
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    for (std::size_t i = 0; i + 1 < lits.size(); ++i)
        if (lits[i] == -lits[i + 1]) return; // tautology
    if (lits.empty()) {
        empty_clause_ = true;
        return;
    }
    if (lits.size() == 1) {
        units_.push_back(lits[0]);
        return;
    }
    int id = static_cast<int>(clauses_.size());
    clauses_.push_back(lits);
    if (watch_.size() < 2 * static_cast<std::size_t>(nvars_) + 2)
        watch_.resize(2 * static_cast<std::size_t>(nvars_) + 2);
    watch_[widx(lits[0])].push_back(id);
    watch_[widx(lits[1])].push_back(id);
}

int Solver::true_lit() {
    if (!true_var_) {
        true_var_ = new_var();
        add_unit(true_var_);
    }
    return true_var_;
}

int Solver::make_and(const std::vector<int>& lits) {
    if (lits.empty()) return true_lit();
    if (lits.size() == 1) return lits[0];
    int t = new_var();
    std::vector<int> back{t};
    for (int l : lits) {
        add_clause({-t, l});
        back.push_back(-l);
    }
    add_clause(back);
    return t;
}

int Solver::make_or(const std::vector<int>& lits) {
    if (lits.empty()) return -true_lit();
    if (lits.size() == 1) return lits[0];
    int t = new_var();
    std::vector<int> fwd{-t};
    for (int l : lits) {
        add_clause({t, -l});
        fwd.push_back(l);
    }
    add_clause(fwd);
    return t;
}

bool Solver::assign(int lit) {
    int v = std::abs(lit);
    std::int8_t want = lit > 0 ? 1 : 0;
    if (val_[v] >= 0) return val_[v] == want;
    val_[v] = want;
    trail_.push_back(lit);
    return true;
}

bool Solver::propagate(std::size_t& qhead) {
    while (qhead < trail_.size()) {
        int lit = trail_[qhead++];
        ++propagations;
        int flit = -lit; // clauses watching the now-false literal
        std::size_t wi = widx(flit);
        if (wi >= watch_.size()) continue;
        auto& wl = watch_[wi];
        std::size_t j = 0;
        for (std::size_t k = 0; k < wl.size(); ++k) {
            int ci = wl[k];
            auto& cl = clauses_[ci];
            if (cl[0] == flit) std::swap(cl[0], cl[1]);
            if (value_of(cl[0]) == 1) {
                wl[j++] = ci;
                continue;
            }
            bool moved = false;
            for (std::size_t m = 2; m < cl.size(); ++m) {
                if (value_of(cl[m]) != 0) {
                    std::swap(cl[1], cl[m]);
                    watch_[widx(cl[1])].push_back(ci);
                    moved = true;
                    break;
                }
            }
            if (moved) continue;
            wl[j++] = ci;
            if (value_of(cl[0]) == 0) { // conflict
                for (++k; k < wl.size(); ++k) wl[j++] = wl[k];
                wl.resize(j);
                return false;
            }
            assign(cl[0]);
        }
        wl.resize(j);
    }
    return true;
}

void Solver::undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
        val_[std::abs(trail_.back())] = -1;
        trail_.pop_back();
    }
}

std::optional<std::vector<std::int8_t>> Solver::solve(const std::vector<int>& order) {
    if (empty_clause_) return std::nullopt;
    val_.assign(static_cast<std::size_t>(nvars_) + 1, -1);
    trail_.clear();
    if (watch_.size() < 2 * static_cast<std::size_t>(nvars_) + 2)
        watch_.resize(2 * static_cast<std::size_t>(nvars_) + 2);

    std::vector<int> full_order = order;
    {
        std::vector<char> seen(static_cast<std::size_t>(nvars_) + 1, 0);
        for (int v : order) seen[static_cast<std::size_t>(v)] = 1;
        for (int v = 1; v <= nvars_; ++v)
            if (!seen[static_cast<std::size_t>(v)]) full_order.push_back(v);
    }

    std::size_t qhead = 0;
    for (int u : units_)
        if (!assign(u)) return std::nullopt;
    if (!propagate(qhead)) return std::nullopt;

    struct Frame {
        std::size_t mark;
        int var;
        bool flipped;
    };
    std::vector<Frame> stack;
    std::size_t oi = 0;

    for (;;) {
        while (oi < full_order.size() && val_[std::abs(full_order[oi])] >= 0) ++oi;
        if (oi == full_order.size()) {
            std::vector<std::int8_t> model(val_.begin(), val_.end());
            return model;
        }
        int var = full_order[oi];
        stack.push_back({trail_.size(), var, false});
        ++decisions;
        assign(-var);
        qhead = trail_.size() - 1;
        while (!propagate(qhead)) {
            // backtrack to the most recent unflipped decision
            for (;;) {
                if (stack.empty()) return std::nullopt;
                Frame& f = stack.back();
                undo_to(f.mark);
                if (!f.flipped) {
                    f.flipped = true;
                    assign(f.var);
                    qhead = trail_.size() - 1;
                    break;
                }
                stack.pop_back();
            }
            // recompute decision cursor: earlier vars may have been undone
            oi = 0;
        }
    }
}

} // namespace circ
