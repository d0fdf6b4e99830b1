#pragma once

// Small conflict-driven clause-learning SAT solver: two watched literals,
// first-UIP learning, VSIDS with a binary heap, phase saving and Luby restarts.
// Literals use the DIMACS convention (+v / -v, variables from 1).

#include <cstdint>
#include <vector>

namespace centerpole::sat {

enum class Result { satisfiable, unsatisfiable, unknown };

struct Stats {
    std::uint64_t decisions = 0;
    std::uint64_t conflicts = 0;
    std::uint64_t propagations = 0;
    std::uint64_t restarts = 0;
};

class Solver {
public:
    explicit Solver(int num_vars = 0);

    int new_var();
    [[nodiscard]] int num_vars() const noexcept { return num_vars_; }

    /// Adds a clause before solving. Returns false once the formula is known unsatisfiable.
    bool add_clause(std::vector<int> lits);

    /// Stops with Result::unknown after `decision_budget` decisions (0 = unlimited).
    Result solve(std::uint64_t decision_budget = 0);

    /// Value of variable v (1-based) in the last satisfying assignment.
    [[nodiscard]] bool model_value(int v) const;
    [[nodiscard]] const Stats& stats() const noexcept { return stats_; }

private:
    using Lit = std::uint32_t;  // 2 * var + negated
    static Lit encode(int dimacs);
    static Lit negate(Lit l) { return l ^ 1U; }
    static std::uint32_t var_of(Lit l) { return l >> 1U; }

    enum : std::int8_t { kFalse = 0, kTrue = 1, kUndef = 2 };
    [[nodiscard]] std::int8_t value(Lit l) const;

    void enqueue(Lit l, int reason);
    int propagate();
    void analyze(int conflict, std::vector<Lit>& learnt, int& backjump);
    void cancel_until(int level);
    int attach(std::vector<Lit> clause);
    [[nodiscard]] int decision_level() const { return static_cast<int>(trail_lim_.size()); }

    void bump(std::uint32_t v);
    void heap_insert(std::uint32_t v);
    std::uint32_t heap_pop();
    void sift_up(std::size_t i);
    void sift_down(std::size_t i);
    [[nodiscard]] bool heap_less(std::uint32_t a, std::uint32_t b) const { return activity_[a] > activity_[b]; }

    int num_vars_ = 0;
    bool inconsistent_ = false;
    std::vector<std::vector<Lit>> clauses_;
    std::vector<std::vector<int>> watches_;  // per literal: clauses in which its negation is watched
    std::vector<std::int8_t> assigns_;
    std::vector<std::int8_t> phase_;
    std::vector<int> level_;
    std::vector<int> reason_;
    std::vector<Lit> trail_;
    std::vector<std::size_t> trail_lim_;
    std::size_t qhead_ = 0;
    std::vector<double> activity_;
    double var_inc_ = 1.0;
    std::vector<std::uint32_t> heap_;
    std::vector<int> heap_pos_;
    std::vector<char> seen_;
    std::vector<bool> model_;
    Stats stats_;
};

}  // namespace centerpole::sat
