#include "centerpole/sat_solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace centerpole::sat {

namespace {

// 1, 1, 2, 1, 1, 2, 4, 1, 1, 2, ...
std::uint64_t luby(std::uint64_t i) {
    std::uint64_t size = 1;
    std::uint64_t seq = 0;
    while (size < i + 1) {
        ++seq;
        size = 2 * size + 1;
    }
    while (size - 1 != i) {
        size = (size - 1) >> 1U;
        --seq;
        i = i % size;
    }
    return std::uint64_t{1} << seq;
}

constexpr std::uint64_t kRestartUnit = 100;

}  // namespace

Solver::Solver(int num_vars) {
    for (int i = 0; i < num_vars; ++i) new_var();
}

int Solver::new_var() {
    const auto v = static_cast<std::uint32_t>(num_vars_++);
    watches_.resize(2 * static_cast<std::size_t>(num_vars_));
    assigns_.push_back(kUndef);
    phase_.push_back(kFalse);
    level_.push_back(0);
    reason_.push_back(-1);
    activity_.push_back(0.0);
    seen_.push_back(0);
    heap_pos_.push_back(-1);
    heap_insert(v);
    return num_vars_;
}

Solver::Lit Solver::encode(int dimacs) {
    if (dimacs == 0) throw std::invalid_argument("literal 0 is not allowed");
    const auto v = static_cast<std::uint32_t>(std::abs(dimacs) - 1);
    return 2 * v + (dimacs < 0 ? 1U : 0U);
}

std::int8_t Solver::value(Lit l) const {
    const std::int8_t a = assigns_[var_of(l)];
    if (a == kUndef) return kUndef;
    return static_cast<std::int8_t>(a ^ static_cast<std::int8_t>(l & 1U));
}

bool Solver::add_clause(std::vector<int> lits) {
    if (inconsistent_) return false;
    std::vector<Lit> clause;
    for (int d : lits) {
        if (std::abs(d) > num_vars_) throw std::out_of_range("literal refers to an unknown variable");
        clause.push_back(encode(d));
    }
    std::sort(clause.begin(), clause.end());
    clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
    std::vector<Lit> kept;
    for (std::size_t i = 0; i < clause.size(); ++i) {
        if (i + 1 < clause.size() && clause[i + 1] == negate(clause[i])) return true;  // tautology
        const auto val = value(clause[i]);
        if (val == kTrue) return true;
        if (val == kUndef) kept.push_back(clause[i]);
    }
    if (kept.empty()) {
        inconsistent_ = true;
        return false;
    }
    if (kept.size() == 1) {
        enqueue(kept[0], -1);
        if (propagate() >= 0) inconsistent_ = true;
        return !inconsistent_;
    }
    attach(std::move(kept));
    return true;
}

int Solver::attach(std::vector<Lit> clause) {
    const int ci = static_cast<int>(clauses_.size());
    watches_[negate(clause[0])].push_back(ci);
    watches_[negate(clause[1])].push_back(ci);
    clauses_.push_back(std::move(clause));
    return ci;
}

void Solver::enqueue(Lit l, int reason) {
    const std::uint32_t v = var_of(l);
    assigns_[v] = static_cast<std::int8_t>((l & 1U) ? kFalse : kTrue);
    level_[v] = decision_level();
    reason_[v] = reason;
    trail_.push_back(l);
}

int Solver::propagate() {
    while (qhead_ < trail_.size()) {
        const Lit p = trail_[qhead_++];
        const Lit false_lit = negate(p);
        ++stats_.propagations;
        auto& ws = watches_[p];
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < ws.size()) {
            const int ci = ws[i++];
            auto& c = clauses_[static_cast<std::size_t>(ci)];
            if (c[0] == false_lit) std::swap(c[0], c[1]);
            if (value(c[0]) == kTrue) {
                ws[j++] = ci;
                continue;
            }
            bool moved = false;
            for (std::size_t k = 2; k < c.size(); ++k) {
                if (value(c[k]) != kFalse) {
                    std::swap(c[1], c[k]);
                    watches_[negate(c[1])].push_back(ci);
                    moved = true;
                    break;
                }
            }
            if (moved) continue;
            ws[j++] = ci;
            if (value(c[0]) == kFalse) {
                while (i < ws.size()) ws[j++] = ws[i++];
                ws.resize(j);
                qhead_ = trail_.size();
                return ci;
            }
            enqueue(c[0], ci);
        }
        ws.resize(j);
    }
    return -1;
}

void Solver::analyze(int conflict, std::vector<Lit>& learnt, int& backjump) {
    learnt.assign(1, 0);
    int open = 0;
    Lit p = 0;
    bool first = true;
    std::size_t index = trail_.size();
    do {
        const auto& c = clauses_[static_cast<std::size_t>(conflict)];
        for (std::size_t k = first ? 0 : 1; k < c.size(); ++k) {
            const Lit q = c[k];
            const std::uint32_t v = var_of(q);
            if (seen_[v] || level_[v] == 0) continue;
            seen_[v] = 1;
            bump(v);
            if (level_[v] >= decision_level()) {
                ++open;
            } else {
                learnt.push_back(q);
            }
        }
        first = false;
        while (!seen_[var_of(trail_[index - 1])]) --index;
        p = trail_[--index];
        conflict = reason_[var_of(p)];
        seen_[var_of(p)] = 0;
        --open;
    } while (open > 0);
    learnt[0] = negate(p);

    backjump = 0;
    std::size_t max_i = 1;
    for (std::size_t k = 1; k < learnt.size(); ++k) {
        const int lv = level_[var_of(learnt[k])];
        if (lv > backjump) {
            backjump = lv;
            max_i = k;
        }
    }
    if (learnt.size() > 1) std::swap(learnt[1], learnt[max_i]);
    for (Lit q : learnt) seen_[var_of(q)] = 0;
}

void Solver::cancel_until(int level) {
    if (decision_level() <= level) return;
    const std::size_t lim = trail_lim_[static_cast<std::size_t>(level)];
    for (std::size_t i = trail_.size(); i > lim; --i) {
        const std::uint32_t v = var_of(trail_[i - 1]);
        phase_[v] = assigns_[v];
        assigns_[v] = kUndef;
        reason_[v] = -1;
        if (heap_pos_[v] < 0) heap_insert(v);
    }
    trail_.resize(lim);
    trail_lim_.resize(static_cast<std::size_t>(level));
    qhead_ = trail_.size();
}

void Solver::bump(std::uint32_t v) {
    activity_[v] += var_inc_;
    if (activity_[v] > 1e100) {
        for (auto& a : activity_) a *= 1e-100;
        var_inc_ *= 1e-100;
    }
    if (heap_pos_[v] >= 0) sift_up(static_cast<std::size_t>(heap_pos_[v]));
}

void Solver::heap_insert(std::uint32_t v) {
    heap_pos_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    sift_up(heap_.size() - 1);
}

std::uint32_t Solver::heap_pop() {
    const std::uint32_t top = heap_.front();
    heap_pos_[top] = -1;
    heap_.front() = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
        heap_pos_[heap_.front()] = 0;
        sift_down(0);
    }
    return top;
}

void Solver::sift_up(std::size_t i) {
    const std::uint32_t v = heap_[i];
    while (i > 0) {
        const std::size_t parent = (i - 1) / 2;
        if (!heap_less(v, heap_[parent])) break;
        heap_[i] = heap_[parent];
        heap_pos_[heap_[i]] = static_cast<int>(i);
        i = parent;
    }
    heap_[i] = v;
    heap_pos_[v] = static_cast<int>(i);
}

void Solver::sift_down(std::size_t i) {
    const std::uint32_t v = heap_[i];
    while (true) {
        std::size_t child = 2 * i + 1;
        if (child >= heap_.size()) break;
        if (child + 1 < heap_.size() && heap_less(heap_[child + 1], heap_[child])) ++child;
        if (!heap_less(heap_[child], v)) break;
        heap_[i] = heap_[child];
        heap_pos_[heap_[i]] = static_cast<int>(i);
        i = child;
    }
    heap_[i] = v;
    heap_pos_[v] = static_cast<int>(i);
}

Result Solver::solve(std::uint64_t decision_budget) {
    if (inconsistent_) return Result::unsatisfiable;
    if (propagate() >= 0) {
        inconsistent_ = true;
        return Result::unsatisfiable;
    }

    std::uint64_t restart_index = 0;
    std::uint64_t conflicts_until_restart = kRestartUnit * luby(restart_index);
    std::vector<Lit> learnt;
    while (true) {
        const int conflict = propagate();
        if (conflict >= 0) {
            ++stats_.conflicts;
            if (decision_level() == 0) {
                inconsistent_ = true;
                return Result::unsatisfiable;
            }
            int backjump = 0;
            analyze(conflict, learnt, backjump);
            cancel_until(backjump);
            if (learnt.size() == 1) {
                enqueue(learnt[0], -1);
            } else {
                const int ci = attach(learnt);
                enqueue(learnt[0], ci);
            }
            var_inc_ *= 1.0 / 0.95;
            if (--conflicts_until_restart == 0) {
                ++stats_.restarts;
                conflicts_until_restart = kRestartUnit * luby(++restart_index);
                cancel_until(0);
            }
            continue;
        }

        std::uint32_t next = 0;
        bool found = false;
        while (!heap_.empty()) {
            next = heap_pop();
            if (assigns_[next] == kUndef) {
                found = true;
                break;
            }
        }
        if (!found) {
            model_.assign(static_cast<std::size_t>(num_vars_), false);
            for (int v = 0; v < num_vars_; ++v) model_[static_cast<std::size_t>(v)] = assigns_[static_cast<std::size_t>(v)] == kTrue;
            cancel_until(0);
            return Result::satisfiable;
        }
        if (decision_budget != 0 && stats_.decisions >= decision_budget) {
            heap_insert(next);
            cancel_until(0);
            return Result::unknown;
        }
        ++stats_.decisions;
        trail_lim_.push_back(trail_.size());
        enqueue(2 * next + (phase_[next] == kTrue ? 0U : 1U), -1);
    }
}

bool Solver::model_value(int v) const {
    if (v < 1 || static_cast<std::size_t>(v) > model_.size()) throw std::out_of_range("no model value for variable");
    return model_[static_cast<std::size_t>(v - 1)];
}

}  // namespace centerpole::sat
