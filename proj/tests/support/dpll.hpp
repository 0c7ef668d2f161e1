// Plain recursive DPLL with unit propagation, used as the status oracle for
// the CDCL solver. Deliberately independent of the solver implementation: no
// learning, no watches, chronological backtracking, counter-based
// propagation.
#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "cdclab/cnf.hpp"

namespace cdclab::testsupport {

class DpllOracle {
  public:
    explicit DpllOracle(const Formula& f) : n_(f.num_variables) {
        for (const Clause& c : f.clauses) {
            if (c.tautological) continue;
            std::vector<std::int32_t> lits;
            for (const Lit l : c.lits) lits.push_back(l.code());
            clauses_.push_back(std::move(lits));
        }
        occurrences_.assign(2 * static_cast<std::size_t>(n_) + 2, {});
        for (std::size_t ci = 0; ci < clauses_.size(); ++ci)
            for (const std::int32_t code : clauses_[ci]) occurrences_[slot(code)].push_back(ci);
        unassigned_.resize(clauses_.size());
        satisfied_by_.assign(clauses_.size(), 0);
        for (std::size_t ci = 0; ci < clauses_.size(); ++ci)
            unassigned_[ci] = static_cast<std::int32_t>(clauses_[ci].size());
        value_.assign(static_cast<std::size_t>(n_) + 1, -1);
    }

    // Returns true iff satisfiable. Throws if the node budget is exceeded.
    bool satisfiable(std::uint64_t node_budget = 200'000'000ULL) {
        budget_ = node_budget;
        std::vector<std::int32_t> roots;
        for (std::size_t ci = 0; ci < clauses_.size(); ++ci) {
            if (clauses_[ci].empty()) return false;
            if (clauses_[ci].size() == 1) roots.push_back(clauses_[ci][0]);
        }
        for (const std::int32_t code : roots)
            if (!assign_and_propagate(code)) return false;
        return search();
    }

    std::uint64_t nodes() const { return nodes_; }

  private:
    std::size_t slot(std::int32_t code) const {
        const std::size_t v = static_cast<std::size_t>(code < 0 ? -code : code);
        return 2 * v + (code < 0 ? 1 : 0);
    }

    int lit_value(std::int32_t code) const {
        const int v = value_[static_cast<std::size_t>(code < 0 ? -code : code)];
        if (v < 0) return -1;
        return code > 0 ? v : 1 - v;
    }

    bool assign(std::int32_t code) {
        value_[static_cast<std::size_t>(code < 0 ? -code : code)] = code > 0 ? 1 : 0;
        trail_.push_back(code);
        for (const std::size_t ci : occurrences_[slot(code)]) {
            if (satisfied_by_[ci]++ == 0) ++num_satisfied_;
        }
        bool ok = true;
        for (const std::size_t ci : occurrences_[slot(-code)]) {
            --unassigned_[ci];
            if (satisfied_by_[ci] == 0 && unassigned_[ci] == 0) ok = false;
        }
        return ok;
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            const std::int32_t code = trail_.back();
            trail_.pop_back();
            value_[static_cast<std::size_t>(code < 0 ? -code : code)] = -1;
            for (const std::size_t ci : occurrences_[slot(code)]) {
                if (--satisfied_by_[ci] == 0) --num_satisfied_;
            }
            for (const std::size_t ci : occurrences_[slot(-code)]) ++unassigned_[ci];
        }
    }

    // Assigns `code` true and propagates every unit consequence.
    bool assign_and_propagate(std::int32_t code) {
        queue_.clear();
        queue_.push_back(code);
        for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
            const std::int32_t cur = queue_[qi];
            const int v = lit_value(cur);
            if (v == 1) continue;
            if (v == 0) return false;
            if (!assign(cur)) return false;
            for (const std::size_t ci : occurrences_[slot(-cur)]) {
                if (satisfied_by_[ci] != 0 || unassigned_[ci] != 1) continue;
                for (const std::int32_t cand : clauses_[ci])
                    if (lit_value(cand) == -1) {
                        queue_.push_back(cand);
                        break;
                    }
            }
        }
        return true;
    }

    // Branch variable: most occurrences among the shortest active clauses.
    std::int32_t pick_branch_var() {
        std::int32_t min_len = std::numeric_limits<std::int32_t>::max();
        for (std::size_t ci = 0; ci < clauses_.size(); ++ci)
            if (satisfied_by_[ci] == 0) min_len = std::min(min_len, unassigned_[ci]);
        score_.assign(static_cast<std::size_t>(n_) + 1, 0);
        std::int32_t best = 0;
        long best_score = 0;
        for (std::size_t ci = 0; ci < clauses_.size(); ++ci) {
            if (satisfied_by_[ci] > 0 || unassigned_[ci] != min_len) continue;
            for (const std::int32_t code : clauses_[ci]) {
                if (lit_value(code) != -1) continue;
                const auto v = static_cast<std::size_t>(code < 0 ? -code : code);
                if (++score_[v] > best_score) {
                    best_score = score_[v];
                    best = static_cast<std::int32_t>(v);
                }
            }
        }
        return best;
    }

    bool search() {
        if (++nodes_ > budget_) throw std::runtime_error("DpllOracle: node budget exceeded");
        if (num_satisfied_ == clauses_.size()) return true;
        const std::int32_t var = pick_branch_var();
        if (var == 0) return true;  // every active clause is satisfied
        for (const std::int32_t code : {var, -var}) {
            const std::size_t mark = trail_.size();
            if (assign_and_propagate(code) && search()) return true;
            undo_to(mark);
        }
        return false;
    }

    std::int32_t n_;
    std::vector<std::vector<std::int32_t>> clauses_;
    std::vector<std::vector<std::size_t>> occurrences_;
    std::vector<std::int32_t> unassigned_;
    std::vector<std::int32_t> satisfied_by_;
    std::vector<std::int8_t> value_;
    std::vector<std::int32_t> trail_;
    std::vector<std::int32_t> queue_;
    std::vector<long> score_;
    std::size_t num_satisfied_ = 0;
    std::uint64_t budget_ = 0;
    std::uint64_t nodes_ = 0;
};

inline bool dpll_satisfiable(const Formula& f) { return DpllOracle(f).satisfiable(); }

}  // namespace cdclab::testsupport
