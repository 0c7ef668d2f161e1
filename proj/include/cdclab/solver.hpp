// CDCL solver with two-watched-literal propagation, 1UIP learning, LBD
// scoring, VSIDS branching with phase saving, Luby restarts, and pluggable
// clause-deletion policies. A solver instance is single threaded; distinct
// instances share nothing.
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>

#include "cdclab/clause_policy.hpp"
#include "cdclab/cnf.hpp"

namespace cdclab {

enum class RestartScheme : std::uint8_t { Luby, GlucoseEma };

struct SolverConfig {
    double vsids_decay = 0.95;
    double clause_decay = 0.999;
    RestartScheme restart = RestartScheme::Luby;
    std::uint32_t luby_base = 100;
    DeletionPolicy deletion = DeletionPolicy::GlucoseLbd;
    bool minimize_learned = true;  // recursive shrinking of the 1UIP clause
    bool phase_saving = true;
    bool default_phase = false;  // branch polarity before any phase is saved
    std::uint64_t seed = 0;
    double random_decision_freq = 0.0;
    bool debug_checks = false;  // watch-invariant checks after propagate/backjump
    // Deletion schedule: first reduction after `reduce_first` conflicts, each
    // later one `reduce_inc` conflicts further out (Glucose policy); the
    // Chanseok-Oh policy reduces every `chanseok_interval` conflicts.
    std::uint32_t reduce_first = 2000;
    std::uint32_t reduce_inc = 300;
    std::uint32_t chanseok_interval = 10000;
};

struct Budget {
    std::optional<std::uint64_t> max_conflicts;
    std::optional<double> max_seconds;  // thread CPU seconds
    bool unlimited() const { return !max_conflicts && !max_seconds; }
};

enum class SolveStatus : std::uint8_t { Sat, Unsat, Timeout };

struct SolveStats {
    std::uint64_t conflicts = 0;
    std::uint64_t propagations = 0;
    std::uint64_t decisions = 0;
    std::uint64_t restarts = 0;
    std::uint64_t learned_count = 0;
    std::uint64_t deleted_count = 0;
    double cpu_seconds = 0.0;
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::Timeout;
    std::optional<Assignment> model;  // present iff status == Sat; verified
    SolveStats stats;
};

// One learned clause as recorded into a pool. `batch_index` is the restart
// epoch in which the clause was learned.
struct LearnedClauseRecord {
    Clause clause;
    std::uint32_t lbd = 0;
    std::uint32_t size = 0;
    std::uint64_t batch_index = 0;
    std::uint64_t conflict_number = 0;
};

using LearnedClauseSink = std::function<void(const LearnedClauseRecord&)>;

// Outcome of resolving one conflict through the 1UIP scheme.
struct ConflictAnalysis {
    Clause learned;
    int backjump_level = 0;
    std::uint32_t lbd = 0;
    bool unsat = false;  // conflict at decision level 0
};

class Solver {
  public:
    Solver(const Formula& f, SolverConfig cfg);
    ~Solver();
    Solver(const Solver&) = delete;
    Solver& operator=(const Solver&) = delete;

    SolveOutcome solve(const Budget& budget = {});

    void set_learned_sink(LearnedClauseSink sink);

    // Stepwise interface, used by tests and by anything that wants to drive
    // the search manually. decide() opens a new decision level; propagate()
    // runs unit propagation to fixpoint and reports the conflicting clause,
    // if any; resolve_conflict() learns from the pending conflict, backjumps
    // and asserts the learned clause.
    void decide(Lit decision);
    std::optional<Clause> propagate_to_fixpoint();
    ConflictAnalysis resolve_conflict();

    int value_of(std::int32_t var) const;  // -1 unassigned, else 0/1
    int level_of(std::int32_t var) const;
    int decision_level() const;
    const SolveStats& stats() const;

    // Number of distinct decision levels among the (all assigned) literals.
    std::uint32_t compute_lbd(const Clause& c) const;

    // Applies one reduction round of `policy` to the learned-clause database;
    // returns the number of clauses deleted. Problem clauses (base and
    // extension) are never touched.
    std::size_t reduce_db(DeletionPolicy policy);

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Convenience wrapper: solves `f` while appending every learned clause to
// `sink`; the solve must terminate (pass an adequate budget).
SolveOutcome solve_recording(const Formula& f, const SolverConfig& cfg, const Budget& budget,
                             const LearnedClauseSink& sink);

}  // namespace cdclab
