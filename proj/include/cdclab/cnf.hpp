// CNF data model: literals, clauses, formulas and partial assignments.
// Variables use DIMACS numbering (1-based) throughout the public surface.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cdclab {

// A literal is stored as its signed DIMACS code: +v or -v, v >= 1.
class Lit {
  public:
    Lit() = default;
    explicit Lit(std::int32_t code) : code_(code) {}
    static Lit make(std::int32_t var, bool positive) { return Lit(positive ? var : -var); }

    std::int32_t var() const { return code_ < 0 ? -code_ : code_; }
    bool positive() const { return code_ > 0; }
    std::int32_t code() const { return code_; }
    Lit negated() const { return Lit(-code_); }

    bool operator==(const Lit&) const = default;

  private:
    std::int32_t code_ = 0;
};

// Clause literals are kept in first-occurrence order; duplicates are removed
// on normalization. A clause holding both l and ~l is kept but flagged
// tautological so consumers can skip it without altering the instance.
struct Clause {
    std::vector<Lit> lits;
    bool tautological = false;

    static Clause normalized(std::vector<Lit> raw);

    std::size_t size() const { return lits.size(); }
    bool empty() const { return lits.empty(); }
    bool operator==(const Clause&) const = default;
};

enum class ClauseOrigin : std::uint8_t { Base, Extension, Learned };

struct Formula {
    std::int32_t num_variables = 0;
    std::vector<Clause> clauses;
    std::vector<ClauseOrigin> origins;  // parallel to clauses

    void add_clause(Clause c, ClauseOrigin origin = ClauseOrigin::Base);
    std::size_t num_clauses() const { return clauses.size(); }
};

// Partial assignment over variables 1..num_variables.
class Assignment {
  public:
    Assignment() = default;
    explicit Assignment(std::int32_t num_variables) : values_(static_cast<std::size_t>(num_variables) + 1, -1) {}

    void set(std::int32_t var, bool value);
    void unset(std::int32_t var);
    // -1 unassigned, else 0/1.
    int value_of_var(std::int32_t var) const { return values_[static_cast<std::size_t>(var)]; }
    // Value of a literal under alpha(~x) = 1 - alpha(x); -1 if unassigned.
    int value_of(Lit l) const;
    std::int32_t num_variables() const { return static_cast<std::int32_t>(values_.size()) - 1; }

  private:
    std::vector<std::int8_t> values_;
};

// Applies the assignment: satisfied clauses are dropped, false literals are
// deleted from the remaining ones. An empty clause in the result marks a
// conflict under `a`. Origin labels follow their clauses.
Formula restrict(const Formula& f, const Assignment& a);

// True iff the (total or partial, extended to total) assignments satisfying
// `f` all satisfy `c`. Enumerates assignments exhaustively; refuses formulas
// with more than `kConsequenceVarLimit` variables.
inline constexpr std::int32_t kConsequenceVarLimit = 24;
bool is_logical_consequence(const Formula& f, const Clause& c);

// Exhaustive satisfiability over the same enumerator (same variable limit).
bool oracle_satisfiable(const Formula& f);

}  // namespace cdclab
