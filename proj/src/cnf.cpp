#include "cdclab/cnf.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace cdclab {

Clause Clause::normalized(std::vector<Lit> raw) {
    Clause c;
    c.lits.reserve(raw.size());
    std::unordered_set<std::int32_t> seen;
    for (const Lit l : raw) {
        if (seen.contains(-l.code())) c.tautological = true;
        if (seen.insert(l.code()).second) c.lits.push_back(l);
    }
    return c;
}

void Formula::add_clause(Clause c, ClauseOrigin origin) {
    for (const Lit l : c.lits) {
        if (l.var() > num_variables) throw std::invalid_argument("clause literal exceeds variable bound");
        if (l.code() == 0) throw std::invalid_argument("zero literal in clause");
    }
    clauses.push_back(std::move(c));
    origins.push_back(origin);
}

void Assignment::set(std::int32_t var, bool value) {
    if (var < 1 || var >= static_cast<std::int32_t>(values_.size()))
        throw std::out_of_range("Assignment::set: variable outside domain");
    values_[static_cast<std::size_t>(var)] = value ? 1 : 0;
}

void Assignment::unset(std::int32_t var) {
    if (var < 1 || var >= static_cast<std::int32_t>(values_.size()))
        throw std::out_of_range("Assignment::unset: variable outside domain");
    values_[static_cast<std::size_t>(var)] = -1;
}

int Assignment::value_of(Lit l) const {
    const int v = value_of_var(l.var());
    if (v < 0) return -1;
    return l.positive() ? v : 1 - v;
}

Formula restrict(const Formula& f, const Assignment& a) {
    Formula out;
    out.num_variables = f.num_variables;
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        const Clause& c = f.clauses[i];
        Clause reduced;
        reduced.tautological = c.tautological;
        bool satisfied = false;
        for (const Lit l : c.lits) {
            const int v = a.value_of(l);
            if (v == 1) {
                satisfied = true;
                break;
            }
            if (v == -1) reduced.lits.push_back(l);
        }
        if (!satisfied) {
            out.clauses.push_back(std::move(reduced));
            out.origins.push_back(f.origins[i]);
        }
    }
    return out;
}

namespace {

// Bit-parallel exhaustive enumeration. The lowest 6 free variables index the
// bits of a 64-lane block; the remaining ones are swept by an outer counter.
struct Enumerator {
    struct MaskedClause {
        std::uint64_t low_sat;   // lanes where a low literal satisfies the clause
        std::uint64_t pos_high;  // high vars appearing positively
        std::uint64_t neg_high;  // high vars appearing negatively
    };

    std::vector<MaskedClause> clauses;
    int num_low = 0;
    int num_high = 0;

    // Lane pattern of low variable k: bit b is set iff b has bit k set.
    static std::uint64_t lane_pattern(int k) {
        static constexpr std::uint64_t patterns[6] = {
            0xaaaaaaaaaaaaaaaaULL, 0xccccccccccccccccULL, 0xf0f0f0f0f0f0f0f0ULL,
            0xff00ff00ff00ff00ULL, 0xffff0000ffff0000ULL, 0xffffffff00000000ULL,
        };
        return patterns[k];
    }

    // Builds the enumerator from a formula with no assigned literals left.
    // Returns false if the formula contains an empty clause (unsatisfiable).
    bool build(const Formula& f) {
        std::vector<std::int32_t> vars;
        std::vector<std::int32_t> dense(static_cast<std::size_t>(f.num_variables) + 1, -1);
        for (const Clause& c : f.clauses) {
            if (c.tautological) continue;
            if (c.empty()) return false;
            for (const Lit l : c.lits) {
                if (dense[static_cast<std::size_t>(l.var())] < 0) {
                    dense[static_cast<std::size_t>(l.var())] = static_cast<std::int32_t>(vars.size());
                    vars.push_back(l.var());
                }
            }
        }
        const int total = static_cast<int>(vars.size());
        num_low = std::min(total, 6);
        num_high = total - num_low;
        for (const Clause& c : f.clauses) {
            if (c.tautological) continue;
            MaskedClause mc{0, 0, 0};
            for (const Lit l : c.lits) {
                const int idx = dense[static_cast<std::size_t>(l.var())];
                if (idx < num_low) {
                    const std::uint64_t lanes = lane_pattern(idx);
                    mc.low_sat |= l.positive() ? lanes : ~lanes;
                } else {
                    const std::uint64_t bit = 1ULL << (idx - num_low);
                    (l.positive() ? mc.pos_high : mc.neg_high) |= bit;
                }
            }
            clauses.push_back(mc);
        }
        return true;
    }

    bool any_satisfying() const {
        const std::uint64_t lanes_used = num_low == 6 ? ~0ULL : (1ULL << (1 << num_low)) - 1;
        const std::uint64_t high_count = 1ULL << num_high;
        for (std::uint64_t h = 0; h < high_count; ++h) {
            std::uint64_t alive = lanes_used;
            for (const MaskedClause& mc : clauses) {
                if ((mc.pos_high & h) | (mc.neg_high & ~h)) continue;  // satisfied by a high literal
                alive &= mc.low_sat;
                if (alive == 0) break;
            }
            if (alive != 0) return true;
        }
        return false;
    }
};

bool exhaustively_satisfiable(const Formula& f) {
    Enumerator e;
    if (!e.build(f)) return false;
    return e.any_satisfying();
}

}  // namespace

bool is_logical_consequence(const Formula& f, const Clause& c) {
    if (f.num_variables > kConsequenceVarLimit)
        throw std::invalid_argument("is_logical_consequence: formula exceeds the exhaustive-enumeration bound");
    if (c.tautological) return true;
    // f |= c  iff  f & ~c is unsatisfiable; ~c fixes each literal of c false.
    const std::int32_t bound = std::max(f.num_variables, [&] {
        std::int32_t m = 0;
        for (const Lit l : c.lits) m = std::max(m, l.var());
        return m;
    }());
    Assignment a(bound);
    for (const Lit l : c.lits) {
        const int existing = a.value_of(l);
        if (existing == 1) return true;  // duplicate polarity conflict cannot happen post-normalize
        a.set(l.var(), !l.positive());
    }
    Formula g = f;
    g.num_variables = bound;
    return !exhaustively_satisfiable(restrict(g, a));
}

bool oracle_satisfiable(const Formula& f) {
    if (f.num_variables > kConsequenceVarLimit)
        throw std::invalid_argument("oracle_satisfiable: formula exceeds the exhaustive-enumeration bound");
    return exhaustively_satisfiable(f);
}

}  // namespace cdclab
