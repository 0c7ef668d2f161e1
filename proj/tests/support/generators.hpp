// Deterministic instance generators for tests.
#pragma once

#include <cstdint>
#include <vector>

#include "cdclab/cnf.hpp"
#include "cdclab/rng.hpp"

namespace cdclab::testsupport {

// Uniform random k-SAT: m clauses of k distinct variables, random polarity.
inline Formula random_ksat(std::int32_t n, std::int32_t m, int k, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Formula f;
    f.num_variables = n;
    for (std::int32_t i = 0; i < m; ++i) {
        std::vector<Lit> lits;
        std::vector<std::int32_t> vars;
        while (static_cast<int>(vars.size()) < k) {
            const std::int32_t v = static_cast<std::int32_t>(rng.next_below(static_cast<std::uint64_t>(n))) + 1;
            bool dup = false;
            for (const std::int32_t u : vars) dup |= (u == v);
            if (!dup) vars.push_back(v);
        }
        for (const std::int32_t v : vars) lits.push_back(Lit::make(v, rng.next() & 1));
        f.add_clause(Clause::normalized(std::move(lits)));
    }
    return f;
}

inline Formula random_3sat(std::int32_t n, double ratio, std::uint64_t seed) {
    const auto m = static_cast<std::int32_t>(ratio * n + 0.5);
    return random_ksat(n, m, 3, seed);
}

// Pigeonhole principle PHP(pigeons, holes): unsatisfiable iff pigeons > holes.
// Variable (i, j) = pigeon i sits in hole j, numbered i * holes + j + 1.
inline Formula pigeonhole(std::int32_t pigeons, std::int32_t holes) {
    Formula f;
    f.num_variables = pigeons * holes;
    const auto var = [&](std::int32_t i, std::int32_t j) { return i * holes + j + 1; };
    for (std::int32_t i = 0; i < pigeons; ++i) {
        std::vector<Lit> lits;
        for (std::int32_t j = 0; j < holes; ++j) lits.push_back(Lit(var(i, j)));
        f.add_clause(Clause::normalized(std::move(lits)));
    }
    for (std::int32_t j = 0; j < holes; ++j)
        for (std::int32_t i1 = 0; i1 < pigeons; ++i1)
            for (std::int32_t i2 = i1 + 1; i2 < pigeons; ++i2)
                f.add_clause(Clause::normalized({Lit(-var(i1, j)), Lit(-var(i2, j))}));
    return f;
}

// Random formula with arbitrary widths, duplicate literals and occasional
// tautologies; exercises normalization and round-trip paths.
inline Formula random_messy_formula(std::int32_t n, std::int32_t m, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Formula f;
    f.num_variables = n;
    for (std::int32_t i = 0; i < m; ++i) {
        const int width = 1 + static_cast<int>(rng.next_below(5));
        std::vector<Lit> lits;
        for (int j = 0; j < width; ++j) {
            const std::int32_t v = static_cast<std::int32_t>(rng.next_below(static_cast<std::uint64_t>(n))) + 1;
            lits.push_back(Lit::make(v, rng.next() & 1));
        }
        f.add_clause(Clause::normalized(std::move(lits)));
    }
    return f;
}

}  // namespace cdclab::testsupport
