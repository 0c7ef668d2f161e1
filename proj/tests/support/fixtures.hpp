// Shared test fixtures and small builders.
#pragma once

#include <initializer_list>
#include <vector>

#include "cdclab/cnf.hpp"

namespace cdclab::testsupport {

inline Clause clause(std::initializer_list<int> codes) {
    std::vector<Lit> lits;
    for (int c : codes) lits.push_back(Lit(c));
    return Clause::normalized(std::move(lits));
}

inline Formula formula(std::int32_t num_vars, std::initializer_list<std::initializer_list<int>> clauses) {
    Formula f;
    f.num_variables = num_vars;
    for (const auto& c : clauses) f.add_clause(clause(c));
    return f;
}

// The 8-clause worked example driving the conflict-analysis walkthrough.
// Variable map: x1=1 x2=2 x3=3 s=4 t=5 u=6 v=7 w=8 x=9 y=10.
inline Formula worked_example_formula() {
    return formula(10, {
                           {-1, 2},
                           {-2, 3, 4},
                           {-2, -5},
                           {-4, 5, 6},
                           {-7, 8},
                           {-8, -9},
                           {9, -10},
                           {3, -8, 10},
                       });
}

constexpr int kWx1 = 1, kWx2 = 2, kWx3 = 3, kWs = 4, kWt = 5, kWu = 6, kWv = 7, kWw = 8, kWx = 9, kWy = 10;

}  // namespace cdclab::testsupport
