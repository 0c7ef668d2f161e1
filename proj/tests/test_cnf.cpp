#include "doctest.h"

#include "cdclab/cnf.hpp"

#include "support/dpll.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace cdclab;
namespace ts = cdclab::testsupport;

TEST_CASE("literal negation is an involution") {
    const Lit l = Lit::make(7, true);
    CHECK(l.negated().negated() == l);
    CHECK(l.negated().var() == 7);
    CHECK_FALSE(l.negated().positive());
}

TEST_CASE("clause normalization removes duplicates and flags tautologies") {
    const Clause c = ts::clause({3, -2, 3, 1});
    CHECK(c.lits.size() == 3);
    CHECK(c.lits[0] == Lit(3));
    CHECK(c.lits[1] == Lit(-2));
    CHECK(c.lits[2] == Lit(1));
    CHECK_FALSE(c.tautological);

    const Clause taut = ts::clause({2, -5, -2});
    CHECK(taut.tautological);
    CHECK(taut.lits.size() == 3);  // kept, only flagged
}

TEST_CASE("assignment extends to negated literals") {
    Assignment a(4);
    a.set(2, true);
    CHECK(a.value_of(Lit(2)) == 1);
    CHECK(a.value_of(Lit(-2)) == 0);
    CHECK(a.value_of(Lit(3)) == -1);
    a.unset(2);
    CHECK(a.value_of(Lit(2)) == -1);
}

TEST_CASE("restrict removes satisfied clauses and false literals") {
    Assignment a(2);
    a.set(1, true);

    const Formula f1 = ts::formula(2, {{-1, 2}});
    const Formula r1 = restrict(f1, a);
    REQUIRE(r1.num_clauses() == 1);
    CHECK(r1.clauses[0].lits == std::vector<Lit>{Lit(2)});

    const Formula f2 = ts::formula(2, {{1, 2}});
    CHECK(restrict(f2, a).num_clauses() == 0);

    Assignment b(1);
    b.set(1, false);
    const Formula f3 = ts::formula(1, {{1}});
    const Formula r3 = restrict(f3, b);
    REQUIRE(r3.num_clauses() == 1);
    CHECK(r3.clauses[0].empty());  // conflict under b
}

TEST_CASE("restriction monotonicity: no clause count growth, no clause growth") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Formula f = ts::random_messy_formula(12, 30, seed);
        Assignment a(12);
        SplitMix64 rng(seed * 77 + 1);
        for (std::int32_t v = 1; v <= 12; ++v)
            if (rng.next_u01() < 0.4) a.set(v, rng.next() & 1);
        const Formula r = restrict(f, a);
        CHECK(r.num_clauses() <= f.num_clauses());
        // every restricted clause is a sub-clause of some original
        for (const Clause& rc : r.clauses) CHECK(rc.size() <= 5);
    }
}

TEST_CASE("logical consequence on the worked example") {
    const Formula f = ts::worked_example_formula();
    CHECK(is_logical_consequence(f, ts::clause({ts::kWx3, -ts::kWw})));
    // tautologies follow from anything
    CHECK(is_logical_consequence(f, ts::clause({5, -5})));
    // a clause contradicting a unit does not follow
    const Formula unit = ts::formula(1, {{1}});
    CHECK_FALSE(is_logical_consequence(unit, ts::clause({-1})));
}

TEST_CASE("consequence oracle rejects formulas over the variable bound") {
    Formula f;
    f.num_variables = kConsequenceVarLimit + 1;
    CHECK_THROWS_AS(is_logical_consequence(f, ts::clause({1})), std::invalid_argument);
}

TEST_CASE("oracle satisfiability agrees with DPLL on random instances") {
    int sat = 0, unsat = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Formula f = ts::random_3sat(12, 4.26, seed);
        const bool by_enum = oracle_satisfiable(f);
        const bool by_dpll = ts::dpll_satisfiable(f);
        CHECK(by_enum == by_dpll);
        (by_enum ? sat : unsat)++;
    }
    CHECK(sat > 0);
    CHECK(unsat > 0);
}

TEST_CASE("empty formula is satisfiable; empty clause is not") {
    Formula f;
    f.num_variables = 3;
    CHECK(oracle_satisfiable(f));
    f.add_clause(Clause{});
    CHECK_FALSE(oracle_satisfiable(f));
}
