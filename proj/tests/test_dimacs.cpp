#include "doctest.h"

#include <zlib.h>

#include <filesystem>

#include "cdclab/dimacs.hpp"
#include "cdclab/textio.hpp"

#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace cdclab;
namespace ts = cdclab::testsupport;

TEST_CASE("parses a minimal instance") {
    const Formula f = parse_dimacs_text("p cnf 2 1\n1 -2 0");
    CHECK(f.num_variables == 2);
    REQUIRE(f.num_clauses() == 1);
    CHECK(f.clauses[0].lits == std::vector<Lit>{Lit(1), Lit(-2)});
}

TEST_CASE("parses an empty formula") {
    const Formula f = parse_dimacs_text("p cnf 1 0\n");
    CHECK(f.num_variables == 1);
    CHECK(f.num_clauses() == 0);
}

TEST_CASE("is whitespace and comment tolerant") {
    const Formula f = parse_dimacs_text("c header comment\np cnf 3 2\n  1   2 0  -3\n 2 0\nc trailing\n");
    REQUIRE(f.num_clauses() == 2);
    CHECK(f.clauses[1].lits == std::vector<Lit>{Lit(-3), Lit(2)});
}

TEST_CASE("the worked-example instance parses to 8 clauses of width <= 3") {
    const std::string text = write_dimacs(ts::worked_example_formula());
    const Formula f = parse_dimacs_text(text);
    CHECK(f.num_clauses() == 8);
    for (const Clause& c : f.clauses) CHECK(c.size() <= 3);
    CHECK(f.num_variables == 10);
}

TEST_CASE("reports malformed input with line numbers") {
    CHECK_THROWS_WITH_AS(parse_dimacs_text("p cnf x 1\n1 0\n"), doctest::Contains("line 1"), DimacsError);
    CHECK_THROWS_WITH_AS(parse_dimacs_text("p dnf 2 1\n1 0\n"), doctest::Contains("malformed header"), DimacsError);
    CHECK_THROWS_WITH_AS(parse_dimacs_text("p cnf 2 1\n1 3 0\n"), doctest::Contains("line 2"), DimacsError);
    CHECK_THROWS_AS(parse_dimacs_text("p cnf 2 1\n1 2\n"), DimacsError);       // missing terminator
    CHECK_THROWS_AS(parse_dimacs_text("p cnf 2 2\n1 0\n"), DimacsError);       // count mismatch
    CHECK_THROWS_AS(parse_dimacs_text("1 0\np cnf 2 1\n"), DimacsError);       // clause before header
}

TEST_CASE("write emits header and zero-terminated clauses") {
    Formula f = ts::formula(1, {{1}});
    CHECK(write_dimacs(f) == "p cnf 1 1\n1 0\n");
    Formula empty;
    empty.num_variables = 4;
    CHECK(write_dimacs(empty) == "p cnf 4 0\n");
}

TEST_CASE("round-trip is the identity on normalized formulas") {
    for (std::uint64_t seed = 100; seed < 140; ++seed) {
        const Formula f = ts::random_messy_formula(9, 25, seed);
        const Formula g = parse_dimacs_text(write_dimacs(f));
        CHECK(g.num_variables == f.num_variables);
        REQUIRE(g.num_clauses() == f.num_clauses());
        for (std::size_t i = 0; i < f.num_clauses(); ++i) {
            CHECK(g.clauses[i].lits == f.clauses[i].lits);
            CHECK(g.clauses[i].tautological == f.clauses[i].tautological);
        }
    }
}

TEST_CASE("gzip-compressed input is accepted for .gz paths") {
    const auto dir = std::filesystem::temp_directory_path() / "cdclab_test_gz";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / "tiny.cnf.gz").string();
    const std::string content = "p cnf 2 2\n1 2 0\n-1 0\n";
    gzFile gz = gzopen(path.c_str(), "wb");
    REQUIRE(gz != nullptr);
    gzwrite(gz, content.data(), static_cast<unsigned>(content.size()));
    gzclose(gz);

    const Formula f = parse_dimacs_file(path);
    CHECK(f.num_clauses() == 2);
    CHECK(f.clauses[1].lits == std::vector<Lit>{Lit(-1)});
    std::filesystem::remove_all(dir);
}
