// DIMACS CNF reader/writer. Reading is whitespace tolerant, accepts clause
// data spread over arbitrary lines, and reports malformed input with line
// numbers. Files ending in ".gz" are read through zlib.
#pragma once

#include <stdexcept>
#include <string>

#include "cdclab/cnf.hpp"

namespace cdclab {

struct DimacsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Formula parse_dimacs_text(const std::string& text);
Formula parse_dimacs_file(const std::string& path);

// Inverse of parsing: emits the declared header and one zero-terminated
// clause line per clause, preserving clause and literal order.
std::string write_dimacs(const Formula& f);
void write_dimacs_file(const Formula& f, const std::string& path);

}  // namespace cdclab
