#include "cdclab/dimacs.hpp"

#include <sstream>

#include "cdclab/textio.hpp"

namespace cdclab {

namespace {

struct Parser {
    Formula formula;
    bool header_seen = false;
    bool done = false;
    std::size_t declared_clauses = 0;
    std::vector<Lit> pending;

    [[noreturn]] void fail(std::size_t line_no, const std::string& what) {
        throw DimacsError("dimacs line " + std::to_string(line_no) + ": " + what);
    }

    std::int64_t number(std::string_view tok, std::size_t line_no) {
        try {
            return parse_i64(tok, "dimacs");
        } catch (const std::exception&) {
            fail(line_no, "malformed number '" + std::string(tok) + "'");
        }
    }

    void feed(std::string_view line, std::size_t line_no) {
        if (done) return;
        const auto tokens = split_ws(line);
        if (tokens.empty()) return;
        if (tokens[0][0] == 'c') return;
        if (tokens[0][0] == '%') {  // SATLIB-style end marker
            done = true;
            return;
        }
        if (tokens[0] == "p") {
            if (header_seen) fail(line_no, "duplicate header");
            if (tokens.size() != 4 || tokens[1] != "cnf") fail(line_no, "malformed header (want 'p cnf <vars> <clauses>')");
            const std::int64_t vars = number(tokens[2], line_no);
            const std::int64_t clauses = number(tokens[3], line_no);
            if (vars < 0 || clauses < 0) fail(line_no, "negative counts in header");
            formula.num_variables = static_cast<std::int32_t>(vars);
            declared_clauses = static_cast<std::size_t>(clauses);
            header_seen = true;
            return;
        }
        if (!header_seen) fail(line_no, "clause data before 'p cnf' header");
        for (const auto tok : tokens) {
            const std::int64_t code = number(tok, line_no);
            if (code == 0) {
                formula.add_clause(Clause::normalized(std::move(pending)), ClauseOrigin::Base);
                pending.clear();
                continue;
            }
            const std::int64_t var = code < 0 ? -code : code;
            if (var > formula.num_variables)
                fail(line_no, "literal " + std::string(tok) + " exceeds declared variable bound " +
                                  std::to_string(formula.num_variables));
            pending.push_back(Lit(static_cast<std::int32_t>(code)));
        }
    }

    Formula finish(std::size_t last_line) {
        if (!header_seen) fail(last_line, "missing 'p cnf' header");
        if (!pending.empty()) fail(last_line, "unterminated clause (missing trailing 0)");
        if (formula.num_clauses() != declared_clauses)
            fail(last_line, "clause count " + std::to_string(formula.num_clauses()) + " does not match header " +
                                std::to_string(declared_clauses));
        return std::move(formula);
    }
};

}  // namespace

Formula parse_dimacs_text(const std::string& text) {
    Parser parser;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto nl = text.find('\n', start);
        const auto end = nl == std::string::npos ? text.size() : nl;
        ++line_no;
        parser.feed(std::string_view(text).substr(start, end - start), line_no);
        if (nl == std::string::npos) break;
        start = nl + 1;
    }
    return parser.finish(line_no);
}

Formula parse_dimacs_file(const std::string& path) {
    Parser parser;
    LineReader reader(path);
    std::string line;
    while (reader.next(line)) parser.feed(line, reader.line_number());
    return parser.finish(reader.line_number());
}

std::string write_dimacs(const Formula& f) {
    std::string out;
    out += "p cnf " + std::to_string(f.num_variables) + " " + std::to_string(f.num_clauses()) + "\n";
    for (const Clause& c : f.clauses) {
        for (const Lit l : c.lits) {
            out += std::to_string(l.code());
            out += ' ';
        }
        out += "0\n";
    }
    return out;
}

void write_dimacs_file(const Formula& f, const std::string& path) { write_text_file(path, write_dimacs(f)); }

}  // namespace cdclab
