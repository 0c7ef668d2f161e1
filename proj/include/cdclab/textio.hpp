// Line-oriented text I/O. Input transparently decompresses gzip when the
// file name ends in ".gz". Number formatting goes through std::to_chars so
// emitted files are byte-stable across runs.
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace cdclab {

class LineReader {
  public:
    // Throws std::runtime_error if the file cannot be opened.
    explicit LineReader(const std::string& path);
    ~LineReader();

    LineReader(const LineReader&) = delete;
    LineReader& operator=(const LineReader&) = delete;

    // Reads the next line (without the trailing newline) into `out`.
    // Returns false at end of input.
    bool next(std::string& out);

    std::size_t line_number() const { return line_number_; }
    const std::string& path() const { return path_; }

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    std::string path_;
    std::size_t line_number_ = 0;
};

// Reads a whole (possibly gzipped) file into a string.
std::string read_text_file(const std::string& path);

// Atomic-ish write: writes to path + ".tmp" then renames over path.
void write_text_file(const std::string& path, std::string_view content);

// Shortest round-trip decimal form of a double ("%g"-like, via to_chars).
std::string format_double(double v);
std::string format_u64(std::uint64_t v);
std::string format_i64(std::int64_t v);

// Strict parsers; throw std::runtime_error with `context` on malformed input.
double parse_double(std::string_view s, std::string_view context);
std::int64_t parse_i64(std::string_view s, std::string_view context);
std::uint64_t parse_u64(std::string_view s, std::string_view context);

// Splits on runs of spaces/tabs; no empty tokens.
std::vector<std::string_view> split_ws(std::string_view line);

// Returns the value of "key=..." in a header line, or empty if absent.
std::string_view header_field(std::string_view line, std::string_view key);

}  // namespace cdclab
