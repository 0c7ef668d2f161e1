#include "cdclab/textio.hpp"

#include <zlib.h>

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <stdexcept>
#include <system_error>
#include <vector>

namespace cdclab {

namespace {
bool ends_with_gz(std::string_view path) { return path.size() >= 3 && path.substr(path.size() - 3) == ".gz"; }
}  // namespace

struct LineReader::Impl {
    gzFile gz = nullptr;  // gzread handles plain files too, but keep stdio for clarity
    std::FILE* fp = nullptr;
    std::string buffer;
    std::size_t pos = 0;
    bool eof = false;

    bool fill() {
        if (eof) return false;
        char chunk[1 << 16];
        std::size_t got = 0;
        if (gz) {
            const int r = gzread(gz, chunk, sizeof(chunk));
            if (r < 0) throw std::runtime_error("gzip read error");
            got = static_cast<std::size_t>(r);
        } else {
            got = std::fread(chunk, 1, sizeof(chunk), fp);
        }
        if (got == 0) {
            eof = true;
            return false;
        }
        buffer.append(chunk, got);
        return true;
    }
};

LineReader::LineReader(const std::string& path) : impl_(std::make_unique<Impl>()), path_(path) {
    if (ends_with_gz(path)) {
        impl_->gz = gzopen(path.c_str(), "rb");
        if (!impl_->gz) throw std::runtime_error("cannot open " + path);
    } else {
        impl_->fp = std::fopen(path.c_str(), "rb");
        if (!impl_->fp) throw std::runtime_error("cannot open " + path);
    }
}

LineReader::~LineReader() {
    if (impl_->gz) gzclose(impl_->gz);
    if (impl_->fp) std::fclose(impl_->fp);
}

bool LineReader::next(std::string& out) {
    auto& im = *impl_;
    while (true) {
        const auto nl = im.buffer.find('\n', im.pos);
        if (nl != std::string::npos) {
            out.assign(im.buffer, im.pos, nl - im.pos);
            im.pos = nl + 1;
            if (im.pos > (1u << 20)) {  // trim consumed prefix occasionally
                im.buffer.erase(0, im.pos);
                im.pos = 0;
            }
            if (!out.empty() && out.back() == '\r') out.pop_back();
            ++line_number_;
            return true;
        }
        if (!im.fill()) {
            if (im.pos < im.buffer.size()) {
                out.assign(im.buffer, im.pos, im.buffer.size() - im.pos);
                im.pos = im.buffer.size();
                if (!out.empty() && out.back() == '\r') out.pop_back();
                ++line_number_;
                return true;
            }
            return false;
        }
    }
}

std::string read_text_file(const std::string& path) {
    LineReader reader(path);
    std::string out, line;
    while (reader.next(line)) {
        out += line;
        out += '\n';
    }
    return out;
}

void write_text_file(const std::string& path, std::string_view content) {
    const std::string tmp = path + ".tmp";
    std::FILE* fp = std::fopen(tmp.c_str(), "wb");
    if (!fp) throw std::runtime_error("cannot open " + tmp + " for writing");
    const std::size_t written = std::fwrite(content.data(), 1, content.size(), fp);
    const bool ok = written == content.size() && std::fclose(fp) == 0;
    if (!ok) {
        std::remove(tmp.c_str());
        throw std::runtime_error("short write to " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw std::runtime_error("rename " + tmp + " -> " + path + ": " + ec.message());
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string format_u64(std::uint64_t v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string format_i64(std::int64_t v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {
[[noreturn]] void bad_number(std::string_view s, std::string_view context) {
    throw std::runtime_error(std::string(context) + ": malformed number '" + std::string(s) + "'");
}
}  // namespace

double parse_double(std::string_view s, std::string_view context) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) bad_number(s, context);
    return v;
}

std::int64_t parse_i64(std::string_view s, std::string_view context) {
    std::int64_t v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) bad_number(s, context);
    return v;
}

std::uint64_t parse_u64(std::string_view s, std::string_view context) {
    std::uint64_t v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) bad_number(s, context);
    return v;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

std::string_view header_field(std::string_view line, std::string_view key) {
    for (const auto tok : split_ws(line)) {
        if (tok.size() > key.size() + 1 && tok.substr(0, key.size()) == key && tok[key.size()] == '=')
            return tok.substr(key.size() + 1);
    }
    return {};
}

}  // namespace cdclab
