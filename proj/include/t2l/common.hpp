#pragma once

// Shared plumbing: error types, UTF-8 handling, Thai text normalization,
// deterministic RNG, TSV I/O and number formatting.

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace t2l {

// ---------------------------------------------------------------- errors

// Data-level failures. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input file does not match the expected column schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

// A cell or byte sequence could not be parsed.
class ParseError : public Error {
public:
    using Error::Error;
};

// Invalid configuration (bad hyperparameters, inconsistent shapes, ...).
class ConfigError : public Error {
public:
    using Error::Error;
};

// ---------------------------------------------------------------- strings

inline std::string ascii_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') {
            c = static_cast<char>(c - 'A' + 'a');
        }
    }
    return out;
}

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.emplace_back(s.substr(start));
            break;
        }
        parts.emplace_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

// ---------------------------------------------------------------- UTF-8

inline bool utf8_valid(std::string_view s) {
    size_t i = 0;
    const size_t n = s.size();
    while (i < n) {
        const unsigned char b = static_cast<unsigned char>(s[i]);
        size_t len;
        uint32_t cp;
        if (b < 0x80) {
            i += 1;
            continue;
        } else if ((b & 0xE0) == 0xC0) {
            len = 2;
            cp = b & 0x1Fu;
        } else if ((b & 0xF0) == 0xE0) {
            len = 3;
            cp = b & 0x0Fu;
        } else if ((b & 0xF8) == 0xF0) {
            len = 4;
            cp = b & 0x07u;
        } else {
            return false;
        }
        if (i + len > n) {
            return false;
        }
        for (size_t k = 1; k < len; ++k) {
            const unsigned char c = static_cast<unsigned char>(s[i + k]);
            if ((c & 0xC0) != 0x80) {
                return false;
            }
            cp = (cp << 6) | (c & 0x3Fu);
        }
        // reject overlong encodings, surrogates, out-of-range
        if (len == 2 && cp < 0x80) return false;
        if (len == 3 && cp < 0x800) return false;
        if (len == 4 && cp < 0x10000) return false;
        if (cp >= 0xD800 && cp <= 0xDFFF) return false;
        if (cp > 0x10FFFF) return false;
        i += len;
    }
    return true;
}

inline std::vector<char32_t> utf8_decode(std::string_view s) {
    if (!utf8_valid(s)) {
        throw ParseError("invalid UTF-8 byte sequence");
    }
    std::vector<char32_t> cps;
    cps.reserve(s.size());
    size_t i = 0;
    while (i < s.size()) {
        const unsigned char b = static_cast<unsigned char>(s[i]);
        if (b < 0x80) {
            cps.push_back(b);
            i += 1;
        } else if ((b & 0xE0) == 0xC0) {
            cps.push_back(((b & 0x1Fu) << 6) | (static_cast<unsigned char>(s[i + 1]) & 0x3Fu));
            i += 2;
        } else if ((b & 0xF0) == 0xE0) {
            cps.push_back(((b & 0x0Fu) << 12) | ((static_cast<unsigned char>(s[i + 1]) & 0x3Fu) << 6) |
                          (static_cast<unsigned char>(s[i + 2]) & 0x3Fu));
            i += 3;
        } else {
            cps.push_back(((b & 0x07u) << 18) | ((static_cast<unsigned char>(s[i + 1]) & 0x3Fu) << 12) |
                          ((static_cast<unsigned char>(s[i + 2]) & 0x3Fu) << 6) |
                          (static_cast<unsigned char>(s[i + 3]) & 0x3Fu));
            i += 4;
        }
    }
    return cps;
}

inline void utf8_append(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

inline std::string utf8_encode(const std::vector<char32_t>& cps) {
    std::string out;
    out.reserve(cps.size() * 3);
    for (char32_t cp : cps) {
        utf8_append(out, cp);
    }
    return out;
}

// ---------------------------------------------------------------- Thai text

inline bool is_thai(char32_t cp) {
    return cp >= 0x0E00 && cp <= 0x0E7F;
}

inline bool contains_thai(std::string_view s) {
    for (char32_t cp : utf8_decode(s)) {
        if (is_thai(cp)) {
            return true;
        }
    }
    return false;
}

// Unicode canonical combining class for the Thai block. Thai has no
// precomposed characters, so NFC reduces to canonical reordering of
// combining marks by these classes.
inline int thai_combining_class(char32_t cp) {
    if (cp == 0x0E38 || cp == 0x0E39) return 103;  // sara u / sara uu
    if (cp == 0x0E3A) return 9;                    // phinthu
    if (cp >= 0x0E48 && cp <= 0x0E4B) return 107;  // tone marks
    return 0;
}

// NFC normalization for Thai-script strings: canonical reordering of
// combining marks. Non-Thai code points are treated as starters.
inline std::string nfc_thai(std::string_view s) {
    std::vector<char32_t> cps = utf8_decode(s);
    // bubble nonstarters into canonical order (stable for equal classes)
    for (size_t i = 1; i < cps.size(); ++i) {
        const int cc = thai_combining_class(cps[i]);
        if (cc == 0) {
            continue;
        }
        size_t j = i;
        while (j > 0) {
            const int prev = thai_combining_class(cps[j - 1]);
            if (prev == 0 || prev <= cc) {
                break;
            }
            std::swap(cps[j - 1], cps[j]);
            --j;
        }
    }
    return utf8_encode(cps);
}

// ---------------------------------------------------------------- RNG

// Deterministic splitmix64 generator. Used everywhere randomness is
// needed so results do not depend on the standard library's unspecified
// distribution implementations.
class Rng {
public:
    explicit Rng(uint64_t seed) : seed_(seed), state_(seed) {}

    uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // uniform integer in [0, n), n > 0
    uint64_t below(uint64_t n) {
        // rejection sampling to avoid modulo bias
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    double normal(double mean = 0.0, double stddev = 1.0) {
        if (has_spare_) {
            has_spare_ = false;
            return mean + spare_ * stddev;
        }
        double u1;
        do {
            u1 = next_double();
        } while (u1 <= 0.0);
        const double u2 = next_double();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.141592653589793238462643 * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return mean + r * std::cos(theta) * stddev;
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            const size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // Derives an independent deterministic stream. Depends only on the
    // seed this Rng was constructed with and the stream index, never on
    // how many numbers were drawn in between.
    Rng fork(uint64_t stream) const {
        uint64_t z = seed_ ^ (0xA0761D6478BD642Full + stream * 0xE7037ED1A0B428DBull);
        z = (z ^ (z >> 32)) * 0xD6E8FEB86659FD93ull;
        z = (z ^ (z >> 32)) * 0xD6E8FEB86659FD93ull;
        return Rng(z ^ (z >> 32));
    }

private:
    uint64_t seed_;
    uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// ---------------------------------------------------------------- numbers

// %.6g formatting used for all JSON artifacts so outputs are byte-stable.
inline std::string format_g6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

// Rounds to 6 significant digits via the fixed text representation.
inline double round6(double x) {
    return std::strtod(format_g6(x).c_str(), nullptr);
}

// Shortest round-trip representation, used in TSV cells so that a
// write/read cycle reproduces every value bit-for-bit.
inline std::string format_full(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view cell, size_t line_no, std::string_view column) {
    double value = 0.0;
    auto res = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (res.ec != std::errc() || res.ptr != cell.data() + cell.size()) {
        throw ParseError("row " + std::to_string(line_no) + ": cell \"" + std::string(cell) +
                         "\" in column \"" + std::string(column) + "\" is not a number");
    }
    return value;
}

inline long long parse_int(std::string_view cell, size_t line_no, std::string_view column) {
    long long value = 0;
    auto res = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (res.ec != std::errc() || res.ptr != cell.data() + cell.size()) {
        throw ParseError("row " + std::to_string(line_no) + ": cell \"" + std::string(cell) +
                         "\" in column \"" + std::string(column) + "\" is not an integer");
    }
    return value;
}

// ---------------------------------------------------------------- TSV

// UTF-8 TSV with a header row, '\t' separators and '\n' line ends.
struct Tsv {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    // index of a required column; SchemaError names the missing column
    size_t column(std::string_view name) const {
        for (size_t i = 0; i < columns.size(); ++i) {
            if (columns[i] == name) {
                return i;
            }
        }
        throw SchemaError("missing column \"" + std::string(name) + "\"");
    }

    bool has_column(std::string_view name) const {
        return std::find(columns.begin(), columns.end(), name) != columns.end();
    }

    // physical line number of data row r (header is line 1)
    static size_t line_of(size_t row_index) {
        return row_index + 2;
    }
};

inline Tsv parse_tsv(std::string_view text) {
    Tsv tsv;
    size_t pos = 0;
    bool header = true;
    while (pos <= text.size()) {
        if (pos == text.size()) {
            break;
        }
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        pos = end + 1;
        if (header) {
            tsv.columns = split(line, '\t');
            header = false;
            continue;
        }
        if (line.empty()) {
            continue;
        }
        auto cells = split(line, '\t');
        if (cells.size() != tsv.columns.size()) {
            throw ParseError("row " + std::to_string(tsv.rows.size() + 2) + ": expected " +
                             std::to_string(tsv.columns.size()) + " cells, got " +
                             std::to_string(cells.size()));
        }
        tsv.rows.push_back(std::move(cells));
    }
    if (tsv.columns.empty() || (tsv.columns.size() == 1 && tsv.columns[0].empty())) {
        throw SchemaError("empty TSV: no header row");
    }
    return tsv;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open file: " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write file: " + path);
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
        throw Error("write failed: " + path);
    }
}

inline Tsv read_tsv(const std::string& path) {
    return parse_tsv(read_file(path));
}

inline std::string serialize_tsv(const Tsv& tsv) {
    std::string out;
    for (size_t i = 0; i < tsv.columns.size(); ++i) {
        if (i) out.push_back('\t');
        out += tsv.columns[i];
    }
    out.push_back('\n');
    for (const auto& row : tsv.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out.push_back('\t');
            out += row[i];
        }
        out.push_back('\n');
    }
    return out;
}

inline void write_tsv(const std::string& path, const Tsv& tsv) {
    write_file(path, serialize_tsv(tsv));
}

}  // namespace t2l
