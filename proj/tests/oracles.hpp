#pragma once

// Independent test oracles. These deliberately use brute-force formulations
// and must stay independent of the library implementations they check.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "t2l/common.hpp"

namespace oracles {

// Exhaustive-recursion edit distance (no DP), usable for strings up to
// ~8 code points.
inline size_t lev_recursive(const std::vector<char32_t>& a, const std::vector<char32_t>& b,
                            size_t i, size_t j) {
    if (i == a.size()) return b.size() - j;
    if (j == b.size()) return a.size() - i;
    size_t best = 1 + lev_recursive(a, b, i + 1, j);                        // delete
    best = std::min(best, 1 + lev_recursive(a, b, i, j + 1));               // insert
    const size_t sub = (a[i] == b[j] ? 0 : 1) + lev_recursive(a, b, i + 1, j + 1);
    return std::min(best, sub);
}

inline size_t lev_oracle(const std::string& a, const std::string& b) {
    const auto ca = t2l::utf8_decode(a);
    const auto cb = t2l::utf8_decode(b);
    return lev_recursive(ca, cb, 0, 0);
}

inline std::string random_string(t2l::Rng& rng, size_t max_len, const std::string& alphabet) {
    const size_t len = static_cast<size_t>(rng.below(max_len + 1));
    std::string out;
    for (size_t i = 0; i < len; ++i) {
        out.push_back(alphabet[static_cast<size_t>(rng.below(alphabet.size()))]);
    }
    return out;
}

}  // namespace oracles
