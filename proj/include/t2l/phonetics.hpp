#pragma once

// IPA articulatory feature vectors, weighted feature edit distance and a
// pluggable grapheme-to-phoneme interface with built-in toy tables.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "t2l/common.hpp"
#include "t2l/phonetics_tables.hpp"

namespace t2l {

// Articulatory feature vectors per IPA segment plus per-feature weights.
// Immutable after load; all operations on it are pure.
class FeatureTable {
public:
    // first column "segment", remaining columns feature names, cells +/-/0
    static FeatureTable from_tsv(const Tsv& tsv) {
        if (tsv.columns.size() < 2 || tsv.columns[0] != "segment") {
            throw SchemaError("feature table: first column must be \"segment\"");
        }
        FeatureTable table;
        table.feature_names_.assign(tsv.columns.begin() + 1, tsv.columns.end());
        table.weights_.assign(table.feature_names_.size(), 1.0);
        for (size_t r = 0; r < tsv.rows.size(); ++r) {
            const auto& row = tsv.rows[r];
            std::vector<int8_t> vec(table.feature_names_.size());
            for (size_t f = 0; f < vec.size(); ++f) {
                const std::string& cell = row[f + 1];
                if (cell == "+") vec[f] = 1;
                else if (cell == "-") vec[f] = -1;
                else if (cell == "0") vec[f] = 0;
                else {
                    throw ParseError("row " + std::to_string(Tsv::line_of(r)) +
                                     ": feature value must be +, - or 0, got \"" + cell + "\"");
                }
            }
            if (!table.segments_.emplace(row[0], std::move(vec)).second) {
                throw ParseError("duplicate segment \"" + row[0] + "\"");
            }
            table.max_key_cps_ = std::max(table.max_key_cps_, utf8_decode(row[0]).size());
        }
        if (table.segments_.empty()) {
            throw SchemaError("feature table: no segments");
        }
        return table;
    }

    static FeatureTable from_file(const std::string& path) {
        return from_tsv(read_tsv(path));
    }

    // the shipped default table
    static const FeatureTable& builtin() {
        static const FeatureTable table = from_tsv(parse_tsv(tables::kFeatureTableTsv));
        return table;
    }

    // weights file: columns feature, weight; unlisted features keep 1.0
    void load_weights(const Tsv& tsv) {
        const size_t fi = tsv.column("feature");
        const size_t wi = tsv.column("weight");
        for (size_t r = 0; r < tsv.rows.size(); ++r) {
            const std::string& name = tsv.rows[r][fi];
            const auto it = std::find(feature_names_.begin(), feature_names_.end(), name);
            if (it == feature_names_.end()) {
                throw SchemaError("weights: unknown feature \"" + name + "\"");
            }
            const double w = parse_double(tsv.rows[r][wi], Tsv::line_of(r), "weight");
            if (w < 0.0) {
                throw ParseError("weights: feature \"" + name + "\" must be non-negative");
            }
            weights_[static_cast<size_t>(it - feature_names_.begin())] = w;
        }
        if (weight_sum() <= 0.0) {
            throw ConfigError("weights: at least one feature weight must be positive");
        }
    }

    void load_weights_file(const std::string& path) { load_weights(read_tsv(path)); }

    bool has(std::string_view segment) const {
        return segments_.find(std::string(segment)) != segments_.end();
    }

    const std::vector<int8_t>& vector_of(const std::string& segment) const {
        const auto it = segments_.find(segment);
        if (it == segments_.end()) {
            throw Error("unknown segment \"" + segment + "\"");
        }
        return it->second;
    }

    // substitution cost in [0,1]: weighted mean of halved feature
    // differences (values live in {-1,0,+1})
    double substitution_cost(const std::string& a, const std::string& b) const {
        if (a == b) {
            return 0.0;
        }
        const auto& va = vector_of(a);
        const auto& vb = vector_of(b);
        double num = 0.0;
        for (size_t f = 0; f < va.size(); ++f) {
            num += weights_[f] * std::abs(static_cast<int>(va[f]) - static_cast<int>(vb[f])) * 0.5;
        }
        return num / weight_sum();
    }

    double weight_sum() const {
        double s = 0.0;
        for (double w : weights_) s += w;
        return s;
    }

    size_t feature_count() const { return feature_names_.size(); }
    size_t segment_count() const { return segments_.size(); }
    size_t max_key_code_points() const { return max_key_cps_; }
    const std::vector<std::string>& feature_names() const { return feature_names_; }

    std::vector<std::string> segment_names() const {
        std::vector<std::string> out;
        out.reserve(segments_.size());
        for (const auto& [k, v] : segments_) out.push_back(k);
        return out;
    }

private:
    std::vector<std::string> feature_names_;
    std::vector<double> weights_;
    std::map<std::string, std::vector<int8_t>> segments_;
    size_t max_key_cps_ = 0;
};

// Greedy longest-match segmentation of an IPA string against the table
// keys; combining marks ride with their base inside multi-code-point keys.
// Offsets in errors are code-point indices.
inline std::vector<std::string> segment_ipa(std::string_view ipa, const FeatureTable& table) {
    const std::vector<char32_t> cps = utf8_decode(ipa);
    std::vector<std::string> segments;
    size_t i = 0;
    while (i < cps.size()) {
        const size_t max_len = std::min(table.max_key_code_points(), cps.size() - i);
        bool matched = false;
        for (size_t len = max_len; len >= 1; --len) {
            std::string key;
            for (size_t k = 0; k < len; ++k) utf8_append(key, cps[i + k]);
            if (table.has(key)) {
                segments.push_back(std::move(key));
                i += len;
                matched = true;
                break;
            }
        }
        if (!matched) {
            std::string bad;
            utf8_append(bad, cps[i]);
            throw Error("unknown segment at offset " + std::to_string(i) + ": \"" + bad + "\"");
        }
    }
    return segments;
}

// Minimum-cost alignment with substitution cost from the feature table and
// unit insertion/deletion cost. Substitutions never cost more than 1, so
// the result is bounded by the plain Levenshtein distance.
inline double weighted_feature_edit_distance(const std::vector<std::string>& a,
                                             const std::vector<std::string>& b,
                                             const FeatureTable& table) {
    const size_t n = a.size();
    const size_t m = b.size();
    std::vector<double> prev(m + 1), cur(m + 1);
    for (size_t j = 0; j <= m; ++j) prev[j] = static_cast<double>(j);
    for (size_t i = 1; i <= n; ++i) {
        cur[0] = static_cast<double>(i);
        for (size_t j = 1; j <= m; ++j) {
            const double sub = prev[j - 1] + table.substitution_cost(a[i - 1], b[j - 1]);
            cur[j] = std::min({prev[j] + 1.0, cur[j - 1] + 1.0, sub});
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

// Grapheme-to-phoneme interface. Implementations must emit only segments
// present in the feature table in use.
class G2PProvider {
public:
    virtual ~G2PProvider() = default;
    virtual std::vector<std::string> to_ipa(std::string_view text, std::string_view lang) const = 0;
};

// Deterministic table-driven provider: greedy longest-match of graphemes
// (characters and digraphs) to space-separated IPA segments.
class TableG2P : public G2PProvider {
public:
    // g2p table TSV: columns grapheme, ipa
    void load_language(const std::string& lang, const Tsv& tsv) {
        const size_t gi = tsv.column("grapheme");
        const size_t ii = tsv.column("ipa");
        LangTable table;
        for (size_t r = 0; r < tsv.rows.size(); ++r) {
            const std::string& grapheme = tsv.rows[r][gi];
            if (grapheme.empty()) {
                throw ParseError("row " + std::to_string(Tsv::line_of(r)) + ": empty grapheme");
            }
            std::vector<std::string> segs;
            for (const auto& s : split(tsv.rows[r][ii], ' ')) {
                if (!s.empty()) segs.push_back(s);
            }
            if (!table.entries.emplace(grapheme, std::move(segs)).second) {
                throw ParseError("duplicate grapheme \"" + grapheme + "\"");
            }
            table.max_key_cps = std::max(table.max_key_cps, utf8_decode(grapheme).size());
        }
        tables_[lang] = std::move(table);
    }

    void load_language_file(const std::string& lang, const std::string& path) {
        load_language(lang, read_tsv(path));
    }

    std::vector<std::string> to_ipa(std::string_view text, std::string_view lang) const override {
        const auto lt = tables_.find(std::string(lang));
        if (lt == tables_.end()) {
            throw ConfigError("g2p: unsupported language tag \"" + std::string(lang) + "\"");
        }
        const LangTable& table = lt->second;
        const std::vector<char32_t> cps = utf8_decode(text);
        std::vector<std::string> out;
        size_t i = 0;
        while (i < cps.size()) {
            const size_t max_len = std::min(table.max_key_cps, cps.size() - i);
            bool matched = false;
            for (size_t len = max_len; len >= 1; --len) {
                std::string key;
                for (size_t k = 0; k < len; ++k) utf8_append(key, cps[i + k]);
                const auto it = table.entries.find(key);
                if (it != table.entries.end()) {
                    out.insert(out.end(), it->second.begin(), it->second.end());
                    i += len;
                    matched = true;
                    break;
                }
            }
            if (!matched) {
                std::string bad;
                utf8_append(bad, cps[i]);
                throw Error("g2p (" + std::string(lang) + "): unknown character at offset " +
                            std::to_string(i) + ": \"" + bad + "\"");
            }
        }
        return out;
    }

private:
    struct LangTable {
        std::map<std::string, std::vector<std::string>> entries;
        size_t max_key_cps = 0;
    };
    std::map<std::string, LangTable> tables_;
};

// The shipped toy provider for language tags "th" and "en".
inline TableG2P builtin_toy_g2p() {
    TableG2P g2p;
    g2p.load_language("th", parse_tsv(tables::kThaiG2pTsv));
    g2p.load_language("en", parse_tsv(tables::kEnglishG2pTsv));
    return g2p;
}

// Feature edit distance between the Thai pronunciation and the British-read
// Latin variant, normalized by the longer segment sequence.
inline double phonetic_distance(std::string_view thai, std::string_view latin,
                                const G2PProvider& g2p, const FeatureTable& table) {
    std::vector<std::string> seg_th, seg_en;
    try {
        seg_th = g2p.to_ipa(nfc_thai(thai), "th");
    } catch (const Error& e) {
        throw Error(std::string(e.what()) + " (in \"" + std::string(thai) + "\")");
    }
    try {
        seg_en = g2p.to_ipa(ascii_lower(latin), "en");
    } catch (const Error& e) {
        throw Error(std::string(e.what()) + " (in \"" + std::string(latin) + "\")");
    }
    for (const auto& segs : {seg_th, seg_en}) {
        for (const auto& s : segs) {
            if (!table.has(s)) {
                throw Error("g2p produced segment \"" + s + "\" missing from the feature table");
            }
        }
    }
    const size_t longer = std::max(seg_th.size(), seg_en.size());
    if (longer == 0) {
        return 0.0;
    }
    return weighted_feature_edit_distance(seg_th, seg_en, table) / static_cast<double>(longer);
}

}  // namespace t2l
