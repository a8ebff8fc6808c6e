#pragma once

// Data model and TSV serialization for name pairs, candidate records with
// selection features, curated training pairs and dataset splits.

#include <array>
#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "t2l/common.hpp"

namespace t2l {

// A Thai-script name and one Latin-script romanization of it. Thai is
// NFC-normalized and Latin lowercased on construction.
struct NamePair {
    std::string thai;
    std::string latin;
};

inline NamePair make_name_pair(std::string_view thai, std::string_view latin) {
    NamePair pair{nfc_thai(thai), ascii_lower(latin)};
    if (pair.thai.empty()) {
        throw ParseError("thai name is empty");
    }
    if (pair.latin.empty()) {
        throw ParseError("latin name is empty");
    }
    if (!contains_thai(pair.thai)) {
        throw ParseError("thai name \"" + pair.thai + "\" has no Thai-block code point");
    }
    return pair;
}

// Fixed feature-vector ordering used by the selection model.
inline constexpr std::array<const char*, 9> kFeatureNames = {
    "cnt_th",        "phonetic_distance", "cnt_latin",
    "rtgs_similarity", "collocations3",   "collocations2",
    "collocations",  "google",            "azure",
};

// One Thai/Latin pair with all nine selection features.
struct CandidateRecord {
    NamePair pair;
    long long cnt_th = 0;
    long long cnt_latin = 0;
    double phonetic_distance = 0.0;
    long long rtgs_similarity = 0;
    long long collocations = 0;
    long long collocations2 = 0;
    long long collocations3 = 0;
    int google = 0;
    int azure = 0;

    std::array<double, 9> features() const {
        return {static_cast<double>(cnt_th),
                phonetic_distance,
                static_cast<double>(cnt_latin),
                static_cast<double>(rtgs_similarity),
                static_cast<double>(collocations3),
                static_cast<double>(collocations2),
                static_cast<double>(collocations),
                static_cast<double>(google),
                static_cast<double>(azure)};
    }
};

struct LabeledRecord {
    CandidateRecord record;
    int label = 0;  // 1 = positive, 0 = negative
};

// A curated training pair with its selection probability and integer
// upsampling weight.
struct WeightedPair {
    NamePair pair;
    double probability = 0.0;
    int weight = 1;
};

// A candidate pair carrying its classifier probability, before weighting.
struct ScoredPair {
    NamePair pair;
    double probability = 0.0;
};

// One evaluation item: a Thai name with 1-3 distinct reference
// transliterations.
struct EvalItem {
    std::string thai;
    std::vector<std::string> references;
};

struct SplitSpec {
    double train_frac = 0.990;
    double valid_frac = 0.005;
    double test_frac = 0.005;
    uint64_t seed = 42;

    void validate() const {
        if (std::fabs(train_frac + valid_frac + test_frac - 1.0) > 1e-9) {
            throw ConfigError("split fractions must sum to 1");
        }
        if (train_frac < 0 || valid_frac < 0 || test_frac < 0) {
            throw ConfigError("split fractions must be non-negative");
        }
    }
};

// ---------------------------------------------------------------- TSV schemas

// Column order of the candidate TSV (distinct from the feature-vector order).
inline constexpr std::array<const char*, 11> kCandidateColumns = {
    "thai",         "latin",         "cnt_th",        "cnt_latin",
    "phonetic_distance", "rtgs_similarity", "collocations", "collocations2",
    "collocations3", "google",       "azure",
};

namespace detail {

inline long long parse_count(std::string_view cell, size_t line, std::string_view col) {
    const long long v = parse_int(cell, line, col);
    if (v < 0) {
        throw ParseError("row " + std::to_string(line) + ": column \"" + std::string(col) +
                         "\" must be non-negative");
    }
    return v;
}

inline int parse_flag(std::string_view cell, size_t line, std::string_view col) {
    const long long v = parse_int(cell, line, col);
    if (v != 0 && v != 1) {
        throw ParseError("row " + std::to_string(line) + ": column \"" + std::string(col) +
                         "\" must be 0 or 1");
    }
    return static_cast<int>(v);
}

inline CandidateRecord candidate_from_row(const Tsv& tsv, size_t r,
                                          const std::array<size_t, 11>& idx) {
    const auto& row = tsv.rows[r];
    const size_t line = Tsv::line_of(r);
    CandidateRecord rec;
    try {
        rec.pair = make_name_pair(row[idx[0]], row[idx[1]]);
    } catch (const ParseError& e) {
        throw ParseError("row " + std::to_string(line) + ": " + e.what());
    }
    rec.cnt_th = parse_count(row[idx[2]], line, "cnt_th");
    rec.cnt_latin = parse_count(row[idx[3]], line, "cnt_latin");
    rec.phonetic_distance = parse_double(row[idx[4]], line, "phonetic_distance");
    if (rec.phonetic_distance < 0) {
        throw ParseError("row " + std::to_string(line) + ": phonetic_distance must be non-negative");
    }
    rec.rtgs_similarity = parse_count(row[idx[5]], line, "rtgs_similarity");
    rec.collocations = parse_count(row[idx[6]], line, "collocations");
    rec.collocations2 = parse_count(row[idx[7]], line, "collocations2");
    rec.collocations3 = parse_count(row[idx[8]], line, "collocations3");
    rec.google = parse_flag(row[idx[9]], line, "google");
    rec.azure = parse_flag(row[idx[10]], line, "azure");
    return rec;
}

inline std::array<size_t, 11> candidate_column_indices(const Tsv& tsv) {
    std::array<size_t, 11> idx{};
    for (size_t i = 0; i < kCandidateColumns.size(); ++i) {
        idx[i] = tsv.column(kCandidateColumns[i]);
    }
    return idx;
}

}  // namespace detail

inline std::vector<CandidateRecord> parse_candidates(const Tsv& tsv) {
    const auto idx = detail::candidate_column_indices(tsv);
    std::vector<CandidateRecord> out;
    out.reserve(tsv.rows.size());
    for (size_t r = 0; r < tsv.rows.size(); ++r) {
        out.push_back(detail::candidate_from_row(tsv, r, idx));
    }
    return out;
}

inline std::vector<CandidateRecord> read_candidates(const std::string& path) {
    return parse_candidates(read_tsv(path));
}

inline Tsv candidates_to_tsv(const std::vector<CandidateRecord>& records) {
    Tsv tsv;
    tsv.columns.assign(kCandidateColumns.begin(), kCandidateColumns.end());
    for (const auto& rec : records) {
        tsv.rows.push_back({rec.pair.thai, rec.pair.latin, std::to_string(rec.cnt_th),
                            std::to_string(rec.cnt_latin), format_full(rec.phonetic_distance),
                            std::to_string(rec.rtgs_similarity), std::to_string(rec.collocations),
                            std::to_string(rec.collocations2), std::to_string(rec.collocations3),
                            std::to_string(rec.google), std::to_string(rec.azure)});
    }
    return tsv;
}

inline void write_candidates(const std::string& path, const std::vector<CandidateRecord>& records) {
    write_tsv(path, candidates_to_tsv(records));
}

// Labeled TSV: candidate columns plus label in {0,1}.
inline std::vector<LabeledRecord> parse_labeled(const Tsv& tsv) {
    const auto idx = detail::candidate_column_indices(tsv);
    const size_t label_idx = tsv.column("label");
    std::vector<LabeledRecord> out;
    out.reserve(tsv.rows.size());
    for (size_t r = 0; r < tsv.rows.size(); ++r) {
        LabeledRecord rec;
        rec.record = detail::candidate_from_row(tsv, r, idx);
        rec.label = detail::parse_flag(tsv.rows[r][label_idx], Tsv::line_of(r), "label");
        out.push_back(std::move(rec));
    }
    return out;
}

inline std::vector<LabeledRecord> read_labeled(const std::string& path) {
    return parse_labeled(read_tsv(path));
}

// Scored TSV: at least thai, latin and probability columns (the output of
// select-score). Extra columns are ignored.
inline std::vector<ScoredPair> parse_scored(const Tsv& tsv) {
    const size_t thai_idx = tsv.column("thai");
    const size_t latin_idx = tsv.column("latin");
    const size_t prob_idx = tsv.column("probability");
    std::vector<ScoredPair> out;
    out.reserve(tsv.rows.size());
    for (size_t r = 0; r < tsv.rows.size(); ++r) {
        const size_t line = Tsv::line_of(r);
        ScoredPair sp;
        try {
            sp.pair = make_name_pair(tsv.rows[r][thai_idx], tsv.rows[r][latin_idx]);
        } catch (const ParseError& e) {
            throw ParseError("row " + std::to_string(line) + ": " + e.what());
        }
        sp.probability = parse_double(tsv.rows[r][prob_idx], line, "probability");
        if (sp.probability < 0.0 || sp.probability > 1.0) {
            throw ParseError("row " + std::to_string(line) + ": probability out of [0,1]");
        }
        out.push_back(std::move(sp));
    }
    return out;
}

// Evaluation TSV: columns thai, ref1, ref2, ref3 (ref2/ref3 may be empty).
inline std::vector<EvalItem> parse_eval_items(const Tsv& tsv) {
    const size_t thai_idx = tsv.column("thai");
    const std::array<size_t, 3> ref_idx = {tsv.column("ref1"), tsv.column("ref2"),
                                           tsv.column("ref3")};
    std::vector<EvalItem> out;
    out.reserve(tsv.rows.size());
    for (size_t r = 0; r < tsv.rows.size(); ++r) {
        const size_t line = Tsv::line_of(r);
        EvalItem item;
        item.thai = nfc_thai(tsv.rows[r][thai_idx]);
        if (item.thai.empty()) {
            throw ParseError("row " + std::to_string(line) + ": thai name is empty");
        }
        for (size_t k = 0; k < 3; ++k) {
            const std::string ref = ascii_lower(tsv.rows[r][ref_idx[k]]);
            if (ref.empty()) {
                continue;
            }
            if (std::find(item.references.begin(), item.references.end(), ref) !=
                item.references.end()) {
                throw ParseError("row " + std::to_string(line) + ": duplicate reference \"" + ref +
                                 "\"");
            }
            item.references.push_back(ref);
        }
        if (item.references.empty()) {
            throw ParseError("row " + std::to_string(line) + ": no references");
        }
        out.push_back(std::move(item));
    }
    return out;
}

inline std::vector<EvalItem> read_eval_items(const std::string& path) {
    return parse_eval_items(read_tsv(path));
}

// ---------------------------------------------------------------- splitting

template <class T>
struct Split {
    std::vector<T> train;
    std::vector<T> valid;
    std::vector<T> test;
};

// Seeded uniform shuffle, then |valid| = round(valid_frac*N) and
// |test| = round(test_frac*N); the remainder goes to train.
template <class T>
Split<T> split_dataset(const std::vector<T>& items, const SplitSpec& spec) {
    spec.validate();
    if (items.empty()) {
        throw Error("split_dataset: empty dataset");
    }
    const size_t n = items.size();
    const size_t n_valid = static_cast<size_t>(std::llround(spec.valid_frac * static_cast<double>(n)));
    const size_t n_test = static_cast<size_t>(std::llround(spec.test_frac * static_cast<double>(n)));
    if (n_valid + n_test > n) {
        throw ConfigError("split_dataset: valid+test exceed dataset size");
    }
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = i;
    Rng rng(spec.seed);
    rng.shuffle(order);

    Split<T> out;
    out.valid.reserve(n_valid);
    out.test.reserve(n_test);
    out.train.reserve(n - n_valid - n_test);
    for (size_t i = 0; i < n; ++i) {
        const T& item = items[order[i]];
        if (i < n_valid) {
            out.valid.push_back(item);
        } else if (i < n_valid + n_test) {
            out.test.push_back(item);
        } else {
            out.train.push_back(item);
        }
    }
    return out;
}

template <class T>
const std::string& thai_of(const T& item) {
    if constexpr (requires { item.pair.thai; }) {
        return item.pair.thai;
    } else {
        return item.thai;
    }
}

// Drops every pair whose (NFC-normalized) Thai name appears in the set.
// The set is expected to hold NFC forms; order of survivors is preserved.
template <class T>
std::vector<T> remove_leaks(const std::vector<T>& pairs, const std::set<std::string>& test_thai_names) {
    std::vector<T> out;
    out.reserve(pairs.size());
    for (const T& p : pairs) {
        if (test_thai_names.count(nfc_thai(thai_of(p))) == 0) {
            out.push_back(p);
        }
    }
    return out;
}

}  // namespace t2l
