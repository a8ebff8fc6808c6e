#pragma once

// Training-set assembly: leak removal, probability cutoff, splitting and
// probability-binned upsampling.

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "t2l/common.hpp"
#include "t2l/data.hpp"

namespace t2l {

struct CurationConfig {
    double cutoff = 0.95;
    SplitSpec split{0.990, 0.005, 0.005, 42};
    int weight_min = 1;
    int weight_max = 20;
    double bin_lo = 0.95;
    double bin_hi = 1.0;

    void validate() const {
        split.validate();
        if (!(bin_lo < bin_hi)) throw ConfigError("curation: bin_lo must be < bin_hi");
        if (weight_min > weight_max) throw ConfigError("curation: weight_min > weight_max");
        if (weight_min < 1) throw ConfigError("curation: weight_min must be >= 1");
        if (cutoff != bin_lo) throw ConfigError("curation: cutoff must anchor the first weight bin");
    }
};

// Linear probability bins over [bin_lo, bin_hi] mapped to integer weights;
// the top bin is clamped so bin_hi itself gets weight_max.
inline int upsample_weight(double p, const CurationConfig& config = {}) {
    config.validate();
    if (p < config.cutoff) {
        throw Error("upsample_weight: probability " + format_g6(p) + " below cutoff " +
                    format_g6(config.cutoff));
    }
    const int span = config.weight_max - config.weight_min + 1;
    const double rel = (p - config.bin_lo) / (config.bin_hi - config.bin_lo);
    const int w = config.weight_min + static_cast<int>(std::floor(rel * span));
    return std::min(config.weight_max, w);
}

struct CurationSummary {
    size_t input = 0;
    size_t after_leak_removal = 0;
    size_t after_cutoff = 0;
    size_t train = 0;
    size_t valid = 0;
    size_t test = 0;
    long long total_weight = 0;

    nlohmann::json to_json() const {
        return {{"input", input},
                {"after_leak_removal", after_leak_removal},
                {"after_cutoff", after_cutoff},
                {"train", train},
                {"valid", valid},
                {"test", test},
                {"total_weight", total_weight}};
    }
};

struct CurationResult {
    std::vector<WeightedPair> train;
    std::vector<NamePair> valid;
    std::vector<NamePair> test;
    CurationSummary summary;
};

// Pipeline order: leak removal, cutoff filter, split, weight assignment on
// the train portion only. Deterministic given the split seed.
inline CurationResult curate(const std::vector<ScoredPair>& candidates,
                             const std::set<std::string>& eval_thai_names,
                             const CurationConfig& config = {}) {
    config.validate();
    CurationResult result;
    result.summary.input = candidates.size();

    const std::vector<ScoredPair> unleaked = remove_leaks(candidates, eval_thai_names);
    result.summary.after_leak_removal = unleaked.size();

    std::vector<ScoredPair> kept;
    kept.reserve(unleaked.size());
    for (const auto& sp : unleaked) {
        if (sp.probability >= config.cutoff) {
            kept.push_back(sp);
        }
    }
    result.summary.after_cutoff = kept.size();
    if (kept.empty()) {
        throw Error("curate: no candidates survive the cutoff (input " +
                    std::to_string(result.summary.input) + ", after leak removal " +
                    std::to_string(result.summary.after_leak_removal) + ", after cutoff 0)");
    }

    const Split<ScoredPair> split = split_dataset(kept, config.split);
    result.summary.train = split.train.size();
    result.summary.valid = split.valid.size();
    result.summary.test = split.test.size();

    result.train.reserve(split.train.size());
    for (const auto& sp : split.train) {
        WeightedPair wp;
        wp.pair = sp.pair;
        wp.probability = sp.probability;
        wp.weight = upsample_weight(sp.probability, config);
        result.summary.total_weight += wp.weight;
        result.train.push_back(std::move(wp));
    }
    for (const auto& sp : split.valid) result.valid.push_back(sp.pair);
    for (const auto& sp : split.test) result.test.push_back(sp.pair);
    return result;
}

enum class MaterializeMode { replicate, weight_column };

// replicate writes each pair `weight` times (columns thai, latin);
// weight_column writes one row with the integer weight attached.
inline Tsv materialize_training_rows(const std::vector<WeightedPair>& train,
                                     MaterializeMode mode) {
    Tsv tsv;
    if (mode == MaterializeMode::replicate) {
        tsv.columns = {"thai", "latin"};
        for (const auto& wp : train) {
            for (int i = 0; i < wp.weight; ++i) {
                tsv.rows.push_back({wp.pair.thai, wp.pair.latin});
            }
        }
    } else {
        tsv.columns = {"thai", "latin", "weight"};
        for (const auto& wp : train) {
            tsv.rows.push_back({wp.pair.thai, wp.pair.latin, std::to_string(wp.weight)});
        }
    }
    return tsv;
}

inline void materialize_training_file(const std::vector<WeightedPair>& train,
                                      const std::string& path,
                                      MaterializeMode mode = MaterializeMode::replicate) {
    write_tsv(path, materialize_training_rows(train, mode));
}

}  // namespace t2l
