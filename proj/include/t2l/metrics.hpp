#pragma once

// String-distance and evaluation metrics: Levenshtein, CER, character-level
// BLEU, first/any-token accuracy and binary classifier metrics.

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "t2l/common.hpp"
#include "t2l/data.hpp"

namespace t2l {

// ---------------------------------------------------------------- distances

// Minimum number of single-element insertions, deletions and substitutions
// transforming a into b.
template <class T>
size_t edit_distance(const std::vector<T>& a, const std::vector<T>& b) {
    const size_t n = a.size();
    const size_t m = b.size();
    std::vector<size_t> prev(m + 1), cur(m + 1);
    for (size_t j = 0; j <= m; ++j) prev[j] = j;
    for (size_t i = 1; i <= n; ++i) {
        cur[0] = i;
        for (size_t j = 1; j <= m; ++j) {
            const size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

// Levenshtein distance over Unicode code points (not bytes).
inline size_t levenshtein(std::string_view a, std::string_view b) {
    return edit_distance(utf8_decode(a), utf8_decode(b));
}

// Character error rate: edit distance / reference length in code points.
// Comparison is case-insensitive.
inline double cer(std::string_view prediction, std::string_view reference) {
    const auto ref = utf8_decode(ascii_lower(reference));
    if (ref.empty()) {
        throw Error("cer: empty reference");
    }
    const auto pred = utf8_decode(ascii_lower(prediction));
    return static_cast<double>(edit_distance(pred, ref)) / static_cast<double>(ref.size());
}

// Corpus CER with multi-reference items: per item the reference minimizing
// edit distance is chosen (first in list order on ties); the total distance
// is divided by the total length of the chosen references.
inline double corpus_cer(const std::vector<std::string>& predictions,
                         const std::vector<std::vector<std::string>>& references) {
    if (predictions.size() != references.size()) {
        throw Error("corpus_cer: length mismatch");
    }
    if (predictions.empty()) {
        throw Error("corpus_cer: empty input");
    }
    size_t total_dist = 0;
    size_t total_len = 0;
    for (size_t i = 0; i < predictions.size(); ++i) {
        if (references[i].empty()) {
            throw Error("corpus_cer: item " + std::to_string(i) + " has no references");
        }
        const auto pred = utf8_decode(ascii_lower(predictions[i]));
        size_t best_dist = 0;
        size_t best_len = 0;
        bool first = true;
        for (const auto& ref_str : references[i]) {
            const auto ref = utf8_decode(ascii_lower(ref_str));
            if (ref.empty()) {
                throw Error("corpus_cer: empty reference in item " + std::to_string(i));
            }
            const size_t d = edit_distance(pred, ref);
            if (first || d < best_dist) {
                best_dist = d;
                best_len = ref.size();
                first = false;
            }
        }
        total_dist += best_dist;
        total_len += best_len;
    }
    return static_cast<double>(total_dist) / static_cast<double>(total_len);
}

// ---------------------------------------------------------------- BLEU

namespace detail {

constexpr int kBleuMaxOrder = 4;

struct BleuCounts {
    std::array<size_t, kBleuMaxOrder> matched{};
    std::array<size_t, kBleuMaxOrder> total{};
    size_t pred_len = 0;
    size_t ref_len = 0;  // closest-length reference (shorter wins ties)

    void add(std::string_view prediction, const std::vector<std::string>& references) {
        const auto pred = utf8_decode(ascii_lower(prediction));
        std::vector<std::vector<char32_t>> refs;
        refs.reserve(references.size());
        for (const auto& r : references) {
            refs.push_back(utf8_decode(ascii_lower(r)));
        }
        pred_len += pred.size();
        // closest reference length for the brevity penalty
        size_t closest = refs[0].size();
        for (const auto& r : refs) {
            const auto diff = [&](size_t len) {
                return len > pred.size() ? len - pred.size() : pred.size() - len;
            };
            if (diff(r.size()) < diff(closest) || (diff(r.size()) == diff(closest) && r.size() < closest)) {
                closest = r.size();
            }
        }
        ref_len += closest;

        for (int n = 1; n <= kBleuMaxOrder; ++n) {
            if (pred.size() < static_cast<size_t>(n)) {
                break;
            }
            std::map<std::u32string, size_t> pred_ngrams;
            for (size_t i = 0; i + n <= pred.size(); ++i) {
                pred_ngrams[std::u32string(pred.begin() + i, pred.begin() + i + n)]++;
            }
            std::map<std::u32string, size_t> ref_max;
            for (const auto& r : refs) {
                std::map<std::u32string, size_t> counts;
                for (size_t i = 0; i + n <= r.size(); ++i) {
                    counts[std::u32string(r.begin() + i, r.begin() + i + n)]++;
                }
                for (const auto& [gram, c] : counts) {
                    ref_max[gram] = std::max(ref_max[gram], c);
                }
            }
            for (const auto& [gram, c] : pred_ngrams) {
                total[n - 1] += c;
                auto it = ref_max.find(gram);
                if (it != ref_max.end()) {
                    matched[n - 1] += std::min(c, it->second);
                }
            }
        }
    }

    // Geometric mean of clipped n-gram precisions over the orders that have
    // any candidate n-grams; zero matches are smoothed to 1/(2*total).
    double score() const {
        if (pred_len == 0) {
            return 0.0;
        }
        double log_sum = 0.0;
        int orders = 0;
        for (int n = 0; n < kBleuMaxOrder; ++n) {
            if (total[n] == 0) {
                continue;
            }
            const double p = matched[n] > 0
                                 ? static_cast<double>(matched[n]) / static_cast<double>(total[n])
                                 : 0.5 / static_cast<double>(total[n]);
            log_sum += std::log(p);
            ++orders;
        }
        if (orders == 0) {
            return 0.0;
        }
        double bp = 1.0;
        if (pred_len < ref_len) {
            bp = std::exp(1.0 - static_cast<double>(ref_len) / static_cast<double>(pred_len));
        }
        return 100.0 * bp * std::exp(log_sum / orders);
    }
};

}  // namespace detail

// Character-level BLEU (n = 1..4) on the 0-100 scale. An empty prediction
// scores 0 by definition.
inline double char_bleu(std::string_view prediction, const std::vector<std::string>& references) {
    if (references.empty()) {
        throw Error("char_bleu: no references");
    }
    for (const auto& r : references) {
        if (r.empty()) {
            throw Error("char_bleu: empty reference");
        }
    }
    if (prediction.empty()) {
        return 0.0;
    }
    detail::BleuCounts counts;
    counts.add(prediction, references);
    return counts.score();
}

// Corpus-level character BLEU: clipped counts are summed across items
// before the geometric mean (standard corpus BLEU aggregation).
inline double corpus_char_bleu(const std::vector<std::string>& predictions,
                               const std::vector<std::vector<std::string>>& references) {
    if (predictions.size() != references.size()) {
        throw Error("corpus_char_bleu: length mismatch");
    }
    if (predictions.empty()) {
        throw Error("corpus_char_bleu: empty input");
    }
    detail::BleuCounts counts;
    for (size_t i = 0; i < predictions.size(); ++i) {
        if (references[i].empty()) {
            throw Error("corpus_char_bleu: item " + std::to_string(i) + " has no references");
        }
        counts.add(predictions[i], references[i]);
    }
    return counts.score();
}

// ---------------------------------------------------------------- accuracies

// Fraction of items whose top prediction equals (case-insensitively) any
// reference.
inline double first_token_accuracy(const std::vector<std::string>& top1,
                                   const std::vector<EvalItem>& items) {
    if (top1.size() != items.size()) {
        throw Error("first_token_accuracy: length mismatch");
    }
    if (items.empty()) {
        throw Error("first_token_accuracy: empty input");
    }
    size_t hits = 0;
    for (size_t i = 0; i < items.size(); ++i) {
        const std::string pred = ascii_lower(top1[i]);
        for (const auto& ref : items[i].references) {
            if (pred == ascii_lower(ref)) {
                ++hits;
                break;
            }
        }
    }
    return static_cast<double>(hits) / static_cast<double>(items.size());
}

// Fraction of items where any of the (up to three) predictions matches any
// reference.
inline double any_token_accuracy(const std::vector<std::vector<std::string>>& top3,
                                 const std::vector<EvalItem>& items) {
    if (top3.size() != items.size()) {
        throw Error("any_token_accuracy: length mismatch");
    }
    if (items.empty()) {
        throw Error("any_token_accuracy: empty input");
    }
    size_t hits = 0;
    for (size_t i = 0; i < items.size(); ++i) {
        if (top3[i].size() > 3) {
            throw Error("any_token_accuracy: more than 3 predictions at item " + std::to_string(i));
        }
        bool hit = false;
        for (const auto& p : top3[i]) {
            const std::string pred = ascii_lower(p);
            for (const auto& ref : items[i].references) {
                if (pred == ascii_lower(ref)) {
                    hit = true;
                    break;
                }
            }
            if (hit) break;
        }
        hits += hit ? 1 : 0;
    }
    return static_cast<double>(hits) / static_cast<double>(items.size());
}

// ---------------------------------------------------------------- reports

// The four sequence metrics of the evaluation harness.
struct EvalReport {
    double first_token_accuracy = 0.0;
    double any_token_accuracy = 0.0;
    double cer = 0.0;
    double bleu = 0.0;
    size_t n_items = 0;

    nlohmann::json to_json() const {
        return {{"first_token_accuracy", round6(first_token_accuracy)},
                {"any_token_accuracy", round6(any_token_accuracy)},
                {"cer", round6(cer)},
                {"bleu", round6(bleu)},
                {"n_items", n_items}};
    }

    std::string to_text() const {
        std::string out;
        out += "first_token_accuracy\t" + format_g6(first_token_accuracy) + "\n";
        out += "any_token_accuracy\t" + format_g6(any_token_accuracy) + "\n";
        out += "cer\t" + format_g6(cer) + "\n";
        out += "bleu\t" + format_g6(bleu) + "\n";
        out += "n_items\t" + std::to_string(n_items) + "\n";
        return out;
    }
};

// Classifier metrics at one decision threshold.
struct ThresholdMetrics {
    double threshold = 0.5;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    double accuracy = 0.0;
    double auc = 0.0;

    nlohmann::json to_json() const {
        return {{"threshold", round6(threshold)}, {"precision", round6(precision)},
                {"recall", round6(recall)},       {"f1", round6(f1)},
                {"accuracy", round6(accuracy)},   {"auc", round6(auc)}};
    }
};

// Rank-based (Mann-Whitney) AUC with average ranks for ties. Requires both
// classes present.
inline double auc_score(const std::vector<double>& scores, const std::vector<int>& labels) {
    if (scores.size() != labels.size()) {
        throw Error("auc_score: length mismatch");
    }
    const size_t n = scores.size();
    size_t n_pos = 0;
    for (int y : labels) n_pos += (y != 0);
    const size_t n_neg = n - n_pos;
    if (n_pos == 0 || n_neg == 0) {
        throw Error("auc undefined: only one class present");
    }
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return scores[a] < scores[b]; });
    // average ranks over tie groups, accumulate rank sum of positives
    double rank_sum_pos = 0.0;
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        while (j < n && scores[order[j]] == scores[order[i]]) ++j;
        const double avg_rank = 0.5 * static_cast<double>(i + 1 + j);  // ranks are 1-based
        for (size_t k = i; k < j; ++k) {
            if (labels[order[k]] != 0) {
                rank_sum_pos += avg_rank;
            }
        }
        i = j;
    }
    const double u = rank_sum_pos - static_cast<double>(n_pos) * (static_cast<double>(n_pos) + 1.0) / 2.0;
    return u / (static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

namespace detail {

// Threshold metrics without the both-classes requirement; used by k-fold
// cross-validation where tiny eval folds can be one-class. Degenerate
// ratios (0/0) resolve to 1.0; AUC is NaN when undefined.
inline ThresholdMetrics threshold_metrics_lenient(const std::vector<double>& scores,
                                                  const std::vector<int>& labels,
                                                  double threshold) {
    if (scores.size() != labels.size()) {
        throw Error("binary_metrics: length mismatch");
    }
    if (scores.empty()) {
        throw Error("binary_metrics: empty input");
    }
    size_t tp = 0, fp = 0, tn = 0, fn = 0;
    for (size_t i = 0; i < scores.size(); ++i) {
        const bool pred = scores[i] >= threshold;
        const bool pos = labels[i] != 0;
        if (pred && pos) ++tp;
        else if (pred && !pos) ++fp;
        else if (!pred && pos) ++fn;
        else ++tn;
    }
    ThresholdMetrics m;
    m.threshold = threshold;
    m.precision = (tp + fp == 0) ? 1.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
    m.recall = (tp + fn == 0) ? 1.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
    m.f1 = (m.precision + m.recall > 0.0) ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
                                          : 0.0;
    m.accuracy = static_cast<double>(tp + tn) / static_cast<double>(scores.size());
    size_t n_pos = tp + fn;
    m.auc = (n_pos == 0 || n_pos == scores.size()) ? std::nan("") : auc_score(scores, labels);
    return m;
}

}  // namespace detail

// Confusion-table metrics plus AUC; positive prediction iff score >=
// threshold. Precision is 1.0 when nothing is predicted positive
// (documented convention). Errors when only one class is present.
inline ThresholdMetrics binary_metrics(const std::vector<double>& scores,
                                       const std::vector<int>& labels, double threshold) {
    ThresholdMetrics m = detail::threshold_metrics_lenient(scores, labels, threshold);
    if (std::isnan(m.auc)) {
        throw Error("auc undefined: only one class present");
    }
    return m;
}

}  // namespace t2l
