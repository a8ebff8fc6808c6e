#pragma once

// Random Forest binary classifier for training-example selection: CART
// trees on weighted Gini impurity, bootstrap resampling with per-tree
// seeds, impurity-based feature importances, threshold sweeps and k-fold
// cross-validation.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "t2l/common.hpp"
#include "t2l/metrics.hpp"

namespace t2l {

using FeatureMatrix = std::vector<std::vector<double>>;

struct ForestConfig {
    size_t n_estimators = 500;
    size_t min_samples_split = 2;
    size_t min_samples_leaf = 4;
    size_t max_depth = 10;
    bool bootstrap = true;
    uint64_t seed = 42;

    void validate() const {
        if (n_estimators < 1) throw ConfigError("forest: n_estimators must be >= 1");
        if (min_samples_leaf < 1) throw ConfigError("forest: min_samples_leaf must be >= 1");
        if (min_samples_split < 2) throw ConfigError("forest: min_samples_split must be >= 2");
        if (max_depth < 1) throw ConfigError("forest: max_depth must be >= 1");
    }

    // number of features evaluated per split
    static size_t max_features(size_t n_features) {
        return static_cast<size_t>(std::ceil(std::sqrt(static_cast<double>(n_features))));
    }
};

struct TreeNode {
    int feature = -1;  // -1 marks a leaf
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    double value = 0.0;  // weighted positive fraction at the leaf
    long long count = 0; // training samples at the leaf
};

struct DecisionTree {
    std::vector<TreeNode> nodes;

    double predict(const std::vector<double>& x) const {
        int idx = 0;
        while (nodes[static_cast<size_t>(idx)].feature >= 0) {
            const TreeNode& n = nodes[static_cast<size_t>(idx)];
            idx = x[static_cast<size_t>(n.feature)] <= n.threshold ? n.left : n.right;
        }
        return nodes[static_cast<size_t>(idx)].value;
    }
};

namespace detail {

struct TreeBuilder {
    const FeatureMatrix& X;
    const std::vector<int>& y;
    const std::vector<double>& w;
    const ForestConfig& cfg;
    size_t n_features;
    Rng& rng;
    DecisionTree tree;
    std::vector<double>& importance;  // accumulated, indexed by feature
    double root_weight = 0.0;

    static double gini(double w_pos, double w_total) {
        if (w_total <= 0.0) return 0.0;
        const double p = w_pos / w_total;
        return 1.0 - p * p - (1.0 - p) * (1.0 - p);
    }

    std::vector<size_t> sample_features() {
        const size_t m = std::min(ForestConfig::max_features(n_features), n_features);
        std::vector<size_t> all(n_features);
        std::iota(all.begin(), all.end(), 0);
        for (size_t i = 0; i < m; ++i) {
            const size_t j = i + static_cast<size_t>(rng.below(n_features - i));
            std::swap(all[i], all[j]);
        }
        all.resize(m);
        std::sort(all.begin(), all.end());
        return all;
    }

    // returns node index
    int build(std::vector<size_t>& idx, size_t depth) {
        double w_total = 0.0, w_pos = 0.0;
        for (size_t i : idx) {
            w_total += w[i];
            w_pos += w[i] * (y[i] != 0 ? 1.0 : 0.0);
        }
        if (depth == 0) root_weight = w_total;

        TreeNode node;
        node.count = static_cast<long long>(idx.size());
        node.value = w_total > 0.0 ? w_pos / w_total : 0.0;

        const double node_gini = gini(w_pos, w_total);
        const bool pure = w_pos <= 0.0 || w_pos >= w_total;
        if (depth >= cfg.max_depth || idx.size() < cfg.min_samples_split || pure ||
            idx.size() < 2 * cfg.min_samples_leaf) {
            return push_leaf(node);
        }

        // split search over a random feature subset; ties resolve to the
        // lowest feature index then lowest threshold (first encountered)
        int best_feature = -1;
        double best_threshold = 0.0;
        double best_child_impurity = std::numeric_limits<double>::infinity();
        std::vector<size_t> order(idx);
        for (const size_t f : sample_features()) {
            std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
                return X[a][f] != X[b][f] ? X[a][f] < X[b][f] : a < b;
            });
            double wl = 0.0, wl_pos = 0.0;
            for (size_t k = 0; k + 1 < order.size(); ++k) {
                const size_t i = order[k];
                wl += w[i];
                wl_pos += w[i] * (y[i] != 0 ? 1.0 : 0.0);
                if (X[order[k]][f] == X[order[k + 1]][f]) {
                    continue;  // not a boundary between distinct values
                }
                const size_t left_count = k + 1;
                const size_t right_count = order.size() - left_count;
                if (left_count < cfg.min_samples_leaf || right_count < cfg.min_samples_leaf) {
                    continue;
                }
                const double wr = w_total - wl;
                const double wr_pos = w_pos - wl_pos;
                const double child =
                    (wl * gini(wl_pos, wl) + wr * gini(wr_pos, wr)) / w_total;
                if (child < best_child_impurity) {
                    best_child_impurity = child;
                    best_feature = static_cast<int>(f);
                    best_threshold = 0.5 * (X[order[k]][f] + X[order[k + 1]][f]);
                }
            }
        }
        if (best_feature < 0) {
            return push_leaf(node);
        }

        importance[static_cast<size_t>(best_feature)] +=
            (w_total / root_weight) * (node_gini - best_child_impurity);

        std::vector<size_t> left_idx, right_idx;
        left_idx.reserve(idx.size());
        right_idx.reserve(idx.size());
        for (size_t i : idx) {
            (X[i][static_cast<size_t>(best_feature)] <= best_threshold ? left_idx : right_idx)
                .push_back(i);
        }
        idx.clear();
        idx.shrink_to_fit();

        node.feature = best_feature;
        node.threshold = best_threshold;
        const int self = static_cast<int>(tree.nodes.size());
        tree.nodes.push_back(node);
        const int left = build(left_idx, depth + 1);
        const int right = build(right_idx, depth + 1);
        tree.nodes[static_cast<size_t>(self)].left = left;
        tree.nodes[static_cast<size_t>(self)].right = right;
        return self;
    }

    int push_leaf(TreeNode node) {
        node.feature = -1;
        tree.nodes.push_back(node);
        return static_cast<int>(tree.nodes.size() - 1);
    }
};

}  // namespace detail

// Fits one CART tree on the given rows (no bootstrap resampling here).
inline DecisionTree fit_tree(const FeatureMatrix& X, const std::vector<int>& y,
                             const std::vector<double>& weights, const ForestConfig& config,
                             Rng& rng, std::vector<double>* importance_out = nullptr) {
    config.validate();
    if (X.empty() || X.size() != y.size() || X.size() != weights.size()) {
        throw Error("fit_tree: empty input or size mismatch");
    }
    const size_t n_features = X[0].size();
    std::vector<double> importance(n_features, 0.0);
    detail::TreeBuilder builder{X, y, weights, config, n_features, rng, {}, importance};
    std::vector<size_t> idx(X.size());
    std::iota(idx.begin(), idx.end(), 0);
    builder.build(idx, 0);
    if (importance_out) {
        *importance_out = importance;
    }
    return std::move(builder.tree);
}

class Forest {
public:
    Forest() = default;
    Forest(std::vector<DecisionTree> trees, ForestConfig config, size_t n_features,
           std::vector<double> importances)
        : trees_(std::move(trees)),
          config_(config),
          n_features_(n_features),
          importances_(std::move(importances)) {}

    double predict_proba(const std::vector<double>& x) const {
        if (x.size() != n_features_) {
            throw Error("predict_proba: expected " + std::to_string(n_features_) +
                        " features, got " + std::to_string(x.size()));
        }
        double sum = 0.0;
        for (const auto& tree : trees_) {
            sum += tree.predict(x);
        }
        return sum / static_cast<double>(trees_.size());
    }

    std::vector<double> predict_proba_all(const FeatureMatrix& X) const {
        std::vector<double> out;
        out.reserve(X.size());
        for (const auto& x : X) {
            out.push_back(predict_proba(x));
        }
        return out;
    }

    const std::vector<DecisionTree>& trees() const { return trees_; }
    const ForestConfig& config() const { return config_; }
    size_t n_features() const { return n_features_; }
    const std::vector<double>& feature_importances() const { return importances_; }

    nlohmann::json to_json() const {
        nlohmann::json trees = nlohmann::json::array();
        for (const auto& tree : trees_) {
            nlohmann::json t;
            for (const auto& n : tree.nodes) {
                t["feature"].push_back(n.feature);
                t["threshold"].push_back(n.threshold);
                t["left"].push_back(n.left);
                t["right"].push_back(n.right);
                t["value"].push_back(n.value);
                t["count"].push_back(n.count);
            }
            trees.push_back(std::move(t));
        }
        return {{"format_version", 1},
                {"config",
                 {{"n_estimators", config_.n_estimators},
                  {"min_samples_split", config_.min_samples_split},
                  {"min_samples_leaf", config_.min_samples_leaf},
                  {"max_depth", config_.max_depth},
                  {"bootstrap", config_.bootstrap},
                  {"seed", config_.seed}}},
                {"n_features", n_features_},
                {"feature_importances", importances_},
                {"trees", std::move(trees)}};
    }

    static Forest from_json(const nlohmann::json& j) {
        if (!j.contains("format_version") || j["format_version"] != 1) {
            throw ParseError("forest: unsupported format version");
        }
        ForestConfig cfg;
        const auto& jc = j.at("config");
        cfg.n_estimators = jc.at("n_estimators").get<size_t>();
        cfg.min_samples_split = jc.at("min_samples_split").get<size_t>();
        cfg.min_samples_leaf = jc.at("min_samples_leaf").get<size_t>();
        cfg.max_depth = jc.at("max_depth").get<size_t>();
        cfg.bootstrap = jc.at("bootstrap").get<bool>();
        cfg.seed = jc.at("seed").get<uint64_t>();
        std::vector<DecisionTree> trees;
        for (const auto& jt : j.at("trees")) {
            DecisionTree tree;
            const auto& feature = jt.at("feature");
            const size_t n = feature.size();
            for (size_t i = 0; i < n; ++i) {
                TreeNode node;
                node.feature = feature[i].get<int>();
                node.threshold = jt.at("threshold")[i].get<double>();
                node.left = jt.at("left")[i].get<int>();
                node.right = jt.at("right")[i].get<int>();
                node.value = jt.at("value")[i].get<double>();
                node.count = jt.at("count")[i].get<long long>();
                tree.nodes.push_back(node);
            }
            if (tree.nodes.empty()) {
                throw ParseError("forest: empty tree");
            }
            trees.push_back(std::move(tree));
        }
        if (trees.empty()) {
            throw ParseError("forest: no trees");
        }
        return Forest(std::move(trees), cfg, j.at("n_features").get<size_t>(),
                      j.at("feature_importances").get<std::vector<double>>());
    }

    void save(const std::string& path) const { write_file(path, to_json().dump(2) + "\n"); }

    static Forest load(const std::string& path) {
        return from_json(nlohmann::json::parse(read_file(path)));
    }

private:
    std::vector<DecisionTree> trees_;
    ForestConfig config_;
    size_t n_features_ = 0;
    std::vector<double> importances_;
};

// Fits the full forest. Each tree trains on a bootstrap resample drawn
// from its own seed stream, so results are identical no matter how many
// threads build trees.
inline Forest fit_forest(const FeatureMatrix& X, const std::vector<int>& y,
                         const std::vector<double>& weights, const ForestConfig& config,
                         size_t threads = 1) {
    config.validate();
    if (X.empty() || X.size() != y.size() || X.size() != weights.size()) {
        throw Error("fit_forest: empty input or size mismatch");
    }
    const size_t n = X.size();
    const size_t n_features = X[0].size();
    for (const auto& row : X) {
        if (row.size() != n_features) {
            throw Error("fit_forest: ragged feature matrix");
        }
    }

    const Rng base(config.seed);
    std::vector<DecisionTree> trees(config.n_estimators);
    std::vector<std::vector<double>> tree_importances(config.n_estimators);

    const auto fit_one = [&](size_t t) {
        Rng rng = base.fork(t);
        FeatureMatrix Xb;
        std::vector<int> yb;
        std::vector<double> wb;
        if (config.bootstrap) {
            Xb.reserve(n);
            yb.reserve(n);
            wb.reserve(n);
            for (size_t i = 0; i < n; ++i) {
                const size_t j = static_cast<size_t>(rng.below(n));
                Xb.push_back(X[j]);
                yb.push_back(y[j]);
                wb.push_back(weights[j]);
            }
            trees[t] = fit_tree(Xb, yb, wb, config, rng, &tree_importances[t]);
        } else {
            trees[t] = fit_tree(X, y, weights, config, rng, &tree_importances[t]);
        }
    };

    if (threads <= 1) {
        for (size_t t = 0; t < config.n_estimators; ++t) {
            fit_one(t);
        }
    } else {
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        for (size_t w = 0; w < threads; ++w) {
            pool.emplace_back([&] {
                while (true) {
                    const size_t t = next.fetch_add(1);
                    if (t >= config.n_estimators) break;
                    fit_one(t);
                }
            });
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    // aggregate importances in tree order, then normalize to sum 1
    std::vector<double> importances(n_features, 0.0);
    for (const auto& imp : tree_importances) {
        for (size_t f = 0; f < n_features; ++f) {
            importances[f] += imp[f];
        }
    }
    const double total = std::accumulate(importances.begin(), importances.end(), 0.0);
    if (total > 0.0) {
        for (double& v : importances) {
            v /= total;
        }
    }
    return Forest(std::move(trees), config, n_features, std::move(importances));
}

// One ThresholdMetrics row per requested threshold; AUC is identical in
// every row (it is threshold-free).
inline std::vector<ThresholdMetrics> threshold_sweep(const Forest& forest, const FeatureMatrix& X,
                                                     const std::vector<int>& y,
                                                     const std::vector<double>& thresholds) {
    if (X.size() != y.size() || X.empty()) {
        throw Error("threshold_sweep: empty input or size mismatch");
    }
    const std::vector<double> scores = forest.predict_proba_all(X);
    std::vector<ThresholdMetrics> rows;
    rows.reserve(thresholds.size());
    for (const double thr : thresholds) {
        rows.push_back(binary_metrics(scores, y, thr));
    }
    return rows;
}

struct KFoldSummary {
    double threshold = 0.0;
    ThresholdMetrics mean;
    ThresholdMetrics stddev;
};

struct KFoldReport {
    size_t k = 0;
    std::vector<std::vector<ThresholdMetrics>> folds;  // [fold][threshold]
    std::vector<KFoldSummary> summary;                 // per threshold
    std::vector<size_t> fold_sizes;
};

// Deterministic stratified k-fold cross-validation. Tiny one-class eval
// folds (possible when k exceeds a class count, e.g. leave-one-out) report
// NaN AUC and are excluded from the AUC mean/stddev.
inline KFoldReport kfold_cv(const FeatureMatrix& X, const std::vector<int>& y, size_t k,
                            const ForestConfig& config,
                            const std::vector<double>& thresholds = {0.5}) {
    if (k < 2) {
        throw ConfigError("kfold_cv: k must be >= 2");
    }
    if (X.size() != y.size() || X.empty()) {
        throw Error("kfold_cv: empty input or size mismatch");
    }
    if (k > X.size()) {
        throw Error("kfold_cv: k exceeds dataset size");
    }

    // stratified assignment: shuffle within each class, deal round-robin
    std::vector<size_t> pos, neg;
    for (size_t i = 0; i < X.size(); ++i) {
        (y[i] != 0 ? pos : neg).push_back(i);
    }
    Rng rng = Rng(config.seed).fork(0x6B666F6C64ull);  // independent fold stream
    rng.shuffle(pos);
    rng.shuffle(neg);
    std::vector<size_t> fold_of(X.size(), 0);
    size_t counter = 0;
    for (size_t i : pos) fold_of[i] = counter++ % k;
    for (size_t i : neg) fold_of[i] = counter++ % k;

    KFoldReport report;
    report.k = k;
    for (size_t fold = 0; fold < k; ++fold) {
        FeatureMatrix X_train, X_eval;
        std::vector<int> y_train, y_eval;
        std::vector<double> w_train;
        for (size_t i = 0; i < X.size(); ++i) {
            if (fold_of[i] == fold) {
                X_eval.push_back(X[i]);
                y_eval.push_back(y[i]);
            } else {
                X_train.push_back(X[i]);
                y_train.push_back(y[i]);
                w_train.push_back(1.0);
            }
        }
        report.fold_sizes.push_back(X_eval.size());
        const Forest forest = fit_forest(X_train, y_train, w_train, config);
        const std::vector<double> scores = forest.predict_proba_all(X_eval);
        std::vector<ThresholdMetrics> rows;
        for (const double thr : thresholds) {
            rows.push_back(detail::threshold_metrics_lenient(scores, y_eval, thr));
        }
        report.folds.push_back(std::move(rows));
    }

    for (size_t t = 0; t < thresholds.size(); ++t) {
        KFoldSummary s;
        s.threshold = thresholds[t];
        const auto stat = [&](auto getter, double& mean_out, double& sd_out, bool skip_nan) {
            std::vector<double> vals;
            for (const auto& fold : report.folds) {
                const double v = getter(fold[t]);
                if (skip_nan && std::isnan(v)) continue;
                vals.push_back(v);
            }
            if (vals.empty()) {
                mean_out = std::nan("");
                sd_out = std::nan("");
                return;
            }
            double m = 0.0;
            for (double v : vals) m += v;
            m /= static_cast<double>(vals.size());
            double var = 0.0;
            for (double v : vals) var += (v - m) * (v - m);
            sd_out = vals.size() > 1 ? std::sqrt(var / static_cast<double>(vals.size() - 1)) : 0.0;
            mean_out = m;
        };
        s.mean.threshold = s.stddev.threshold = thresholds[t];
        stat([](const ThresholdMetrics& m) { return m.precision; }, s.mean.precision,
             s.stddev.precision, false);
        stat([](const ThresholdMetrics& m) { return m.recall; }, s.mean.recall, s.stddev.recall,
             false);
        stat([](const ThresholdMetrics& m) { return m.f1; }, s.mean.f1, s.stddev.f1, false);
        stat([](const ThresholdMetrics& m) { return m.accuracy; }, s.mean.accuracy,
             s.stddev.accuracy, false);
        stat([](const ThresholdMetrics& m) { return m.auc; }, s.mean.auc, s.stddev.auc, true);
        report.summary.push_back(s);
    }
    return report;
}

}  // namespace t2l
