#pragma once

// Training loop: seeded shuffling, gradient accumulation, clipping,
// AdamW with the linear schedule, periodic evaluation by greedy-decode
// CER, checkpointing, best-model selection.

#include <cmath>
#include <filesystem>
#include <limits>
#include <string>
#include <vector>

#include "t2l/curation.hpp"
#include "t2l/data.hpp"
#include "t2l/decode.hpp"
#include "t2l/metrics.hpp"
#include "t2l/model.hpp"
#include "t2l/optim.hpp"

namespace t2l {

struct TrainItem {
    std::vector<int> src;
    std::vector<int> tgt;
    double weight = 1.0;
};

namespace detail {

inline std::vector<int> encode_capped(std::string_view text, size_t max_length) {
    std::vector<int> ids = ByteTokenizer::encode(text);
    if (ids.size() > max_length) {
        ids.resize(max_length);
        ids.back() = ByteTokenizer::eos_id;
    }
    return ids;
}

}  // namespace detail

inline TrainItem make_train_item(const NamePair& pair, double weight, size_t max_length) {
    return {detail::encode_capped(pair.thai, max_length),
            detail::encode_capped(pair.latin, max_length), weight};
}

// train TSV: columns thai, latin and optionally weight (weight-column mode)
inline std::vector<TrainItem> load_train_items(const Tsv& tsv, size_t max_length) {
    const size_t thai_idx = tsv.column("thai");
    const size_t latin_idx = tsv.column("latin");
    const bool weighted = tsv.has_column("weight");
    const size_t weight_idx = weighted ? tsv.column("weight") : 0;
    std::vector<TrainItem> items;
    items.reserve(tsv.rows.size());
    for (size_t r = 0; r < tsv.rows.size(); ++r) {
        NamePair pair;
        try {
            pair = make_name_pair(tsv.rows[r][thai_idx], tsv.rows[r][latin_idx]);
        } catch (const ParseError& e) {
            throw ParseError("row " + std::to_string(Tsv::line_of(r)) + ": " + e.what());
        }
        double weight = 1.0;
        if (weighted) {
            weight = static_cast<double>(
                parse_int(tsv.rows[r][weight_idx], Tsv::line_of(r), "weight"));
            if (weight < 1.0) {
                throw ParseError("row " + std::to_string(Tsv::line_of(r)) + ": weight must be >= 1");
            }
        }
        items.push_back(make_train_item(pair, weight, max_length));
    }
    return items;
}

struct TrainLogEntry {
    size_t step = 0;
    double lr = 0.0;
    double loss = 0.0;
    double grad_norm = 0.0;
    bool has_eval = false;
    double valid_cer = 0.0;
};

struct TrainResult {
    Checkpoint best;
    std::vector<TrainLogEntry> log;
    bool diverged = false;
    size_t total_steps = 0;
    size_t steps_run = 0;
    double best_cer = std::numeric_limits<double>::infinity();
    size_t best_step = 0;
};

// Greedy-decode CER of the model on validation pairs.
inline double validation_cer(const Transformer& model, const std::vector<NamePair>& valid,
                             size_t max_length) {
    std::vector<std::string> preds;
    std::vector<std::vector<std::string>> refs;
    for (const NamePair& pair : valid) {
        const std::vector<int> src = detail::encode_capped(pair.thai, max_length);
        const std::vector<int> out = greedy_decode(model, src, max_length);
        std::string text = ByteTokenizer::decode(out);
        if (!utf8_valid(text)) {
            text.clear();  // malformed byte output counts as a full miss
        }
        preds.push_back(std::move(text));
        refs.push_back({pair.latin});
    }
    return corpus_cer(preds, refs);
}

// Trains in place and returns the checkpoint with the lowest validation
// CER. Single-threaded and bit-reproducible for a fixed seed.
inline TrainResult train_model(Transformer& model, const std::vector<TrainItem>& items,
                               const std::vector<NamePair>& valid, const TrainConfig& config,
                               const std::string& out_dir = "") {
    config.validate();
    if (items.empty()) {
        throw Error("train: empty training set");
    }
    const size_t micro_per_epoch = (items.size() + config.batch_size - 1) / config.batch_size;
    const size_t steps_per_epoch = (micro_per_epoch + config.grad_accum_steps - 1) / config.grad_accum_steps;

    TrainResult result;
    result.total_steps = config.epochs * steps_per_epoch;
    // validates the schedule up front (total must exceed warmup)
    lr_at(0, config, result.total_steps);

    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
    }

    auto params = model.parameters();
    AdamW optimizer(params, config.beta1, config.beta2, config.adam_eps, config.weight_decay);
    const Rng base(config.seed);
    Rng dropout_rng = base.fork(0xD0);

    Checkpoint last_good = make_checkpoint(model, 0, std::numeric_limits<double>::infinity());
    bool have_best = false;
    size_t step = 0;
    bool evaluated_at_last_step = false;

    const auto evaluate_now = [&]() {
        if (valid.empty()) {
            return;
        }
        const double cer = validation_cer(model, valid, config.max_length);
        if (!result.log.empty() && result.log.back().step == step) {
            result.log.back().has_eval = true;
            result.log.back().valid_cer = cer;
        }
        if (!have_best || cer < result.best_cer) {
            result.best_cer = cer;
            result.best_step = step;
            result.best = make_checkpoint(model, step, cer);
            have_best = true;
        }
        evaluated_at_last_step = true;
    };

    std::vector<size_t> order(items.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;

    for (size_t epoch = 0; epoch < config.epochs && !result.diverged; ++epoch) {
        Rng shuffle_rng = base.fork(1000 + epoch);
        shuffle_rng.shuffle(order);
        size_t cursor = 0;
        while (cursor < order.size() && !result.diverged) {
            model.zero_grad();
            size_t micro_count = 0;
            double loss_sum = 0.0;
            for (size_t a = 0; a < config.grad_accum_steps && cursor < order.size(); ++a) {
                const size_t take = std::min(config.batch_size, order.size() - cursor);
                std::vector<std::vector<int>> src, tgt;
                std::vector<double> w;
                for (size_t i = 0; i < take; ++i) {
                    const TrainItem& item = items[order[cursor + i]];
                    src.push_back(item.src);
                    tgt.push_back(item.tgt);
                    w.push_back(item.weight);
                }
                cursor += take;
                const Batch batch = make_batch(src, tgt, w);
                const LossParts parts = model.train_step(batch, &dropout_rng);
                loss_sum += parts.loss;
                ++micro_count;
            }
            const double loss = loss_sum / static_cast<double>(micro_count);
            if (!std::isfinite(loss)) {
                result.diverged = true;
                break;
            }
            if (micro_count > 1) {
                const double inv = 1.0 / static_cast<double>(micro_count);
                for (Tensor* t : params) {
                    for (double& g : t->g) g *= inv;
                }
            }
            const double norm = clip_gradients(params, config.max_grad_norm);
            ++step;
            const double lr = lr_at(step, config, result.total_steps);
            optimizer.step(lr);
            evaluated_at_last_step = false;
            result.log.push_back({step, lr, loss, norm, false, 0.0});

            if (step % config.eval_steps == 0) {
                evaluate_now();
            }
            if (!out_dir.empty() && step % config.save_steps == 0) {
                save_checkpoint(make_checkpoint(model, step, result.best_cer),
                                out_dir + "/step-" + std::to_string(step));
            }
            if (!result.diverged) {
                last_good = make_checkpoint(model, step, result.best_cer);
            }
        }
    }
    result.steps_run = step;

    if (result.diverged) {
        result.best = std::move(last_good);
    } else {
        if (!evaluated_at_last_step) {
            evaluate_now();  // covers eval_steps > total steps: exactly one eval
        }
        if (!have_best) {
            result.best = make_checkpoint(model, step, std::numeric_limits<double>::infinity());
        }
    }
    if (!out_dir.empty()) {
        save_checkpoint(result.best, out_dir + "/best");
        save_checkpoint(make_checkpoint(model, step, result.best_cer), out_dir + "/final");
    }
    return result;
}

}  // namespace t2l
