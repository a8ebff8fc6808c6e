#pragma once

// Greedy and beam-search decoding, and the four-metric evaluation harness.

#include <algorithm>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "t2l/data.hpp"
#include "t2l/metrics.hpp"
#include "t2l/model.hpp"

namespace t2l {

struct BeamConfig {
    size_t beam_width = 5;
    size_t k = 3;
    size_t max_length = 64;
    double length_penalty = 1.0;

    void validate() const {
        if (k > beam_width) {
            throw ConfigError("beam: k must not exceed beam_width");
        }
        if (beam_width == 0 || k == 0) {
            throw ConfigError("beam: beam_width and k must be positive");
        }
        if (max_length < 2) {
            throw ConfigError("beam: max_length must be >= 2");
        }
    }
};

namespace detail {

inline std::vector<double> log_softmax(const std::vector<double>& logits) {
    double m = logits[0];
    for (double v : logits) m = std::max(m, v);
    double denom = 0.0;
    for (double v : logits) denom += std::exp(v - m);
    const double lse = m + std::log(denom);
    std::vector<double> out(logits.size());
    for (size_t i = 0; i < logits.size(); ++i) {
        out[i] = logits[i] - lse;
    }
    return out;
}

}  // namespace detail

// Argmax per step until eos or max_length tokens; ties break to the
// lowest id. The returned sequence excludes the trailing eos.
inline std::vector<int> greedy_decode(const Transformer& model, const std::vector<int>& src_ids,
                                      size_t max_length = 64) {
    const Transformer::Encoded enc = model.encode_source(src_ids);
    std::vector<int> out;
    for (size_t step = 0; step < max_length; ++step) {
        const std::vector<double> logits = model.next_token_logits(enc, out);
        size_t best = 0;
        for (size_t v = 1; v < logits.size(); ++v) {
            if (logits[v] > logits[best]) {
                best = v;
            }
        }
        if (static_cast<int>(best) == ByteTokenizer::eos_id) {
            break;
        }
        out.push_back(static_cast<int>(best));
    }
    return out;
}

struct Hypothesis {
    std::vector<int> ids;  // generated ids, eos excluded
    double logprob = 0.0;  // sum of token log-probabilities (incl. eos if finished)
    double score = 0.0;    // logprob / length^length_penalty
    bool finished = false;
};

// Length-normalized beam search. Alive hypotheses hold the beam_width
// best non-eos continuations by summed log-probability; every eos
// continuation moves to the finished pool scored by
// logprob / length^length_penalty (length counts the eos). Returns the
// top k finished hypotheses, padding with the best unfinished ones when
// fewer than k finish. Ties break lexicographically on the id sequence.
inline std::vector<Hypothesis> beam_decode(const Transformer& model,
                                           const std::vector<int>& src_ids,
                                           const BeamConfig& config = {}) {
    config.validate();
    const Transformer::Encoded enc = model.encode_source(src_ids);
    const double alpha = config.length_penalty;

    const auto better = [](const Hypothesis& a, const Hypothesis& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.ids < b.ids;
    };

    std::vector<Hypothesis> alive = {Hypothesis{}};
    std::vector<Hypothesis> finished;
    for (size_t step = 0; step < config.max_length && !alive.empty(); ++step) {
        std::vector<Hypothesis> candidates;
        candidates.reserve(alive.size() * model.config.vocab_size);
        for (const Hypothesis& beam : alive) {
            const std::vector<double> lp = detail::log_softmax(model.next_token_logits(enc, beam.ids));
            for (size_t v = 0; v < lp.size(); ++v) {
                Hypothesis h;
                h.ids = beam.ids;
                h.ids.push_back(static_cast<int>(v));
                h.logprob = beam.logprob + lp[v];
                if (static_cast<int>(v) == ByteTokenizer::eos_id) {
                    h.finished = true;
                    const double len = static_cast<double>(beam.ids.size() + 1);
                    h.score = h.logprob / std::pow(len, alpha);
                    h.ids.pop_back();  // store without the eos
                    finished.push_back(std::move(h));
                } else {
                    h.score = h.logprob;  // raw sum while alive
                    candidates.push_back(std::move(h));
                }
            }
        }
        const size_t keep = std::min(config.beam_width, candidates.size());
        std::partial_sort(candidates.begin(), candidates.begin() + static_cast<long>(keep),
                          candidates.end(), better);
        candidates.resize(keep);
        alive = std::move(candidates);
    }

    // score leftover alive hypotheses for padding
    for (Hypothesis& h : alive) {
        const double len = static_cast<double>(h.ids.size());
        h.score = len > 0.0 ? h.logprob / std::pow(len, alpha) : h.logprob;
    }
    std::sort(finished.begin(), finished.end(), better);
    std::sort(alive.begin(), alive.end(), better);

    std::vector<Hypothesis> out;
    for (const Hypothesis& h : finished) {
        if (out.size() >= config.k) break;
        out.push_back(h);
    }
    for (const Hypothesis& h : alive) {
        if (out.size() >= config.k) break;
        out.push_back(h);
    }
    return out;
}

struct Candidate {
    std::string text;
    double score = 0.0;
    bool finished = false;
};

// encode, beam-decode, byte-decode, drop invalid UTF-8 (warning), then
// deduplicate preserving rank.
inline std::vector<Candidate> transliterate(const Transformer& model, std::string_view thai,
                                            const BeamConfig& config = {},
                                            std::ostream* warn = nullptr) {
    const std::vector<int> src = ByteTokenizer::encode(nfc_thai(thai));
    const std::vector<Hypothesis> hyps = beam_decode(model, src, config);
    std::vector<Candidate> out;
    for (const Hypothesis& h : hyps) {
        std::string text = ByteTokenizer::decode(h.ids);
        if (!utf8_valid(text)) {
            if (warn) {
                *warn << "warning: dropped candidate with invalid UTF-8 for input \""
                      << std::string(thai) << "\"\n";
            }
            continue;
        }
        bool dup = false;
        for (const Candidate& c : out) {
            if (c.text == text) {
                dup = true;
                break;
            }
        }
        if (!dup) {
            out.push_back({std::move(text), h.score, h.finished});
        }
    }
    if (out.size() > config.k) {
        out.resize(config.k);
    }
    return out;
}

// Runs the model over an evaluation set and computes the four Table-4
// metrics from its top-k candidates.
inline EvalReport evaluate_model(const Transformer& model, const std::vector<EvalItem>& items,
                                 const BeamConfig& config = {}, std::ostream* warn = nullptr) {
    if (items.empty()) {
        throw Error("evaluate_model: empty evaluation set");
    }
    std::vector<std::string> top1;
    std::vector<std::vector<std::string>> topk;
    std::vector<std::vector<std::string>> refs;
    for (const EvalItem& item : items) {
        const auto candidates = transliterate(model, item.thai, config, warn);
        std::vector<std::string> texts;
        for (const auto& c : candidates) {
            texts.push_back(c.text);
        }
        top1.push_back(texts.empty() ? std::string() : texts[0]);
        if (texts.size() > 3) texts.resize(3);
        topk.push_back(std::move(texts));
        refs.push_back(item.references);
    }
    EvalReport report;
    report.n_items = items.size();
    report.first_token_accuracy = first_token_accuracy(top1, items);
    report.any_token_accuracy = any_token_accuracy(topk, items);
    report.cer = corpus_cer(top1, refs);
    report.bleu = corpus_char_bleu(top1, refs);
    return report;
}

}  // namespace t2l
