#pragma once

// AdamW with decoupled weight decay, linear warmup/decay schedule, and
// global-norm gradient clipping.

#include <cmath>
#include <vector>

#include "t2l/common.hpp"
#include "t2l/tensor.hpp"

namespace t2l {

struct TrainConfig {
    size_t epochs = 20;
    double learning_rate = 0.001;
    double weight_decay = 0.01;
    size_t warmup_steps = 5000;
    size_t grad_accum_steps = 4;
    double max_grad_norm = 1.0;
    size_t batch_size = 32;
    size_t eval_steps = 5000;
    size_t save_steps = 5000;
    uint64_t seed = 42;
    // artifact plumbing beyond the fixed recipe
    double beta1 = 0.9;
    double beta2 = 0.999;
    double adam_eps = 1e-8;
    size_t max_length = 64;  // source/target byte cap
    size_t log_every = 50;

    void validate() const {
        if (epochs == 0 || learning_rate <= 0.0 || grad_accum_steps == 0 || batch_size == 0 ||
            eval_steps == 0 || save_steps == 0 || max_grad_norm <= 0.0 || max_length < 2) {
            throw ConfigError("train config: all values must be positive");
        }
        if (weight_decay < 0.0) {
            throw ConfigError("train config: weight_decay must be non-negative");
        }
    }
};

// Linear warmup from 0 to learning_rate over warmup_steps, then linear
// decay to 0 at total_steps.
inline double lr_at(size_t step, const TrainConfig& config, size_t total_steps) {
    if (total_steps <= config.warmup_steps) {
        throw ConfigError("lr_at: total_steps must exceed warmup_steps");
    }
    const double lr = config.learning_rate;
    if (step <= config.warmup_steps) {
        if (config.warmup_steps == 0) {
            return lr;
        }
        return lr * static_cast<double>(step) / static_cast<double>(config.warmup_steps);
    }
    if (step >= total_steps) {
        return 0.0;
    }
    return lr * static_cast<double>(total_steps - step) /
           static_cast<double>(total_steps - config.warmup_steps);
}

// Scales all gradients jointly so their global L2 norm is at most
// max_norm; no-op when already within bound. Returns the pre-clip norm.
inline double clip_gradients(const std::vector<Tensor*>& params, double max_norm) {
    double sq = 0.0;
    for (const Tensor* t : params) {
        for (double g : t->g) {
            sq += g * g;
        }
    }
    const double norm = std::sqrt(sq);
    if (norm > max_norm && norm > 0.0) {
        const double scale = max_norm / norm;
        for (Tensor* t : params) {
            for (double& g : t->g) {
                g *= scale;
            }
        }
    }
    return norm;
}

// Decoupled weight decay: parameters shrink by lr*weight_decay directly,
// then take a bias-corrected Adam step.
class AdamW {
public:
    AdamW(std::vector<Tensor*> params, double beta1, double beta2, double eps, double weight_decay)
        : params_(std::move(params)), beta1_(beta1), beta2_(beta2), eps_(eps), decay_(weight_decay) {
        m_.resize(params_.size());
        v_.resize(params_.size());
        for (size_t i = 0; i < params_.size(); ++i) {
            m_[i].assign(params_[i]->size(), 0.0);
            v_[i].assign(params_[i]->size(), 0.0);
        }
    }

    size_t step_count() const { return t_; }

    void step(double lr) {
        ++t_;
        const double bc1 = 1.0 - std::pow(beta1_, static_cast<double>(t_));
        const double bc2 = 1.0 - std::pow(beta2_, static_cast<double>(t_));
        for (size_t i = 0; i < params_.size(); ++i) {
            Tensor* p = params_[i];
            for (size_t k = 0; k < p->size(); ++k) {
                const double g = p->g[k];
                if (!std::isfinite(g)) {
                    throw Error("adamw: non-finite gradient in tensor " + p->name);
                }
                p->v[k] *= (1.0 - lr * decay_);
                m_[i][k] = beta1_ * m_[i][k] + (1.0 - beta1_) * g;
                v_[i][k] = beta2_ * v_[i][k] + (1.0 - beta2_) * g * g;
                const double mhat = m_[i][k] / bc1;
                const double vhat = v_[i][k] / bc2;
                p->v[k] -= lr * mhat / (std::sqrt(vhat) + eps_);
            }
        }
    }

private:
    std::vector<Tensor*> params_;
    double beta1_, beta2_, eps_, decay_;
    std::vector<std::vector<double>> m_, v_;
    size_t t_ = 0;
};

}  // namespace t2l
