#pragma once

// Byte-level encoder-decoder transformer: T5-style pre-norm blocks with
// scale-only normalization, bucketed relative-position bias computed once
// per stack and shared across its layers, gated feed-forward, no absolute
// position embeddings. Forward and backward passes are hand-derived and
// checked against finite differences in the test suite.

#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "t2l/common.hpp"
#include "t2l/tensor.hpp"

namespace t2l {

// ---------------------------------------------------------------- tokenizer

// Raw UTF-8 bytes shifted past three specials; byte b gets id b+3.
struct ByteTokenizer {
    static constexpr int pad_id = 0;
    static constexpr int eos_id = 1;
    static constexpr int unk_id = 2;
    static constexpr int byte_offset = 3;
    static constexpr int vocab_size = 259;

    static std::vector<int> encode(std::string_view text) {
        std::vector<int> ids;
        ids.reserve(text.size() + 1);
        for (unsigned char b : text) {
            ids.push_back(static_cast<int>(b) + byte_offset);
        }
        ids.push_back(eos_id);
        return ids;
    }

    // bytes until the first eos; pad/unk are skipped
    static std::string decode(const std::vector<int>& ids) {
        std::string out;
        for (int id : ids) {
            if (id == eos_id) break;
            if (id >= byte_offset && id < vocab_size) {
                out.push_back(static_cast<char>(id - byte_offset));
            }
        }
        return out;
    }
};

// ---------------------------------------------------------------- config

struct TransformerConfig {
    size_t d_model = 256;
    size_t d_ff = 512;
    size_t num_layers = 4;
    size_t num_heads = 4;
    size_t vocab_size = 259;
    double dropout = 0.1;
    size_t rel_buckets = 32;
    size_t rel_max_distance = 128;

    static TransformerConfig small_preset() {
        TransformerConfig c;
        c.d_model = 512;
        c.d_ff = 1024;
        c.num_layers = 6;
        c.num_heads = 6;
        return c;
    }

    static TransformerConfig very_small_preset() { return TransformerConfig{}; }

    void validate() const {
        if (d_model == 0 || d_ff == 0 || num_layers == 0 || num_heads == 0 || vocab_size == 0) {
            throw ConfigError("transformer: all dimensions must be positive");
        }
        if (d_model % num_heads != 0) {
            throw ConfigError("transformer: d_model must be divisible by num_heads");
        }
        if (rel_buckets < 4 || rel_buckets % 2 != 0) {
            throw ConfigError("transformer: rel_buckets must be even and >= 4");
        }
        if (dropout < 0.0 || dropout >= 1.0) {
            throw ConfigError("transformer: dropout must be in [0,1)");
        }
    }

    nlohmann::json to_json() const {
        return {{"d_model", d_model},       {"d_ff", d_ff},
                {"num_layers", num_layers}, {"num_heads", num_heads},
                {"vocab_size", vocab_size}, {"dropout", dropout},
                {"rel_buckets", rel_buckets}, {"rel_max_distance", rel_max_distance}};
    }

    static TransformerConfig from_json(const nlohmann::json& j) {
        TransformerConfig c;
        c.d_model = j.at("d_model").get<size_t>();
        c.d_ff = j.at("d_ff").get<size_t>();
        c.num_layers = j.at("num_layers").get<size_t>();
        c.num_heads = j.at("num_heads").get<size_t>();
        c.vocab_size = j.at("vocab_size").get<size_t>();
        c.dropout = j.at("dropout").get<double>();
        c.rel_buckets = j.at("rel_buckets").get<size_t>();
        c.rel_max_distance = j.at("rel_max_distance").get<size_t>();
        c.validate();
        return c;
    }
};

// ---------------------------------------------------------------- batches

// Padded id matrices for one training batch. tgt_in is the right-shifted
// decoder input (leading pad as the start symbol).
struct Batch {
    size_t size = 0;     // B
    size_t src_len = 0;  // S
    size_t tgt_len = 0;  // T
    std::vector<int> src;      // [B,S]
    std::vector<int> tgt_in;   // [B,T]
    std::vector<int> tgt_out;  // [B,T]
    std::vector<double> weight;  // [B]
};

inline Batch make_batch(const std::vector<std::vector<int>>& src_seqs,
                        const std::vector<std::vector<int>>& tgt_seqs,
                        const std::vector<double>& weights) {
    if (src_seqs.empty() || src_seqs.size() != tgt_seqs.size()) {
        throw Error("make_batch: empty batch or size mismatch");
    }
    Batch b;
    b.size = src_seqs.size();
    for (const auto& s : src_seqs) b.src_len = std::max(b.src_len, s.size());
    for (const auto& t : tgt_seqs) b.tgt_len = std::max(b.tgt_len, t.size());
    b.src.assign(b.size * b.src_len, ByteTokenizer::pad_id);
    b.tgt_in.assign(b.size * b.tgt_len, ByteTokenizer::pad_id);
    b.tgt_out.assign(b.size * b.tgt_len, ByteTokenizer::pad_id);
    b.weight.assign(b.size, 1.0);
    for (size_t i = 0; i < b.size; ++i) {
        for (size_t j = 0; j < src_seqs[i].size(); ++j) {
            b.src[i * b.src_len + j] = src_seqs[i][j];
        }
        for (size_t j = 0; j < tgt_seqs[i].size(); ++j) {
            b.tgt_out[i * b.tgt_len + j] = tgt_seqs[i][j];
            if (j + 1 < b.tgt_len) {
                b.tgt_in[i * b.tgt_len + j + 1] = tgt_seqs[i][j];
            }
        }
        if (!weights.empty()) {
            b.weight[i] = weights[i];
        }
    }
    return b;
}

// ---------------------------------------------------------------- layers

namespace nn {

constexpr double kMaskValue = -1e30;

struct Linear {
    Tensor w;  // [in, out]
    size_t in = 0, out = 0;

    void init(const std::string& name, size_t in_dim, size_t out_dim, Rng& rng) {
        in = in_dim;
        out = out_dim;
        w = Tensor(name, {in, out});
        w.init_normal(rng, 1.0 / std::sqrt(static_cast<double>(in)));
    }

    void forward(const double* x, double* y, size_t rows) const {
        std::fill(y, y + rows * out, 0.0);
        mm_nn(y, x, w.v.data(), rows, in, out);
    }

    // dx += dy * w^T ; w.g += x^T * dy
    void backward(const double* x, const double* dy, double* dx, size_t rows) {
        if (dx) {
            mm_nt(dx, dy, w.v.data(), rows, out, in);
        }
        mm_tn(w.g.data(), x, dy, rows, in, out);
    }
};

struct RmsNorm {
    Tensor gain;  // [d]
    static constexpr double kEps = 1e-6;

    void init(const std::string& name, size_t d) {
        gain = Tensor(name, {d});
        gain.fill(1.0);
    }

    struct Cache {
        const double* x = nullptr;
        std::vector<double> inv_rms;  // [rows]
    };

    void forward(Cache& c, const double* x, double* y, size_t rows) const {
        const size_t d = gain.size();
        c.x = x;
        c.inv_rms.resize(rows);
        for (size_t r = 0; r < rows; ++r) {
            const double* xr = x + r * d;
            double ms = 0.0;
            for (size_t i = 0; i < d; ++i) ms += xr[i] * xr[i];
            const double inv = 1.0 / std::sqrt(ms / static_cast<double>(d) + kEps);
            c.inv_rms[r] = inv;
            double* yr = y + r * d;
            for (size_t i = 0; i < d; ++i) {
                yr[i] = xr[i] * inv * gain.v[i];
            }
        }
    }

    void backward(const Cache& c, const double* dy, double* dx, size_t rows) {
        const size_t d = gain.size();
        for (size_t r = 0; r < rows; ++r) {
            const double* xr = c.x + r * d;
            const double* dyr = dy + r * d;
            const double inv = c.inv_rms[r];
            double dot = 0.0;  // sum_i dy_i * g_i * x_i
            for (size_t i = 0; i < d; ++i) {
                dot += dyr[i] * gain.v[i] * xr[i];
                gain.g[i] += dyr[i] * xr[i] * inv;
            }
            const double k = dot * inv * inv * inv / static_cast<double>(d);
            double* dxr = dx + r * d;
            for (size_t i = 0; i < d; ++i) {
                dxr[i] += dyr[i] * gain.v[i] * inv - xr[i] * k;
            }
        }
    }
};

inline double gelu(double x) { return 0.5 * x * (1.0 + std::erf(x * M_SQRT1_2)); }

inline double gelu_grad(double x) {
    const double phi = std::exp(-0.5 * x * x) * 0.3989422804014326779;  // pdf
    const double Phi = 0.5 * (1.0 + std::erf(x * M_SQRT1_2));           // cdf
    return Phi + x * phi;
}

// Gated feed-forward: wo( gelu(wi_g x) * (wi_l x) )
struct FeedForward {
    Linear wi_g, wi_l, wo;

    void init(const std::string& prefix, size_t d, size_t f, Rng& rng) {
        wi_g.init(prefix + ".wi_g", d, f, rng);
        wi_l.init(prefix + ".wi_l", d, f, rng);
        wo.init(prefix + ".wo", f, d, rng);
    }

    struct Cache {
        const double* x = nullptr;
        std::vector<double> a;  // pre-gelu [rows, f]
        std::vector<double> b;  // linear branch [rows, f]
        std::vector<double> h;  // gelu(a) * b [rows, f]
        size_t rows = 0;
    };

    void forward(Cache& c, const double* x, double* y, size_t rows) const {
        const size_t f = wi_g.out;
        c.x = x;
        c.rows = rows;
        c.a.resize(rows * f);
        c.b.resize(rows * f);
        c.h.resize(rows * f);
        wi_g.forward(x, c.a.data(), rows);
        wi_l.forward(x, c.b.data(), rows);
        for (size_t i = 0; i < rows * f; ++i) {
            c.h[i] = gelu(c.a[i]) * c.b[i];
        }
        wo.forward(c.h.data(), y, rows);
    }

    void backward(Cache& c, const double* dy, double* dx, size_t rows) {
        const size_t f = wi_g.out;
        std::vector<double> dh(rows * f, 0.0);
        wo.backward(c.h.data(), dy, dh.data(), rows);
        std::vector<double> da(rows * f), db(rows * f);
        for (size_t i = 0; i < rows * f; ++i) {
            da[i] = dh[i] * c.b[i] * gelu_grad(c.a[i]);
            db[i] = dh[i] * gelu(c.a[i]);
        }
        wi_g.backward(c.x, da.data(), dx, rows);
        wi_l.backward(c.x, db.data(), dx, rows);
    }
};

// Multi-head attention over padded batches. The optional bias is a shared
// [H, Tq, Tk] matrix (relative-position bias); mask_kv is an additive
// [B, Tk] mask; causal restricts each query to keys at or before it.
struct Attention {
    Linear wq, wk, wv, wo;
    size_t d = 0, heads = 0, dh = 0;

    void init(const std::string& prefix, size_t d_model, size_t num_heads, Rng& rng) {
        d = d_model;
        heads = num_heads;
        dh = d / heads;
        wq.init(prefix + ".wq", d, d, rng);
        wk.init(prefix + ".wk", d, d, rng);
        wv.init(prefix + ".wv", d, d, rng);
        wo.init(prefix + ".wo", d, d, rng);
    }

    struct Cache {
        const double* x_q = nullptr;
        const double* x_kv = nullptr;
        std::vector<double> q, k, v;  // [B*Tq, D], [B*Tk, D]
        std::vector<double> probs;    // [B, H, Tq, Tk]
        std::vector<double> ctx;      // [B*Tq, D]
        size_t B = 0, Tq = 0, Tk = 0;
        bool causal = false;
        const double* bias = nullptr;
        const double* mask_kv = nullptr;
    };

    void forward(Cache& c, const double* x_q, const double* x_kv, size_t B, size_t Tq, size_t Tk,
                 const double* bias, const double* mask_kv, bool causal, double* y) const {
        c.x_q = x_q;
        c.x_kv = x_kv;
        c.B = B;
        c.Tq = Tq;
        c.Tk = Tk;
        c.causal = causal;
        c.bias = bias;
        c.mask_kv = mask_kv;
        c.q.resize(B * Tq * d);
        c.k.resize(B * Tk * d);
        c.v.resize(B * Tk * d);
        wq.forward(x_q, c.q.data(), B * Tq);
        wk.forward(x_kv, c.k.data(), B * Tk);
        wv.forward(x_kv, c.v.data(), B * Tk);

        const double scale = 1.0 / std::sqrt(static_cast<double>(dh));
        c.probs.assign(B * heads * Tq * Tk, 0.0);
        c.ctx.assign(B * Tq * d, 0.0);
        std::vector<double> row(Tk);
        for (size_t b = 0; b < B; ++b) {
            for (size_t h = 0; h < heads; ++h) {
                for (size_t i = 0; i < Tq; ++i) {
                    const double* qi = c.q.data() + (b * Tq + i) * d + h * dh;
                    const size_t jmax = causal ? std::min(Tk, i + 1) : Tk;
                    double best = kMaskValue;
                    for (size_t j = 0; j < jmax; ++j) {
                        const double* kj = c.k.data() + (b * Tk + j) * d + h * dh;
                        double s = 0.0;
                        for (size_t e = 0; e < dh; ++e) s += qi[e] * kj[e];
                        s *= scale;
                        if (bias) s += bias[(h * Tq + i) * Tk + j];
                        if (mask_kv) s += mask_kv[b * Tk + j];
                        row[j] = s;
                        best = std::max(best, s);
                    }
                    double* probs = c.probs.data() + ((b * heads + h) * Tq + i) * Tk;
                    if (best <= 0.5 * kMaskValue) {
                        continue;  // fully masked row attends nothing
                    }
                    double denom = 0.0;
                    for (size_t j = 0; j < jmax; ++j) {
                        const double e = std::exp(row[j] - best);
                        probs[j] = e;
                        denom += e;
                    }
                    double* ctx = c.ctx.data() + (b * Tq + i) * d + h * dh;
                    for (size_t j = 0; j < jmax; ++j) {
                        probs[j] /= denom;
                        if (probs[j] == 0.0) continue;
                        const double* vj = c.v.data() + (b * Tk + j) * d + h * dh;
                        for (size_t e = 0; e < dh; ++e) ctx[e] += probs[j] * vj[e];
                    }
                }
            }
        }
        wo.forward(c.ctx.data(), y, B * Tq);
    }

    // dbias, dx_q, dx_kv accumulate; dbias may be null when no bias is used
    void backward(Cache& c, const double* dy, double* dx_q, double* dx_kv, double* dbias) {
        const size_t B = c.B, Tq = c.Tq, Tk = c.Tk;
        std::vector<double> dctx(B * Tq * d, 0.0);
        wo.backward(c.ctx.data(), dy, dctx.data(), B * Tq);

        std::vector<double> dq(B * Tq * d, 0.0), dk(B * Tk * d, 0.0), dv(B * Tk * d, 0.0);
        const double scale = 1.0 / std::sqrt(static_cast<double>(dh));
        std::vector<double> dprob(Tk), dscore(Tk);
        for (size_t b = 0; b < B; ++b) {
            for (size_t h = 0; h < heads; ++h) {
                for (size_t i = 0; i < Tq; ++i) {
                    const size_t jmax = c.causal ? std::min(Tk, i + 1) : Tk;
                    const double* probs = c.probs.data() + ((b * heads + h) * Tq + i) * Tk;
                    const double* dctxi = dctx.data() + (b * Tq + i) * d + h * dh;
                    // dprob_j = dctx . v_j ; dv_j += prob_j * dctx
                    for (size_t j = 0; j < jmax; ++j) {
                        const double* vj = c.v.data() + (b * Tk + j) * d + h * dh;
                        double acc = 0.0;
                        for (size_t e = 0; e < dh; ++e) acc += dctxi[e] * vj[e];
                        dprob[j] = acc;
                        if (probs[j] != 0.0) {
                            double* dvj = dv.data() + (b * Tk + j) * d + h * dh;
                            for (size_t e = 0; e < dh; ++e) dvj[e] += probs[j] * dctxi[e];
                        }
                    }
                    // softmax backward
                    double dot = 0.0;
                    for (size_t j = 0; j < jmax; ++j) dot += probs[j] * dprob[j];
                    for (size_t j = 0; j < jmax; ++j) {
                        dscore[j] = probs[j] * (dprob[j] - dot);
                    }
                    const double* qi = c.q.data() + (b * Tq + i) * d + h * dh;
                    double* dqi = dq.data() + (b * Tq + i) * d + h * dh;
                    for (size_t j = 0; j < jmax; ++j) {
                        const double ds = dscore[j];
                        if (ds == 0.0) continue;
                        if (dbias) dbias[(h * Tq + i) * Tk + j] += ds;
                        const double* kj = c.k.data() + (b * Tk + j) * d + h * dh;
                        double* dkj = dk.data() + (b * Tk + j) * d + h * dh;
                        for (size_t e = 0; e < dh; ++e) {
                            dqi[e] += ds * scale * kj[e];
                            dkj[e] += ds * scale * qi[e];
                        }
                    }
                }
            }
        }
        wq.backward(c.x_q, dq.data(), dx_q, B * Tq);
        wk.backward(c.x_kv, dk.data(), dx_kv, B * Tk);
        wv.backward(c.x_kv, dv.data(), dx_kv, B * Tk);
    }
};

// T5 relative position bucketing.
inline size_t rel_bucket(long long relative, bool bidirectional, size_t num_buckets,
                         size_t max_distance) {
    size_t ret = 0;
    size_t n = num_buckets;
    long long rel = relative;
    if (bidirectional) {
        n /= 2;
        if (rel > 0) {
            ret += n;
        }
        rel = std::llabs(rel);
    } else {
        rel = -std::min(rel, 0LL);
    }
    const long long max_exact = static_cast<long long>(n / 2);
    if (rel < max_exact) {
        return ret + static_cast<size_t>(rel);
    }
    const double log_ratio = std::log(static_cast<double>(rel) / static_cast<double>(max_exact)) /
                             std::log(static_cast<double>(max_distance) / static_cast<double>(max_exact));
    long long bucket = max_exact + static_cast<long long>(log_ratio * static_cast<double>(n - static_cast<size_t>(max_exact)));
    bucket = std::min(bucket, static_cast<long long>(n) - 1);
    return ret + static_cast<size_t>(bucket);
}

}  // namespace nn

// ---------------------------------------------------------------- model

struct LossParts {
    double weighted_sum = 0.0;   // sum of weighted token losses
    double weight_total = 0.0;   // sum of token weights
    double loss = 0.0;           // weighted mean per token
};

class Transformer {
public:
    TransformerConfig config;

    Transformer(const TransformerConfig& cfg, uint64_t seed) : config(cfg) {
        config.validate();
        Rng rng(seed);
        const size_t d = config.d_model;
        emb_ = Tensor("emb", {config.vocab_size, d});
        emb_.init_normal(rng, 1.0);
        lm_head_ = Tensor("lm_head", {d, config.vocab_size});
        lm_head_.init_normal(rng, 1.0 / std::sqrt(static_cast<double>(d)));
        enc_rel_bias_ = Tensor("enc.rel_bias", {config.rel_buckets, config.num_heads});
        enc_rel_bias_.init_normal(rng, 0.1);
        dec_rel_bias_ = Tensor("dec.rel_bias", {config.rel_buckets, config.num_heads});
        dec_rel_bias_.init_normal(rng, 0.1);

        enc_layers_.resize(config.num_layers);
        dec_layers_.resize(config.num_layers);
        for (size_t l = 0; l < config.num_layers; ++l) {
            const std::string ep = "enc.l" + std::to_string(l);
            enc_layers_[l].norm1.init(ep + ".norm1.gain", d);
            enc_layers_[l].attn.init(ep + ".attn", d, config.num_heads, rng);
            enc_layers_[l].norm2.init(ep + ".norm2.gain", d);
            enc_layers_[l].ff.init(ep + ".ff", d, config.d_ff, rng);
            const std::string dp = "dec.l" + std::to_string(l);
            dec_layers_[l].norm1.init(dp + ".norm1.gain", d);
            dec_layers_[l].self_attn.init(dp + ".self", d, config.num_heads, rng);
            dec_layers_[l].norm2.init(dp + ".norm2.gain", d);
            dec_layers_[l].cross_attn.init(dp + ".cross", d, config.num_heads, rng);
            dec_layers_[l].norm3.init(dp + ".norm3.gain", d);
            dec_layers_[l].ff.init(dp + ".ff", d, config.d_ff, rng);
        }
        enc_final_.init("enc.final_norm.gain", d);
        dec_final_.init("dec.final_norm.gain", d);
    }

    std::vector<Tensor*> parameters() {
        std::vector<Tensor*> ps;
        ps.push_back(&emb_);
        for (auto& l : enc_layers_) {
            ps.push_back(&l.norm1.gain);
            ps.push_back(&l.attn.wq.w);
            ps.push_back(&l.attn.wk.w);
            ps.push_back(&l.attn.wv.w);
            ps.push_back(&l.attn.wo.w);
            ps.push_back(&l.norm2.gain);
            ps.push_back(&l.ff.wi_g.w);
            ps.push_back(&l.ff.wi_l.w);
            ps.push_back(&l.ff.wo.w);
        }
        ps.push_back(&enc_final_.gain);
        ps.push_back(&enc_rel_bias_);
        for (auto& l : dec_layers_) {
            ps.push_back(&l.norm1.gain);
            ps.push_back(&l.self_attn.wq.w);
            ps.push_back(&l.self_attn.wk.w);
            ps.push_back(&l.self_attn.wv.w);
            ps.push_back(&l.self_attn.wo.w);
            ps.push_back(&l.norm2.gain);
            ps.push_back(&l.cross_attn.wq.w);
            ps.push_back(&l.cross_attn.wk.w);
            ps.push_back(&l.cross_attn.wv.w);
            ps.push_back(&l.cross_attn.wo.w);
            ps.push_back(&l.norm3.gain);
            ps.push_back(&l.ff.wi_g.w);
            ps.push_back(&l.ff.wi_l.w);
            ps.push_back(&l.ff.wo.w);
        }
        ps.push_back(&dec_final_.gain);
        ps.push_back(&dec_rel_bias_);
        ps.push_back(&lm_head_);
        return ps;
    }

    size_t parameter_count() {
        size_t n = 0;
        for (const Tensor* t : parameters()) n += t->size();
        return n;
    }

    void zero_grad() {
        for (Tensor* t : parameters()) t->zero_grad();
    }

    // ---------------- forward ----------------

    struct Workspace {
        // encoder
        std::vector<double> src_mask;  // [B,S] additive
        std::vector<double> enc_bias;  // [H,S,S]
        std::vector<double> enc_x0;    // embeddings
        struct EncLayerCache {
            nn::RmsNorm::Cache n1, n2;
            nn::Attention::Cache attn;
            nn::FeedForward::Cache ff;
            std::vector<double> normed1, attn_out, x_mid, normed2, ff_out, x_out;
            std::vector<double> drop1, drop2;  // dropout multipliers
        };
        std::vector<EncLayerCache> enc;
        nn::RmsNorm::Cache enc_final;
        std::vector<double> enc_out;

        // decoder
        std::vector<double> dec_bias;  // [H,T,T]
        std::vector<double> dec_x0;
        struct DecLayerCache {
            nn::RmsNorm::Cache n1, n2, n3;
            nn::Attention::Cache self_attn, cross_attn;
            nn::FeedForward::Cache ff;
            std::vector<double> normed1, self_out, x_mid1, normed2, cross_out, x_mid2, normed3,
                ff_out, x_out;
            std::vector<double> drop1, drop2, drop3;
        };
        std::vector<DecLayerCache> dec;
        nn::RmsNorm::Cache dec_final;
        std::vector<double> dec_out;
        std::vector<double> logits;  // [B*T, V]
    };

    void forward(Workspace& ws, const Batch& batch, bool training, Rng* dropout_rng) const {
        const size_t B = batch.size, S = batch.src_len, T = batch.tgt_len;
        const size_t d = config.d_model;

        ws.src_mask.assign(B * S, 0.0);
        for (size_t i = 0; i < B * S; ++i) {
            if (batch.src[i] == ByteTokenizer::pad_id) {
                ws.src_mask[i] = nn::kMaskValue;
            }
        }
        fill_bias(ws.enc_bias, enc_rel_bias_, S, S, true);
        fill_bias(ws.dec_bias, dec_rel_bias_, T, T, false);

        embed(batch.src, ws.enc_x0);
        ws.enc.assign(config.num_layers, {});
        const double* x = ws.enc_x0.data();
        for (size_t l = 0; l < config.num_layers; ++l) {
            auto& lc = ws.enc[l];
            auto& layer = enc_layers_[l];
            const size_t R = B * S;
            lc.normed1.resize(R * d);
            layer.norm1.forward(lc.n1, x, lc.normed1.data(), R);
            lc.attn_out.resize(R * d);
            layer.attn.forward(lc.attn, lc.normed1.data(), lc.normed1.data(), B, S, S,
                               ws.enc_bias.data(), ws.src_mask.data(), false, lc.attn_out.data());
            apply_dropout(lc.attn_out, lc.drop1, training, dropout_rng);
            lc.x_mid.resize(R * d);
            for (size_t i = 0; i < R * d; ++i) lc.x_mid[i] = x[i] + lc.attn_out[i];
            lc.normed2.resize(R * d);
            layer.norm2.forward(lc.n2, lc.x_mid.data(), lc.normed2.data(), R);
            lc.ff_out.resize(R * d);
            layer.ff.forward(lc.ff, lc.normed2.data(), lc.ff_out.data(), R);
            apply_dropout(lc.ff_out, lc.drop2, training, dropout_rng);
            lc.x_out.resize(R * d);
            for (size_t i = 0; i < R * d; ++i) lc.x_out[i] = lc.x_mid[i] + lc.ff_out[i];
            x = lc.x_out.data();
        }
        ws.enc_out.resize(B * S * d);
        enc_final_.forward(ws.enc_final, x, ws.enc_out.data(), B * S);

        embed(batch.tgt_in, ws.dec_x0);
        ws.dec.assign(config.num_layers, {});
        const double* y = ws.dec_x0.data();
        for (size_t l = 0; l < config.num_layers; ++l) {
            auto& lc = ws.dec[l];
            auto& layer = dec_layers_[l];
            const size_t R = B * T;
            lc.normed1.resize(R * d);
            layer.norm1.forward(lc.n1, y, lc.normed1.data(), R);
            lc.self_out.resize(R * d);
            layer.self_attn.forward(lc.self_attn, lc.normed1.data(), lc.normed1.data(), B, T, T,
                                    ws.dec_bias.data(), nullptr, true, lc.self_out.data());
            apply_dropout(lc.self_out, lc.drop1, training, dropout_rng);
            lc.x_mid1.resize(R * d);
            for (size_t i = 0; i < R * d; ++i) lc.x_mid1[i] = y[i] + lc.self_out[i];
            lc.normed2.resize(R * d);
            layer.norm2.forward(lc.n2, lc.x_mid1.data(), lc.normed2.data(), R);
            lc.cross_out.resize(R * d);
            layer.cross_attn.forward(lc.cross_attn, lc.normed2.data(), ws.enc_out.data(), B, T, S,
                                     nullptr, ws.src_mask.data(), false, lc.cross_out.data());
            apply_dropout(lc.cross_out, lc.drop2, training, dropout_rng);
            lc.x_mid2.resize(R * d);
            for (size_t i = 0; i < R * d; ++i) lc.x_mid2[i] = lc.x_mid1[i] + lc.cross_out[i];
            lc.normed3.resize(R * d);
            layer.norm3.forward(lc.n3, lc.x_mid2.data(), lc.normed3.data(), R);
            lc.ff_out.resize(R * d);
            layer.ff.forward(lc.ff, lc.normed3.data(), lc.ff_out.data(), R);
            apply_dropout(lc.ff_out, lc.drop3, training, dropout_rng);
            lc.x_out.resize(R * d);
            for (size_t i = 0; i < R * d; ++i) lc.x_out[i] = lc.x_mid2[i] + lc.ff_out[i];
            y = lc.x_out.data();
        }
        ws.dec_out.resize(B * T * d);
        dec_final_.forward(ws.dec_final, y, ws.dec_out.data(), B * T);

        ws.logits.assign(B * T * config.vocab_size, 0.0);
        mm_nn(ws.logits.data(), ws.dec_out.data(), lm_head_.v.data(), B * T, d, config.vocab_size);
    }

    // token-level cross-entropy averaged over non-pad tokens, with optional
    // per-example weights; fills dlogits when given
    LossParts compute_loss(const Workspace& ws, const Batch& batch,
                           std::vector<double>* dlogits) const {
        const size_t V = config.vocab_size;
        const size_t rows = batch.size * batch.tgt_len;
        LossParts parts;
        if (dlogits) {
            dlogits->assign(rows * V, 0.0);
        }
        std::vector<double> probs(V);
        for (size_t r = 0; r < rows; ++r) {
            const int target = batch.tgt_out[r];
            if (target == ByteTokenizer::pad_id) {
                continue;
            }
            const double w = batch.weight[r / batch.tgt_len];
            const double* lr = ws.logits.data() + r * V;
            double m = lr[0];
            for (size_t v2 = 1; v2 < V; ++v2) m = std::max(m, lr[v2]);
            double denom = 0.0;
            for (size_t v2 = 0; v2 < V; ++v2) {
                probs[v2] = std::exp(lr[v2] - m);
                denom += probs[v2];
            }
            const double logprob = lr[static_cast<size_t>(target)] - m - std::log(denom);
            parts.weighted_sum += -w * logprob;
            parts.weight_total += w;
            if (dlogits) {
                double* dlr = dlogits->data() + r * V;
                for (size_t v2 = 0; v2 < V; ++v2) {
                    dlr[v2] = w * (probs[v2] / denom);
                }
                dlr[static_cast<size_t>(target)] -= w;
            }
        }
        if (parts.weight_total > 0.0) {
            parts.loss = parts.weighted_sum / parts.weight_total;
            if (dlogits) {
                for (double& v2 : *dlogits) {
                    v2 /= parts.weight_total;
                }
            }
        }
        return parts;
    }

    double loss(const Batch& batch) const {
        Workspace ws;
        forward(ws, batch, false, nullptr);
        return compute_loss(ws, batch, nullptr).loss;
    }

    // ---------------- backward ----------------

    void backward(Workspace& ws, const Batch& batch, const std::vector<double>& dlogits) {
        const size_t B = batch.size, S = batch.src_len, T = batch.tgt_len;
        const size_t d = config.d_model, H = config.num_heads;
        const size_t Rt = B * T, Rs = B * S;

        // logits = dec_out * lm_head
        std::vector<double> ddec_out(Rt * d, 0.0);
        mm_nt(ddec_out.data(), dlogits.data(), lm_head_.v.data(), Rt, config.vocab_size, d);
        mm_tn(lm_head_.g.data(), ws.dec_out.data(), dlogits.data(), Rt, d, config.vocab_size);

        std::vector<double> dy(Rt * d, 0.0);
        dec_final_.backward(ws.dec_final, ddec_out.data(), dy.data(), Rt);

        std::vector<double> denc_out(Rs * d, 0.0);
        std::vector<double> dec_dbias(H * T * T, 0.0);
        for (size_t l = config.num_layers; l-- > 0;) {
            auto& lc = ws.dec[l];
            auto& layer = dec_layers_[l];
            // x_out = x_mid2 + drop(ff_out)
            std::vector<double> dff(Rt * d);
            for (size_t i = 0; i < Rt * d; ++i) {
                dff[i] = lc.drop3.empty() ? dy[i] : dy[i] * lc.drop3[i];
            }
            std::vector<double> dnormed3(Rt * d, 0.0);
            layer.ff.backward(lc.ff, dff.data(), dnormed3.data(), Rt);
            layer.norm3.backward(lc.n3, dnormed3.data(), dy.data(), Rt);
            // x_mid2 = x_mid1 + drop(cross_out)
            std::vector<double> dcross(Rt * d);
            for (size_t i = 0; i < Rt * d; ++i) {
                dcross[i] = lc.drop2.empty() ? dy[i] : dy[i] * lc.drop2[i];
            }
            std::vector<double> dnormed2(Rt * d, 0.0);
            layer.cross_attn.backward(lc.cross_attn, dcross.data(), dnormed2.data(),
                                      denc_out.data(), nullptr);
            layer.norm2.backward(lc.n2, dnormed2.data(), dy.data(), Rt);
            // x_mid1 = x0 + drop(self_out)
            std::vector<double> dself(Rt * d);
            for (size_t i = 0; i < Rt * d; ++i) {
                dself[i] = lc.drop1.empty() ? dy[i] : dy[i] * lc.drop1[i];
            }
            std::vector<double> dnormed1(Rt * d, 0.0);
            layer.self_attn.backward(lc.self_attn, dself.data(), dnormed1.data(), dnormed1.data(),
                                     dec_dbias.data());
            layer.norm1.backward(lc.n1, dnormed1.data(), dy.data(), Rt);
        }
        scatter_bias_grad(dec_dbias, dec_rel_bias_, T, T, false);
        embed_backward(batch.tgt_in, dy);

        // encoder final norm feeds every decoder layer's cross attention
        std::vector<double> dx(Rs * d, 0.0);
        enc_final_.backward(ws.enc_final, denc_out.data(), dx.data(), Rs);
        std::vector<double> enc_dbias(H * S * S, 0.0);
        for (size_t l = config.num_layers; l-- > 0;) {
            auto& lc = ws.enc[l];
            auto& layer = enc_layers_[l];
            std::vector<double> dff(Rs * d);
            for (size_t i = 0; i < Rs * d; ++i) {
                dff[i] = lc.drop2.empty() ? dx[i] : dx[i] * lc.drop2[i];
            }
            std::vector<double> dnormed2(Rs * d, 0.0);
            layer.ff.backward(lc.ff, dff.data(), dnormed2.data(), Rs);
            layer.norm2.backward(lc.n2, dnormed2.data(), dx.data(), Rs);
            std::vector<double> dattn(Rs * d);
            for (size_t i = 0; i < Rs * d; ++i) {
                dattn[i] = lc.drop1.empty() ? dx[i] : dx[i] * lc.drop1[i];
            }
            std::vector<double> dnormed1(Rs * d, 0.0);
            layer.attn.backward(lc.attn, dattn.data(), dnormed1.data(), dnormed1.data(),
                                enc_dbias.data());
            layer.norm1.backward(lc.n1, dnormed1.data(), dx.data(), Rs);
        }
        scatter_bias_grad(enc_dbias, enc_rel_bias_, S, S, true);
        embed_backward(batch.src, dx);
    }

    // forward + backward; gradients accumulate into parameter tensors
    LossParts train_step(const Batch& batch, Rng* dropout_rng) {
        Workspace ws;
        forward(ws, batch, true, dropout_rng);
        std::vector<double> dlogits;
        const LossParts parts = compute_loss(ws, batch, &dlogits);
        backward(ws, batch, dlogits);
        return parts;
    }

    // ---------------- inference ----------------

    struct Encoded {
        size_t src_len = 0;
        std::vector<int> src;        // [S]
        std::vector<double> enc_out; // [S, D]
        std::vector<double> mask;    // [S]
    };

    Encoded encode_source(const std::vector<int>& src_ids) const {
        if (src_ids.empty()) {
            throw Error("encode_source: empty source");
        }
        for (int id : src_ids) {
            if (id < 0 || static_cast<size_t>(id) >= config.vocab_size) {
                throw Error("encode_source: id out of range");
            }
        }
        Batch b;
        b.size = 1;
        b.src_len = src_ids.size();
        b.tgt_len = 1;
        b.src = src_ids;
        b.tgt_in = {ByteTokenizer::pad_id};
        b.tgt_out = {ByteTokenizer::pad_id};
        b.weight = {1.0};
        Workspace ws;
        forward_encoder_only(ws, b);
        Encoded e;
        e.src_len = src_ids.size();
        e.src = src_ids;
        e.enc_out = std::move(ws.enc_out);
        e.mask = std::move(ws.src_mask);
        return e;
    }

    // logits over the vocabulary for the token following the given prefix
    std::vector<double> next_token_logits(const Encoded& enc, const std::vector<int>& prefix) const {
        const size_t T = prefix.size() + 1;
        const size_t d = config.d_model, H = config.num_heads, S = enc.src_len;
        std::vector<int> tgt_in(T, ByteTokenizer::pad_id);
        for (size_t i = 0; i < prefix.size(); ++i) {
            if (prefix[i] < 0 || static_cast<size_t>(prefix[i]) >= config.vocab_size) {
                throw Error("next_token_logits: id out of range");
            }
            tgt_in[i + 1] = prefix[i];
        }
        std::vector<double> bias;
        fill_bias(bias, dec_rel_bias_, T, T, false);
        std::vector<double> x;
        embed(tgt_in, x);
        Workspace::DecLayerCache lc;
        std::vector<double> buf(T * d);
        for (size_t l = 0; l < config.num_layers; ++l) {
            auto& layer = dec_layers_[l];
            lc.normed1.resize(T * d);
            layer.norm1.forward(lc.n1, x.data(), lc.normed1.data(), T);
            lc.self_out.resize(T * d);
            layer.self_attn.forward(lc.self_attn, lc.normed1.data(), lc.normed1.data(), 1, T, T,
                                    bias.data(), nullptr, true, lc.self_out.data());
            for (size_t i = 0; i < T * d; ++i) lc.self_out[i] += x[i];
            lc.normed2.resize(T * d);
            layer.norm2.forward(lc.n2, lc.self_out.data(), lc.normed2.data(), T);
            lc.cross_out.resize(T * d);
            layer.cross_attn.forward(lc.cross_attn, lc.normed2.data(), enc.enc_out.data(), 1, T, S,
                                     nullptr, enc.mask.data(), false, lc.cross_out.data());
            for (size_t i = 0; i < T * d; ++i) lc.cross_out[i] += lc.self_out[i];
            lc.normed3.resize(T * d);
            layer.norm3.forward(lc.n3, lc.cross_out.data(), lc.normed3.data(), T);
            lc.ff_out.resize(T * d);
            layer.ff.forward(lc.ff, lc.normed3.data(), lc.ff_out.data(), T);
            for (size_t i = 0; i < T * d; ++i) buf[i] = lc.cross_out[i] + lc.ff_out[i];
            x = buf;
        }
        nn::RmsNorm::Cache fc;
        std::vector<double> out(T * d);
        dec_final_.forward(fc, x.data(), out.data(), T);
        std::vector<double> logits(config.vocab_size, 0.0);
        mm_nn(logits.data(), out.data() + (T - 1) * d, lm_head_.v.data(), 1, d, config.vocab_size);
        return logits;
    }

    const Tensor& tensor_named(const std::string& name) {
        for (Tensor* t : parameters()) {
            if (t->name == name) return *t;
        }
        throw Error("no tensor named \"" + name + "\"");
    }

private:
    struct EncoderLayer {
        nn::RmsNorm norm1, norm2;
        nn::Attention attn;
        nn::FeedForward ff;
    };
    struct DecoderLayer {
        nn::RmsNorm norm1, norm2, norm3;
        nn::Attention self_attn, cross_attn;
        nn::FeedForward ff;
    };

    Tensor emb_, lm_head_, enc_rel_bias_, dec_rel_bias_;
    std::vector<EncoderLayer> enc_layers_;
    std::vector<DecoderLayer> dec_layers_;
    nn::RmsNorm enc_final_, dec_final_;

    void embed(const std::vector<int>& ids, std::vector<double>& out) const {
        const size_t d = config.d_model;
        out.resize(ids.size() * d);
        for (size_t r = 0; r < ids.size(); ++r) {
            const int id = ids[r];
            if (id < 0 || static_cast<size_t>(id) >= config.vocab_size) {
                throw Error("embed: id out of range: " + std::to_string(id));
            }
            std::memcpy(out.data() + r * d, emb_.v.data() + static_cast<size_t>(id) * d,
                        d * sizeof(double));
        }
    }

    void embed_backward(const std::vector<int>& ids, const std::vector<double>& dout) {
        const size_t d = config.d_model;
        for (size_t r = 0; r < ids.size(); ++r) {
            double* g = emb_.g.data() + static_cast<size_t>(ids[r]) * d;
            const double* src = dout.data() + r * d;
            for (size_t i = 0; i < d; ++i) {
                g[i] += src[i];
            }
        }
    }

    void fill_bias(std::vector<double>& bias, const Tensor& rel, size_t Tq, size_t Tk,
                   bool bidirectional) const {
        const size_t H = config.num_heads;
        bias.resize(H * Tq * Tk);
        for (size_t h = 0; h < H; ++h) {
            for (size_t i = 0; i < Tq; ++i) {
                for (size_t j = 0; j < Tk; ++j) {
                    const size_t bkt =
                        nn::rel_bucket(static_cast<long long>(j) - static_cast<long long>(i),
                                       bidirectional, config.rel_buckets, config.rel_max_distance);
                    bias[(h * Tq + i) * Tk + j] = rel.v[bkt * H + h];
                }
            }
        }
    }

    void scatter_bias_grad(const std::vector<double>& dbias, Tensor& rel, size_t Tq, size_t Tk,
                           bool bidirectional) {
        const size_t H = config.num_heads;
        for (size_t h = 0; h < H; ++h) {
            for (size_t i = 0; i < Tq; ++i) {
                for (size_t j = 0; j < Tk; ++j) {
                    const double g = dbias[(h * Tq + i) * Tk + j];
                    if (g == 0.0) continue;
                    const size_t bkt =
                        nn::rel_bucket(static_cast<long long>(j) - static_cast<long long>(i),
                                       bidirectional, config.rel_buckets, config.rel_max_distance);
                    rel.g[bkt * H + h] += g;
                }
            }
        }
    }

    void apply_dropout(std::vector<double>& x, std::vector<double>& mask, bool training,
                       Rng* rng) const {
        if (!training || config.dropout <= 0.0 || rng == nullptr) {
            mask.clear();
            return;
        }
        const double keep = 1.0 - config.dropout;
        mask.resize(x.size());
        for (size_t i = 0; i < x.size(); ++i) {
            mask[i] = rng->next_double() < config.dropout ? 0.0 : 1.0 / keep;
            x[i] *= mask[i];
        }
    }

    void forward_encoder_only(Workspace& ws, const Batch& batch) const {
        const size_t B = batch.size, S = batch.src_len;
        const size_t d = config.d_model;
        ws.src_mask.assign(B * S, 0.0);
        for (size_t i = 0; i < B * S; ++i) {
            if (batch.src[i] == ByteTokenizer::pad_id) {
                ws.src_mask[i] = nn::kMaskValue;
            }
        }
        fill_bias(ws.enc_bias, enc_rel_bias_, S, S, true);
        embed(batch.src, ws.enc_x0);
        ws.enc.assign(config.num_layers, {});
        const double* x = ws.enc_x0.data();
        for (size_t l = 0; l < config.num_layers; ++l) {
            auto& lc = ws.enc[l];
            auto& layer = enc_layers_[l];
            const size_t R = B * S;
            lc.normed1.resize(R * d);
            layer.norm1.forward(lc.n1, x, lc.normed1.data(), R);
            lc.attn_out.resize(R * d);
            layer.attn.forward(lc.attn, lc.normed1.data(), lc.normed1.data(), B, S, S,
                               ws.enc_bias.data(), ws.src_mask.data(), false, lc.attn_out.data());
            lc.x_mid.resize(R * d);
            for (size_t i = 0; i < R * d; ++i) lc.x_mid[i] = x[i] + lc.attn_out[i];
            lc.normed2.resize(R * d);
            layer.norm2.forward(lc.n2, lc.x_mid.data(), lc.normed2.data(), R);
            lc.ff_out.resize(R * d);
            layer.ff.forward(lc.ff, lc.normed2.data(), lc.ff_out.data(), R);
            lc.x_out.resize(R * d);
            for (size_t i = 0; i < R * d; ++i) lc.x_out[i] = lc.x_mid[i] + lc.ff_out[i];
            x = lc.x_out.data();
        }
        ws.enc_out.resize(B * S * d);
        enc_final_.forward(ws.enc_final, x, ws.enc_out.data(), B * S);
    }

    friend struct CheckpointIO;
};

// ---------------------------------------------------------------- checkpoint

// Serialized model: JSON manifest (config, step, metric, tensor tables)
// plus a raw little-endian float32 blob.
struct Checkpoint {
    TransformerConfig config;
    size_t step = 0;
    double best_metric = 0.0;
    std::vector<std::pair<std::string, std::vector<size_t>>> manifest;
    std::vector<float> blob;
};

inline Checkpoint make_checkpoint(Transformer& model, size_t step, double best_metric) {
    Checkpoint c;
    c.config = model.config;
    c.step = step;
    c.best_metric = best_metric;
    for (Tensor* t : model.parameters()) {
        c.manifest.emplace_back(t->name, t->shape);
        for (double v : t->v) {
            const float f = static_cast<float>(v);
            if (!std::isfinite(f)) {
                throw Error("checkpoint: non-finite value in tensor " + t->name);
            }
            c.blob.push_back(f);
        }
    }
    return c;
}

inline Transformer model_from_checkpoint(const Checkpoint& c, uint64_t seed = 0) {
    Transformer model(c.config, seed);
    size_t offset = 0;
    auto params = model.parameters();
    if (params.size() != c.manifest.size()) {
        throw Error("checkpoint: tensor count mismatch");
    }
    for (size_t i = 0; i < params.size(); ++i) {
        Tensor* t = params[i];
        const auto& [name, shape] = c.manifest[i];
        if (t->name != name || t->shape != shape) {
            throw Error("checkpoint: shape or name mismatch for tensor \"" + name + "\"");
        }
        if (offset + t->size() > c.blob.size()) {
            throw Error("checkpoint: blob too short for tensor \"" + name + "\"");
        }
        for (size_t k = 0; k < t->size(); ++k) {
            t->v[k] = static_cast<double>(c.blob[offset + k]);
        }
        offset += t->size();
    }
    if (offset != c.blob.size()) {
        throw Error("checkpoint: blob length mismatch");
    }
    return model;
}

// path prefix: writes <prefix>.json and <prefix>.bin
inline void save_checkpoint(const Checkpoint& c, const std::string& prefix) {
    nlohmann::json tensors = nlohmann::json::array();
    size_t offset = 0;
    for (const auto& [name, shape] : c.manifest) {
        size_t n = 1;
        for (size_t s : shape) n *= s;
        tensors.push_back({{"name", name}, {"shape", shape}, {"offset", offset}, {"size", n}});
        offset += n;
    }
    const nlohmann::json manifest = {{"format_version", 1},
                                     {"dtype", "f32le"},
                                     {"config", c.config.to_json()},
                                     {"step", c.step},
                                     {"best_metric", c.best_metric},
                                     {"blob_values", c.blob.size()},
                                     {"tensors", std::move(tensors)}};
    write_file(prefix + ".json", manifest.dump(2) + "\n");

    static_assert(sizeof(float) == 4);
    std::string bytes(c.blob.size() * 4, '\0');
    if constexpr (std::endian::native == std::endian::little) {
        std::memcpy(bytes.data(), c.blob.data(), bytes.size());
    } else {
        for (size_t i = 0; i < c.blob.size(); ++i) {
            uint32_t u;
            std::memcpy(&u, &c.blob[i], 4);
            bytes[i * 4 + 0] = static_cast<char>(u & 0xFF);
            bytes[i * 4 + 1] = static_cast<char>((u >> 8) & 0xFF);
            bytes[i * 4 + 2] = static_cast<char>((u >> 16) & 0xFF);
            bytes[i * 4 + 3] = static_cast<char>((u >> 24) & 0xFF);
        }
    }
    write_file(prefix + ".bin", bytes);
}

inline Checkpoint load_checkpoint(const std::string& prefix) {
    const nlohmann::json manifest = nlohmann::json::parse(read_file(prefix + ".json"));
    if (!manifest.contains("format_version") || manifest["format_version"] != 1) {
        throw Error("checkpoint: unsupported format version");
    }
    Checkpoint c;
    c.config = TransformerConfig::from_json(manifest.at("config"));
    c.step = manifest.at("step").get<size_t>();
    c.best_metric = manifest.at("best_metric").get<double>();
    size_t expected = 0;
    for (const auto& jt : manifest.at("tensors")) {
        const std::string name = jt.at("name").get<std::string>();
        const auto shape = jt.at("shape").get<std::vector<size_t>>();
        size_t n = 1;
        for (size_t s : shape) n *= s;
        if (jt.at("size").get<size_t>() != n || jt.at("offset").get<size_t>() != expected) {
            throw Error("checkpoint: inconsistent manifest entry for tensor \"" + name + "\"");
        }
        expected += n;
        c.manifest.emplace_back(name, shape);
    }
    const std::string bytes = read_file(prefix + ".bin");
    if (bytes.size() != expected * 4 || manifest.at("blob_values").get<size_t>() != expected) {
        throw Error("checkpoint: blob length mismatch (expected " + std::to_string(expected * 4) +
                    " bytes, got " + std::to_string(bytes.size()) + ")");
    }
    c.blob.resize(expected);
    if constexpr (std::endian::native == std::endian::little) {
        std::memcpy(c.blob.data(), bytes.data(), bytes.size());
    } else {
        for (size_t i = 0; i < expected; ++i) {
            const uint32_t u = static_cast<uint8_t>(bytes[i * 4]) |
                               (static_cast<uint32_t>(static_cast<uint8_t>(bytes[i * 4 + 1])) << 8) |
                               (static_cast<uint32_t>(static_cast<uint8_t>(bytes[i * 4 + 2])) << 16) |
                               (static_cast<uint32_t>(static_cast<uint8_t>(bytes[i * 4 + 3])) << 24);
            std::memcpy(&c.blob[i], &u, 4);
        }
    }
    return c;
}

}  // namespace t2l
