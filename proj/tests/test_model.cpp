#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "oracles.hpp"
#include "t2l/model.hpp"

using namespace t2l;

namespace {

TransformerConfig tiny_config() {
    TransformerConfig cfg;
    cfg.d_model = 8;
    cfg.d_ff = 16;
    cfg.num_layers = 1;
    cfg.num_heads = 2;
    cfg.vocab_size = 259;
    cfg.dropout = 0.0;
    cfg.rel_buckets = 8;
    cfg.rel_max_distance = 16;
    return cfg;
}

Batch random_batch(Rng& rng, size_t B, size_t max_src, size_t max_tgt, size_t vocab) {
    std::vector<std::vector<int>> src, tgt;
    for (size_t i = 0; i < B; ++i) {
        std::vector<int> s, t;
        const size_t sl = 1 + rng.below(max_src);
        const size_t tl = 1 + rng.below(max_tgt);
        for (size_t j = 0; j < sl; ++j) s.push_back(3 + static_cast<int>(rng.below(vocab - 3)));
        s.push_back(ByteTokenizer::eos_id);
        for (size_t j = 0; j < tl; ++j) t.push_back(3 + static_cast<int>(rng.below(vocab - 3)));
        t.push_back(ByteTokenizer::eos_id);
        src.push_back(std::move(s));
        tgt.push_back(std::move(t));
    }
    return make_batch(src, tgt, {});
}

}  // namespace

TEST_CASE("byte tokenizer") {
    CHECK(ByteTokenizer::encode("A") == std::vector<int>{68, 1});
    CHECK(ByteTokenizer::encode("") == std::vector<int>{1});
    // "ก" = U+0E01 = E0 B8 81 in UTF-8
    CHECK(ByteTokenizer::encode("ก") == std::vector<int>{227, 187, 132, 1});
    CHECK(ByteTokenizer::decode({68, 1}) == "A");
    CHECK(ByteTokenizer::decode({68, 1, 99}) == "A");  // stops at eos
}

TEST_CASE("tokenizer round-trips arbitrary utf-8 including thai and nul") {
    Rng rng(606);
    const std::vector<std::string> fixed = {"มานี", "สมชาย", "🙂🙃", std::string("a\0b", 3), "", "é"};
    for (const auto& s : fixed) {
        CHECK(ByteTokenizer::decode(ByteTokenizer::encode(s)) == s);
    }
    for (int it = 0; it < 500; ++it) {
        std::string s;
        const size_t len = rng.below(12);
        for (size_t i = 0; i < len; ++i) {
            const uint64_t pick = rng.below(4);
            char32_t cp;
            if (pick == 0) cp = static_cast<char32_t>(rng.below(0x80));
            else if (pick == 1) cp = static_cast<char32_t>(0x0E01 + rng.below(0x40));
            else if (pick == 2) cp = static_cast<char32_t>(0x100 + rng.below(0x1000));
            else cp = static_cast<char32_t>(0x10000 + rng.below(0x1000));
            if (cp >= 0xD800 && cp <= 0xDFFF) cp = 0x40;
            utf8_append(s, cp);
        }
        CHECK(ByteTokenizer::decode(ByteTokenizer::encode(s)) == s);
    }
}

TEST_CASE("config presets") {
    const auto small = TransformerConfig::small_preset();
    CHECK(small.d_model == 512);
    CHECK(small.d_ff == 1024);
    CHECK(small.num_layers == 6);
    CHECK(small.num_heads == 6);
    const auto vs = TransformerConfig::very_small_preset();
    CHECK(vs.d_model == 256);
    CHECK(vs.d_ff == 512);
    CHECK(vs.num_layers == 4);
    CHECK(vs.num_heads == 4);
    TransformerConfig bad = vs;
    bad.num_heads = 3;  // 256 % 3 != 0
    CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("very small preset has fewer parameters than small") {
    Transformer small(TransformerConfig::small_preset(), 1);
    Transformer vs(TransformerConfig::very_small_preset(), 1);
    CHECK(vs.parameter_count() < small.parameter_count());
}

TEST_CASE("logits shape contract") {
    Transformer model(tiny_config(), 7);
    std::vector<std::vector<int>> src(2), tgt(2);
    src[0] = {10, 11, 12, 13, 1};
    src[1] = {20, 21, 1};
    tgt[0] = {30, 31, 32, 33, 34, 35, 1};
    tgt[1] = {40, 1};
    const Batch batch = make_batch(src, tgt, {});
    CHECK(batch.src_len == 5);
    CHECK(batch.tgt_len == 7);
    Transformer::Workspace ws;
    model.forward(ws, batch, false, nullptr);
    CHECK(ws.logits.size() == 2 * 7 * 259);
    CHECK(all_finite(ws.logits));
}

TEST_CASE("id out of range is rejected") {
    Transformer model(tiny_config(), 7);
    std::vector<std::vector<int>> src = {{10, 300, 1}};
    std::vector<std::vector<int>> tgt = {{30, 1}};
    const Batch batch = make_batch(src, tgt, {});
    Transformer::Workspace ws;
    CHECK_THROWS_AS(model.forward(ws, batch, false, nullptr), Error);
}

TEST_CASE("all-pad source stays finite") {
    Transformer model(tiny_config(), 7);
    Batch batch;
    batch.size = 1;
    batch.src_len = 4;
    batch.tgt_len = 3;
    batch.src.assign(4, ByteTokenizer::pad_id);
    batch.tgt_in = {0, 50, 51};
    batch.tgt_out = {50, 51, 1};
    batch.weight = {1.0};
    Transformer::Workspace ws;
    model.forward(ws, batch, false, nullptr);
    CHECK(all_finite(ws.logits));
}

TEST_CASE("causality: perturbing a target id leaves earlier logits bit-unchanged") {
    Transformer model(tiny_config(), 99);
    Rng rng(17);
    for (int it = 0; it < 25; ++it) {
        std::vector<std::vector<int>> src(1), tgt(1);
        src[0] = {10, 11, 12, 1};
        tgt[0].clear();
        const size_t tl = 4 + rng.below(3);
        for (size_t j = 0; j < tl; ++j) tgt[0].push_back(30 + static_cast<int>(rng.below(50)));
        tgt[0].push_back(1);

        const Batch base = make_batch(src, tgt, {});
        Transformer::Workspace ws0;
        model.forward(ws0, base, false, nullptr);

        const size_t t = 1 + rng.below(tgt[0].size() - 1);
        auto perturbed = tgt;
        perturbed[0][t] = 200 + static_cast<int>(rng.below(50));
        const Batch mod = make_batch(src, perturbed, {});
        Transformer::Workspace ws1;
        model.forward(ws1, mod, false, nullptr);

        const size_t V = model.config.vocab_size;
        for (size_t pos = 0; pos <= t; ++pos) {
            for (size_t v = 0; v < V; ++v) {
                REQUIRE(ws0.logits[pos * V + v] == ws1.logits[pos * V + v]);
            }
        }
        bool changed = false;
        for (size_t pos = t + 1; pos < base.tgt_len && !changed; ++pos) {
            for (size_t v = 0; v < V; ++v) {
                if (ws0.logits[pos * V + v] != ws1.logits[pos * V + v]) {
                    changed = true;
                    break;
                }
            }
        }
        CHECK(changed);  // the perturbation is visible after position t
    }
}

TEST_CASE("loss analytic cases") {
    Transformer model(tiny_config(), 3);
    Batch batch;
    batch.size = 2;
    batch.src_len = 2;
    batch.tgt_len = 2;
    batch.src = {10, 1, 11, 1};
    batch.tgt_in = {0, 50, 0, 60};
    batch.tgt_out = {50, 1, 60, 1};
    batch.weight = {1.0, 1.0};

    Transformer::Workspace ws;
    const size_t V = 259;
    SECTION("uniform logits give ln(V)") {
        ws.logits.assign(batch.size * batch.tgt_len * V, 0.123);
        const LossParts parts = model.compute_loss(ws, batch, nullptr);
        CHECK(parts.loss == Catch::Approx(5.5568280616995374).margin(1e-4));
        CHECK(parts.weight_total == 4.0);
    }
    SECTION("logits favoring the target give near-zero loss") {
        ws.logits.assign(batch.size * batch.tgt_len * V, 0.0);
        for (size_t r = 0; r < 4; ++r) {
            ws.logits[r * V + static_cast<size_t>(batch.tgt_out[r])] = 30.0;
        }
        CHECK(model.compute_loss(ws, batch, nullptr).loss < 1e-3);
    }
    SECTION("doubling an example weight doubles its contribution") {
        Rng rng(4);
        ws.logits.resize(batch.size * batch.tgt_len * V);
        for (double& v : ws.logits) v = rng.normal(0.0, 1.0);
        const LossParts base = model.compute_loss(ws, batch, nullptr);
        Batch heavier = batch;
        heavier.weight = {2.0, 1.0};
        const LossParts up = model.compute_loss(ws, heavier, nullptr);
        // per-example sums recoverable from the two weighted totals
        Batch only_first = batch;
        only_first.weight = {1.0, 0.0};
        const double first_sum = model.compute_loss(ws, only_first, nullptr).weighted_sum;
        CHECK(up.weighted_sum == Catch::Approx(base.weighted_sum + first_sum).margin(1e-10));
        CHECK(up.weight_total == Catch::Approx(6.0));
    }
    SECTION("pad positions are excluded") {
        ws.logits.assign(batch.size * batch.tgt_len * V, 0.0);
        Batch padded = batch;
        padded.tgt_out = {50, ByteTokenizer::pad_id, 60, 1};
        const LossParts parts = model.compute_loss(ws, padded, nullptr);
        CHECK(parts.weight_total == 3.0);
    }
}

TEST_CASE("analytic gradients match central finite differences") {
    Transformer model(tiny_config(), 12345);
    Rng rng(88);
    Batch batch = random_batch(rng, 2, 4, 4, 80);

    model.zero_grad();
    Transformer::Workspace ws;
    model.forward(ws, batch, false, nullptr);
    std::vector<double> dlogits;
    model.compute_loss(ws, batch, &dlogits);
    model.backward(ws, batch, dlogits);

    const double h = 1e-4;
    Rng pick(3);
    for (Tensor* t : model.parameters()) {
        // sample a handful of entries per tensor; the acceptance suite
        // checks every entry
        const size_t samples = std::min<size_t>(t->size(), 5);
        for (size_t s = 0; s < samples; ++s) {
            const size_t k = pick.below(t->size());
            const double orig = t->v[k];
            t->v[k] = orig + h;
            const double lp = model.loss(batch);
            t->v[k] = orig - h;
            const double lm = model.loss(batch);
            t->v[k] = orig;
            const double fd = (lp - lm) / (2.0 * h);
            const double analytic = t->g[k];
            const double tol = 1e-3 * std::max({std::fabs(fd), std::fabs(analytic), 1e-6});
            CAPTURE(t->name, k, fd, analytic);
            CHECK(std::fabs(fd - analytic) <= tol);
        }
    }
}

TEST_CASE("same seed gives identical initialization") {
    Transformer a(tiny_config(), 42);
    Transformer b(tiny_config(), 42);
    auto pa = a.parameters();
    auto pb = b.parameters();
    REQUIRE(pa.size() == pb.size());
    for (size_t i = 0; i < pa.size(); ++i) {
        CHECK(pa[i]->v == pb[i]->v);
    }
    Transformer c(tiny_config(), 43);
    bool any_diff = false;
    auto pc = c.parameters();
    for (size_t i = 0; i < pa.size() && !any_diff; ++i) {
        any_diff = pa[i]->v != pc[i]->v;
    }
    CHECK(any_diff);
}

TEST_CASE("checkpoint round-trip is bit-exact") {
    Transformer model(tiny_config(), 5);
    const Checkpoint c = make_checkpoint(model, 123, 0.25);
    const auto dir = std::filesystem::temp_directory_path() / "t2l_ckpt_test";
    std::filesystem::create_directories(dir);
    const std::string prefix = (dir / "model").string();
    save_checkpoint(c, prefix);
    const Checkpoint back = load_checkpoint(prefix);
    CHECK(back.blob == c.blob);
    CHECK(back.step == 123);
    CHECK(back.best_metric == 0.25);
    REQUIRE(back.manifest.size() == c.manifest.size());
    for (size_t i = 0; i < c.manifest.size(); ++i) {
        CHECK(back.manifest[i] == c.manifest[i]);
    }

    // a second save of the loaded checkpoint is byte-identical
    const std::string prefix2 = (dir / "model2").string();
    save_checkpoint(back, prefix2);
    CHECK(read_file(prefix2 + ".bin") == read_file(prefix + ".bin"));
    CHECK(read_file(prefix2 + ".json") == read_file(prefix + ".json"));

    // the rebuilt model behaves identically to one rebuilt again
    const Transformer m1 = model_from_checkpoint(back);
    const Transformer m2 = model_from_checkpoint(back);
    const auto enc1 = m1.encode_source({10, 11, 1});
    const auto enc2 = m2.encode_source({10, 11, 1});
    CHECK(m1.next_token_logits(enc1, {50}) == m2.next_token_logits(enc2, {50}));

    std::filesystem::remove_all(dir);
}

TEST_CASE("checkpoint corruption is detected") {
    Transformer model(tiny_config(), 5);
    const Checkpoint c = make_checkpoint(model, 1, 1.0);
    const auto dir = std::filesystem::temp_directory_path() / "t2l_ckpt_corrupt";
    std::filesystem::create_directories(dir);
    const std::string prefix = (dir / "model").string();
    save_checkpoint(c, prefix);

    SECTION("truncated blob") {
        std::string bytes = read_file(prefix + ".bin");
        bytes.resize(bytes.size() - 8);
        write_file(prefix + ".bin", bytes);
        CHECK_THROWS_WITH(load_checkpoint(prefix), Catch::Matchers::ContainsSubstring("length"));
    }
    SECTION("manifest shape mismatch names the tensor") {
        auto manifest = nlohmann::json::parse(read_file(prefix + ".json"));
        manifest["tensors"][0]["shape"][0] = 7;  // emb first dim
        write_file(prefix + ".json", manifest.dump(2) + "\n");
        try {
            const Checkpoint bad = load_checkpoint(prefix);
            model_from_checkpoint(bad);
            FAIL("expected error");
        } catch (const Error& e) {
            CHECK(std::string(e.what()).find("emb") != std::string::npos);
        }
    }
    SECTION("wrong version") {
        auto manifest = nlohmann::json::parse(read_file(prefix + ".json"));
        manifest["format_version"] = 9;
        write_file(prefix + ".json", manifest.dump(2) + "\n");
        CHECK_THROWS_AS(load_checkpoint(prefix), Error);
    }
    std::filesystem::remove_all(dir);
}
