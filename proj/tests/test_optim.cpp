#include <catch2/catch_amalgamated.hpp>

#include "t2l/optim.hpp"

using namespace t2l;

namespace {

Tensor scalar(double value, double grad) {
    Tensor t("p", {1});
    t.v[0] = value;
    t.g[0] = grad;
    return t;
}

}  // namespace

TEST_CASE("adamw decoupled decay with zero gradient") {
    Tensor p = scalar(1.0, 0.0);
    AdamW opt({&p}, 0.9, 0.999, 1e-8, 0.01);
    opt.step(0.1);
    // zero moments leave only the decay: exactly (1 - lr*wd)
    CHECK(p.v[0] == 0.999);
    opt.step(0.1);
    CHECK(p.v[0] == 0.999 * 0.999);
}

TEST_CASE("adamw two constant-gradient steps match the hand computation") {
    // scalar parameter, g = 0.5, lr = 0.1, wd = 0.01, betas (0.9, 0.999):
    // expected values computed independently step by step
    Tensor p = scalar(1.0, 0.5);
    AdamW opt({&p}, 0.9, 0.999, 1e-8, 0.01);
    opt.step(0.1);
    CHECK(p.v[0] == Catch::Approx(0.89900000199999996).margin(1e-12));
    p.g[0] = 0.5;
    opt.step(0.1);
    CHECK(p.v[0] == Catch::Approx(0.79810100399800055).margin(1e-10));
}

TEST_CASE("adamw with zero weight decay reduces to adam") {
    Tensor p = scalar(1.0, 0.5);
    AdamW opt({&p}, 0.9, 0.999, 1e-8, 0.0);
    opt.step(0.1);
    p.g[0] = 0.5;
    opt.step(0.1);
    CHECK(p.v[0] == Catch::Approx(0.8000000040000006).margin(1e-12));
}

TEST_CASE("adamw rejects non-finite gradients") {
    Tensor p = scalar(1.0, std::numeric_limits<double>::infinity());
    AdamW opt({&p}, 0.9, 0.999, 1e-8, 0.01);
    CHECK_THROWS_AS(opt.step(0.1), Error);
}

TEST_CASE("lr schedule") {
    TrainConfig cfg;  // warmup 5000, lr 0.001
    CHECK(lr_at(0, cfg, 20000) == 0.0);
    CHECK(lr_at(5000, cfg, 20000) == 0.001);  // peak exactly at warmup end
    CHECK(lr_at(20000, cfg, 20000) == 0.0);
    CHECK(lr_at(2500, cfg, 20000) == Catch::Approx(0.0005));
    CHECK(lr_at(12500, cfg, 20000) == Catch::Approx(0.0005));
    CHECK_THROWS_AS(lr_at(0, cfg, 5000), ConfigError);
    CHECK_THROWS_AS(lr_at(0, cfg, 4000), ConfigError);

    // piecewise-linear continuity and peak position
    double prev = lr_at(4990, cfg, 20000);
    for (size_t s = 4991; s <= 5000; ++s) {
        const double cur = lr_at(s, cfg, 20000);
        CHECK(cur > prev);
        prev = cur;
    }
    for (size_t s = 5001; s <= 5010; ++s) {
        const double cur = lr_at(s, cfg, 20000);
        CHECK(cur < prev);
        prev = cur;
    }
    double max_lr = 0.0;
    for (size_t s = 0; s <= 20000; s += 100) {
        max_lr = std::max(max_lr, lr_at(s, cfg, 20000));
    }
    CHECK(max_lr == 0.001);
}

TEST_CASE("gradient clipping") {
    // two tensors with joint norm 2 scale by 0.5
    Tensor a = scalar(0.0, std::sqrt(2.0));
    Tensor b = scalar(0.0, std::sqrt(2.0));
    const double norm = clip_gradients({&a, &b}, 1.0);
    CHECK(norm == Catch::Approx(2.0));
    CHECK(a.g[0] == Catch::Approx(std::sqrt(2.0) / 2.0));

    // 3-4-5 triangle
    Tensor t("t", {2});
    t.g = {3.0, 4.0};
    clip_gradients({&t}, 1.0);
    CHECK(t.g[0] == Catch::Approx(0.6));
    CHECK(t.g[1] == Catch::Approx(0.8));

    // already within bound: untouched
    Tensor u = scalar(0.0, 0.5);
    const double n2 = clip_gradients({&u}, 1.0);
    CHECK(n2 == Catch::Approx(0.5));
    CHECK(u.g[0] == 0.5);
}
