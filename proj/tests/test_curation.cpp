#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "t2l/curation.hpp"

using namespace t2l;

TEST_CASE("upsample_weight bin arithmetic") {
    CHECK(upsample_weight(0.95) == 1);
    CHECK(upsample_weight(1.00) == 20);
    CHECK(upsample_weight(0.975) == 11);  // 1 + floor(0.5 * 20)
    CHECK_THROWS_AS(upsample_weight(0.949), Error);

    // monotone and exactly {1..20} over a fine grid
    std::set<int> seen;
    int prev = 0;
    for (int i = 0; i <= 500; ++i) {
        const double p = 0.95 + 0.05 * static_cast<double>(i) / 500.0;
        const int w = upsample_weight(std::min(p, 1.0));
        CHECK(w >= prev);
        prev = w;
        seen.insert(w);
    }
    CHECK(seen.size() == 20);
    CHECK(*seen.begin() == 1);
    CHECK(*seen.rbegin() == 20);
}

TEST_CASE("curation config validation") {
    CurationConfig bad;
    bad.cutoff = 0.9;  // must anchor bin_lo
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    CurationConfig inverted;
    inverted.bin_lo = 1.0;
    inverted.bin_hi = 0.95;
    inverted.cutoff = 1.0;
    CHECK_THROWS_AS(inverted.validate(), ConfigError);
}

namespace {

std::vector<ScoredPair> synthetic_candidates() {
    // 100 candidates, exactly 40 at or above the 0.95 cutoff
    std::vector<ScoredPair> out;
    Rng rng(321);
    for (int i = 0; i < 100; ++i) {
        ScoredPair sp;
        sp.pair = make_name_pair("มา" + std::string("นันกาดีรี").substr(0, 3 * (1 + i % 3)),
                                 "name" + std::to_string(i));
        sp.probability = i < 40 ? 0.95 + 0.05 * rng.next_double() : 0.5 * rng.next_double();
        out.push_back(std::move(sp));
    }
    Rng(99).shuffle(out);
    return out;
}

}  // namespace

TEST_CASE("curate pipeline") {
    auto candidates = synthetic_candidates();
    CurationConfig cfg;
    cfg.split = SplitSpec{0.9, 0.05, 0.05, 11};

    const CurationResult r = curate(candidates, {}, cfg);
    CHECK(r.summary.input == 100);
    CHECK(r.summary.after_leak_removal == 100);
    CHECK(r.summary.after_cutoff == 40);
    CHECK(r.train.size() == 36);
    CHECK(r.valid.size() == 2);
    CHECK(r.test.size() == 2);
    CHECK(r.summary.total_weight >= static_cast<long long>(r.train.size()));
    CHECK(r.summary.total_weight <= 20 * static_cast<long long>(r.train.size()));
    for (const auto& wp : r.train) {
        CHECK(wp.weight == upsample_weight(wp.probability, cfg));
    }

    // deterministic given the seed
    const CurationResult r2 = curate(candidates, {}, cfg);
    REQUIRE(r2.train.size() == r.train.size());
    for (size_t i = 0; i < r.train.size(); ++i) {
        CHECK(r2.train[i].pair.latin == r.train[i].pair.latin);
        CHECK(r2.train[i].weight == r.train[i].weight);
    }
}

TEST_CASE("curate removes leaks before anything else") {
    auto candidates = synthetic_candidates();
    std::set<std::string> leak;
    leak.insert(nfc_thai(candidates[0].pair.thai));
    CurationConfig cfg;
    cfg.split = SplitSpec{0.9, 0.05, 0.05, 11};
    const CurationResult r = curate(candidates, leak, cfg);
    CHECK(r.summary.after_leak_removal < r.summary.input);
    for (const auto& wp : r.train) CHECK(leak.count(wp.pair.thai) == 0);
    for (const auto& p : r.valid) CHECK(leak.count(p.thai) == 0);
    for (const auto& p : r.test) CHECK(leak.count(p.thai) == 0);
    // stage counts never increase
    CHECK(r.summary.after_leak_removal <= r.summary.input);
    CHECK(r.summary.after_cutoff <= r.summary.after_leak_removal);
}

TEST_CASE("curate fails with stage counts when nothing survives") {
    std::vector<ScoredPair> low;
    for (int i = 0; i < 5; ++i) {
        low.push_back({make_name_pair("มา", "m" + std::to_string(i)), 0.5});
    }
    try {
        curate(low, {});
        FAIL("expected error");
    } catch (const Error& e) {
        const std::string msg = e.what();
        CHECK(msg.find("after cutoff 0") != std::string::npos);
        CHECK(msg.find("input 5") != std::string::npos);
    }
}

TEST_CASE("materialize training rows") {
    std::vector<WeightedPair> train = {
        {make_name_pair("มา", "ma"), 0.96, 3},
        {make_name_pair("นี", "ni"), 0.99, 17},
    };
    const Tsv rep = materialize_training_rows(train, MaterializeMode::replicate);
    CHECK(rep.columns == std::vector<std::string>{"thai", "latin"});
    CHECK(rep.rows.size() == 20);  // 3 + 17
    CHECK(rep.rows[0][1] == "ma");
    CHECK(rep.rows[2][1] == "ma");
    CHECK(rep.rows[3][1] == "ni");

    const Tsv wc = materialize_training_rows(train, MaterializeMode::weight_column);
    REQUIRE(wc.rows.size() == 2);
    CHECK(wc.columns == std::vector<std::string>{"thai", "latin", "weight"});
    CHECK(wc.rows[0][2] == "3");
    CHECK(wc.rows[1][2] == "17");
}

TEST_CASE("replicated row count equals the weight sum") {
    Rng rng(5150);
    std::vector<WeightedPair> train;
    long long total = 0;
    for (int i = 0; i < 500; ++i) {
        WeightedPair wp;
        wp.pair = make_name_pair("มา", "p" + std::to_string(i));
        wp.probability = 0.95 + 0.05 * rng.next_double();
        wp.weight = upsample_weight(wp.probability);
        total += wp.weight;
        train.push_back(std::move(wp));
    }
    const Tsv rep = materialize_training_rows(train, MaterializeMode::replicate);
    CHECK(static_cast<long long>(rep.rows.size()) == total);
}
