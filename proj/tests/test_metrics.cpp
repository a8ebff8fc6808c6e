#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "oracles.hpp"
#include "t2l/metrics.hpp"

using namespace t2l;

TEST_CASE("levenshtein basics") {
    CHECK(levenshtein("abc", "abc") == 0);
    CHECK(levenshtein("", "abc") == 3);
    CHECK(levenshtein("abc", "") == 3);
    CHECK(levenshtein("somchai", "somchay") == oracles::lev_oracle("somchai", "somchay"));
    CHECK(levenshtein("somchai", "somchay") == 1);
    // code points, not bytes: one Thai char substitution is distance 1
    CHECK(levenshtein("มา", "มี") == 1);
}

TEST_CASE("levenshtein matches exhaustive oracle on random pairs") {
    Rng rng(101);
    for (int it = 0; it < 300; ++it) {
        const auto a = oracles::random_string(rng, 8, "abcd");
        const auto b = oracles::random_string(rng, 8, "abcd");
        CAPTURE(a, b);
        CHECK(levenshtein(a, b) == oracles::lev_oracle(a, b));
    }
}

TEST_CASE("levenshtein is a metric") {
    Rng rng(202);
    for (int it = 0; it < 200; ++it) {
        const auto a = oracles::random_string(rng, 6, "abc");
        const auto b = oracles::random_string(rng, 6, "abc");
        const auto c = oracles::random_string(rng, 6, "abc");
        const size_t dab = levenshtein(a, b);
        const size_t dba = levenshtein(b, a);
        const size_t dac = levenshtein(a, c);
        const size_t dcb = levenshtein(c, b);
        CHECK(dab == dba);
        CHECK((dab == 0) == (a == b));
        CHECK(dab <= dac + dcb);
    }
}

TEST_CASE("cer") {
    CHECK(cer("somchai", "somchai") == 0.0);
    CHECK(cer("somchay", "somchai") == Catch::Approx(1.0 / 7.0));
    CHECK(cer("", "ab") == 1.0);
    CHECK(cer("ABC", "abc") == 0.0);  // case-insensitive
    CHECK_THROWS_AS(cer("x", ""), Error);
}

TEST_CASE("corpus_cer") {
    CHECK(corpus_cer({"anan", "malee"}, {{"anan"}, {"malee"}}) == 0.0);
    CHECK(corpus_cer({"anun"}, {{"anan", "anun"}}) == 0.0);
    // two items each with 1 edit over chosen refs of length 4 and 6
    CHECK(corpus_cer({"anax", "wichax"}, {{"anan"}, {"wichai"}}) == Catch::Approx(2.0 / 10.0));
    CHECK_THROWS_AS(corpus_cer({"a"}, {}), Error);
    CHECK_THROWS_AS(corpus_cer({"a", "b"}, {{"a"}}), Error);
}

TEST_CASE("char_bleu perfect and degenerate") {
    CHECK(char_bleu("anan", {"anan"}) == Catch::Approx(100.0));
    CHECK(char_bleu("", {"anan"}) == 0.0);
    Rng rng(7);
    for (int it = 0; it < 100; ++it) {
        std::string x = oracles::random_string(rng, 12, "abcdefgh");
        if (x.empty()) x = "q";
        CHECK(char_bleu(x, {x}) == Catch::Approx(100.0).epsilon(1e-12));
    }
}

TEST_CASE("char_bleu worked 4-character example") {
    // "abcd" vs "abce": unigram 3/4, bigram 2/3, trigram 1/2, 4-gram
    // smoothed to 0.5/1; brevity penalty 1.
    const double expected = 100.0 * std::pow(0.75 * (2.0 / 3.0) * 0.5 * 0.5, 0.25);
    CHECK(char_bleu("abcd", {"abce"}) == Catch::Approx(expected).margin(1e-9));
}

TEST_CASE("char_bleu brevity penalty and short strings") {
    // single char, single-order geometric mean
    CHECK(char_bleu("a", {"a"}) == Catch::Approx(100.0));
    // prediction shorter than reference gets penalized
    CHECK(char_bleu("ab", {"abcd"}) < char_bleu("abcd", {"abcd"}));
    // multi-reference clipping takes the per-reference maximum
    CHECK(char_bleu("aab", {"aab", "b"}) == Catch::Approx(100.0));
}

TEST_CASE("accuracies") {
    std::vector<EvalItem> items = {
        {"k1", {"anan"}},
        {"k2", {"malee", "mali"}},
        {"k3", {"nok", "noke", "nock"}},
        {"k4", {"suda"}},
    };
    SECTION("first token") {
        CHECK(first_token_accuracy({"anan", "malee", "nok", "suda"}, items) == 1.0);
        // match against the third reference still counts
        CHECK(first_token_accuracy({"x", "y", "nock", "z"}, items) == 0.25);
        CHECK(first_token_accuracy({"ANAN", "y", "z", "w"}, items) == 0.25);
        CHECK_THROWS_AS(first_token_accuracy({"a"}, items), Error);
    }
    SECTION("any token") {
        CHECK(any_token_accuracy({{"x", "y", "anan"}, {"q"}, {"w"}, {"e"}}, items) == 0.25);
        CHECK(any_token_accuracy({{"x"}, {"y"}, {"z"}, {"w"}}, items) == 0.0);
        CHECK_THROWS_AS(any_token_accuracy({{"a", "b", "c", "d"}, {}, {}, {}}, items), Error);
    }
    SECTION("first hit implies any hit") {
        Rng rng(33);
        for (int it = 0; it < 50; ++it) {
            std::vector<std::string> top1;
            std::vector<std::vector<std::string>> top3;
            for (size_t i = 0; i < items.size(); ++i) {
                std::vector<std::string> preds;
                for (int k = 0; k < 3; ++k) {
                    if (rng.below(2) == 0) {
                        preds.push_back(items[i].references[rng.below(items[i].references.size())]);
                    } else {
                        preds.push_back(oracles::random_string(rng, 5, "abn") + "#");
                    }
                }
                top1.push_back(preds[0]);
                top3.push_back(preds);
            }
            CHECK(first_token_accuracy(top1, items) <= any_token_accuracy(top3, items));
        }
    }
}

TEST_CASE("binary_metrics hand-enumerated case") {
    const ThresholdMetrics m = binary_metrics({0.9, 0.8, 0.3}, {1, 0, 1}, 0.5);
    CHECK(m.precision == Catch::Approx(0.5));
    CHECK(m.recall == Catch::Approx(0.5));
    CHECK(m.accuracy == Catch::Approx(1.0 / 3.0));
    CHECK(m.f1 == Catch::Approx(0.5));
    CHECK(m.auc == Catch::Approx(0.5));
}

TEST_CASE("binary_metrics conventions and errors") {
    // perfectly separated: AUC 1, precision = recall = 1 at a separating threshold
    const ThresholdMetrics sep = binary_metrics({0.9, 0.8, 0.2, 0.1}, {1, 1, 0, 0}, 0.5);
    CHECK(sep.auc == 1.0);
    CHECK(sep.precision == 1.0);
    CHECK(sep.recall == 1.0);
    // all scores identical, balanced labels: tie-corrected AUC 0.5
    const ThresholdMetrics tie = binary_metrics({0.4, 0.4, 0.4, 0.4}, {1, 0, 1, 0}, 0.5);
    CHECK(tie.auc == Catch::Approx(0.5));
    // nothing predicted positive: precision convention 1.0, recall 0
    const ThresholdMetrics none = binary_metrics({0.1, 0.2}, {1, 0}, 0.9);
    CHECK(none.precision == 1.0);
    CHECK(none.recall == 0.0);
    CHECK(none.f1 == Catch::Approx(0.0));
    CHECK_THROWS_AS(binary_metrics({0.1, 0.2}, {1, 1}, 0.5), Error);
}

TEST_CASE("auc invariant under monotone transforms") {
    Rng rng(404);
    for (int it = 0; it < 30; ++it) {
        std::vector<double> scores;
        std::vector<int> labels;
        for (int i = 0; i < 20; ++i) {
            scores.push_back(rng.next_double());
            labels.push_back(static_cast<int>(rng.below(2)));
        }
        labels[0] = 1;
        labels[1] = 0;
        std::vector<double> transformed;
        for (double s : scores) transformed.push_back(std::exp(3.0 * s) + 1.0);
        CHECK(auc_score(scores, labels) == Catch::Approx(auc_score(transformed, labels)));
    }
}

TEST_CASE("eval report serialization") {
    EvalReport r{0.8232, 0.9524, 0.0047, 97.71, 3305};
    const auto j = r.to_json();
    CHECK(j["first_token_accuracy"] == 0.8232);
    CHECK(j["n_items"] == 3305);
    const std::string text = r.to_text();
    CHECK(text.find("cer\t0.0047") != std::string::npos);
    CHECK(text.find("n_items\t3305") != std::string::npos);
}
