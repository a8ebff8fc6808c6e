#pragma once

// Deterministic synthetic fixtures shared by the unit and acceptance
// suites.

#include <string>
#include <utility>
#include <vector>

#include "t2l/common.hpp"
#include "t2l/data.hpp"
#include "t2l/forest.hpp"

namespace fixtures {

struct LabeledSet {
    t2l::FeatureMatrix X;
    std::vector<int> y;
    std::vector<double> w;
};

// 200-point separable set over the nine candidate features: positives and
// negatives are fully separated by phonetic_distance (feature 1) with a
// wide margin, the rest carry correlated signal plus noise.
inline LabeledSet separable_200(uint64_t seed = 20240915) {
    t2l::Rng rng(seed);
    LabeledSet set;
    for (int i = 0; i < 200; ++i) {
        const int label = i % 2;
        std::vector<double> x(9);
        if (label == 1) {
            x[0] = 50.0 + rng.next_double() * 100.0;   // cnt_th
            x[1] = 0.05 + rng.next_double() * 0.35;    // phonetic_distance
            x[2] = 30.0 + rng.next_double() * 80.0;    // cnt_latin
            x[3] = rng.below(3);                       // rtgs_similarity
            x[4] = 5.0 + rng.next_double() * 30.0;     // collocations3
            x[5] = 5.0 + rng.next_double() * 30.0;     // collocations2
            x[6] = 5.0 + rng.next_double() * 30.0;     // collocations
            x[7] = rng.next_double() < 0.8 ? 1.0 : 0.0;
            x[8] = rng.next_double() < 0.5 ? 1.0 : 0.0;
        } else {
            x[0] = rng.next_double() * 30.0;
            x[1] = 0.65 + rng.next_double() * 0.8;
            x[2] = rng.next_double() * 20.0;
            x[3] = 3.0 + rng.below(8);
            x[4] = rng.next_double() * 4.0;
            x[5] = rng.next_double() * 4.0;
            x[6] = rng.next_double() * 4.0;
            x[7] = rng.next_double() < 0.2 ? 1.0 : 0.0;
            x[8] = rng.next_double() < 0.5 ? 1.0 : 0.0;
        }
        set.X.push_back(std::move(x));
        set.y.push_back(label);
        set.w.push_back(1.0);
    }
    return set;
}

// Overlapping variant used for threshold sweeps: same structure but the
// phonetic_distance ranges overlap so recall actually degrades with the
// threshold.
inline LabeledSet overlapping_300(uint64_t seed = 7151) {
    t2l::Rng rng(seed);
    LabeledSet set;
    for (int i = 0; i < 300; ++i) {
        const int label = i % 2;
        std::vector<double> x(9);
        const double shift = label == 1 ? 0.0 : 0.45;
        x[0] = (label == 1 ? 40.0 : 5.0) + rng.next_double() * 60.0;
        x[1] = shift + rng.next_double() * 0.9;
        x[2] = (label == 1 ? 25.0 : 2.0) + rng.next_double() * 50.0;
        x[3] = static_cast<double>(rng.below(10)) + (label == 1 ? 0.0 : 2.0);
        x[4] = rng.next_double() * (label == 1 ? 30.0 : 12.0);
        x[5] = rng.next_double() * (label == 1 ? 30.0 : 12.0);
        x[6] = rng.next_double() * (label == 1 ? 30.0 : 12.0);
        x[7] = rng.next_double() < (label == 1 ? 0.7 : 0.35) ? 1.0 : 0.0;
        x[8] = rng.next_double() < 0.5 ? 1.0 : 0.0;
        set.X.push_back(std::move(x));
        set.y.push_back(label);
        set.w.push_back(1.0);
    }
    return set;
}

// Thai syllable inventory with deterministic romanizations used by the
// toy transliteration fixtures. Each syllable has a single Latin reading,
// so a memorizing model can reach zero error.
inline const std::vector<std::pair<std::string, std::string>>& syllable_inventory() {
    static const std::vector<std::pair<std::string, std::string>> inv = {
        {"มา", "ma"},   {"นี", "ni"},   {"กา", "ka"},  {"ดา", "da"},  {"สุ", "su"},
        {"วิ", "wi"},   {"ชัย", "chai"}, {"สม", "som"}, {"พร", "phon"}, {"บุญ", "bun"},
        {"ทอง", "thong"}, {"แก้ว", "kaeo"}, {"ใจ", "chai"}, {"รัก", "rak"}, {"เพ็ญ", "phen"},
        {"นง", "nong"}, {"ศรี", "si"},  {"ธน", "thana"}, {"กมล", "kamon"}, {"จิต", "chit"},
    };
    return inv;
}

// 100 synthetic Thai-Latin pairs composed from the syllable inventory.
inline std::vector<t2l::NamePair> toy_pairs(uint64_t seed = 424243) {
    const auto& inv = syllable_inventory();
    t2l::Rng rng(seed);
    std::vector<t2l::NamePair> pairs;
    std::set<std::string> seen;
    while (pairs.size() < 100) {
        const size_t n_syll = 2 + rng.below(2);  // 2-3 syllables
        std::string thai, latin;
        for (size_t s = 0; s < n_syll; ++s) {
            const auto& [th, la] = inv[rng.below(inv.size())];
            thai += th;
            latin += la;
        }
        if (!seen.insert(thai).second) {
            continue;  // keep Thai keys unique so the mapping is a function
        }
        pairs.push_back(t2l::NamePair{thai, latin});
    }
    return pairs;
}

}  // namespace fixtures
