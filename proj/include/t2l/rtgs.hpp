#pragma once

// Simplified table-driven RTGS romanizer. Used as a baseline system and to
// compute the RTGS-similarity feature. Names are treated as single words
// (no trigram pronunciation disambiguation, no word segmentation).

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "t2l/common.hpp"
#include "t2l/metrics.hpp"
#include "t2l/rtgs_tables.hpp"

namespace t2l {

enum class FinalMode { forbidden, optional_final, required };

// One syllable: [begin, end) in code points of the input, plus its Latin
// rendering. Deleted signs and spaces are absorbed into adjacent spans so
// the spans tile the whole input.
struct RtgsSpan {
    size_t begin = 0;
    size_t end = 0;
    std::string latin;
};

class RtgsTables {
public:
    struct VowelPattern {
        std::u32string pattern;  // literal code points with U+0043 'C' placeholder
        std::string latin;
        FinalMode mode = FinalMode::forbidden;
    };

    static RtgsTables from_tsv(const Tsv& tsv) {
        const size_t si = tsv.column("section");
        const size_t ki = tsv.column("key");
        const size_t vi = tsv.column("value");
        const size_t mi = tsv.column("mode");
        RtgsTables t;
        for (size_t r = 0; r < tsv.rows.size(); ++r) {
            const size_t line = Tsv::line_of(r);
            const std::string& section = tsv.rows[r][si];
            const auto key = utf8_decode(tsv.rows[r][ki]);
            const std::string& value = tsv.rows[r][vi];
            if (section == "initial" || section == "final") {
                if (key.size() != 1) {
                    throw ParseError("row " + std::to_string(line) + ": consonant key must be one code point");
                }
                auto& map = section == "initial" ? t.initials_ : t.finals_;
                map[key[0]] = value;
            } else if (section == "cluster") {
                if (key.size() != 2) {
                    throw ParseError("row " + std::to_string(line) + ": cluster key must be two code points");
                }
                t.clusters_[std::u32string(key.begin(), key.end())] = value;
            } else if (section == "vowel") {
                VowelPattern p;
                p.pattern.assign(key.begin(), key.end());
                p.latin = value;
                const std::string& mode = tsv.rows[r][mi];
                if (mode == "none") p.mode = FinalMode::forbidden;
                else if (mode == "opt") p.mode = FinalMode::optional_final;
                else if (mode == "req") p.mode = FinalMode::required;
                else throw ParseError("row " + std::to_string(line) + ": bad vowel mode \"" + mode + "\"");
                if (p.latin.empty()) {
                    throw ParseError("row " + std::to_string(line) + ": vowel pattern with empty Latin value");
                }
                if (p.pattern.find(U'C') == std::u32string::npos) {
                    throw ParseError("row " + std::to_string(line) + ": vowel pattern lacks C placeholder");
                }
                t.patterns_.push_back(std::move(p));
            } else if (section == "tone") {
                t.tones_.insert(key.at(0));
            } else if (section == "silencer") {
                t.silencer_ = key.at(0);
            } else if (section == "delete") {
                t.deletable_.insert(key.at(0));
            } else {
                throw ParseError("row " + std::to_string(line) + ": unknown section \"" + section + "\"");
            }
        }
        // longest-first, stable within equal lengths
        std::stable_sort(t.patterns_.begin(), t.patterns_.end(),
                         [](const VowelPattern& a, const VowelPattern& b) {
                             return a.pattern.size() > b.pattern.size();
                         });
        for (size_t i = 1; i < t.patterns_.size(); ++i) {
            if (t.patterns_[i].pattern == t.patterns_[i - 1].pattern &&
                t.patterns_[i].mode == t.patterns_[i - 1].mode) {
                throw ParseError("duplicate vowel pattern");
            }
        }
        t.validate();
        return t;
    }

    static RtgsTables from_file(const std::string& path) { return from_tsv(read_tsv(path)); }

    static const RtgsTables& builtin() {
        static const RtgsTables t = from_tsv(parse_tsv(tables::kRtgsBundleTsv));
        return t;
    }

    void validate() const {
        for (char32_t c = 0x0E01; c <= 0x0E2E; ++c) {
            if (initials_.find(c) == initials_.end()) {
                std::string s;
                utf8_append(s, c);
                throw ConfigError("rtgs tables: consonant \"" + s + "\" missing from initial map");
            }
            if (finals_.find(c) == finals_.end()) {
                std::string s;
                utf8_append(s, c);
                throw ConfigError("rtgs tables: consonant \"" + s + "\" missing from final map");
            }
        }
        if (patterns_.empty()) {
            throw ConfigError("rtgs tables: no vowel patterns");
        }
        if (silencer_ == 0) {
            throw ConfigError("rtgs tables: no silencer mark");
        }
    }

    const std::map<char32_t, std::string>& initials() const { return initials_; }
    const std::map<char32_t, std::string>& finals() const { return finals_; }
    const std::map<std::u32string, std::string>& clusters() const { return clusters_; }
    const std::vector<VowelPattern>& patterns() const { return patterns_; }
    bool is_tone(char32_t c) const { return tones_.count(c) != 0; }
    bool is_deletable(char32_t c) const { return deletable_.count(c) != 0; }
    char32_t silencer() const { return silencer_; }

private:
    std::map<char32_t, std::string> initials_;
    std::map<char32_t, std::string> finals_;
    std::map<std::u32string, std::string> clusters_;
    std::vector<VowelPattern> patterns_;
    std::set<char32_t> tones_;
    std::set<char32_t> deletable_;
    char32_t silencer_ = 0;
};

namespace detail {

inline bool is_plain_consonant(char32_t c) {
    return c >= 0x0E01 && c <= 0x0E2E && c != 0x0E24 && c != 0x0E26;  // ru/lu excluded
}

inline bool is_dependent_sign(char32_t c) {
    // following-position vowel signs and maitaikhu: a consonant carrying
    // one of these starts a syllable
    return (c >= 0x0E30 && c <= 0x0E39) || c == 0x0E47;
}

struct RtgsParser {
    const std::vector<char32_t>& cps;
    const RtgsTables& tables;
    std::vector<std::string>* warnings;
    std::vector<bool> killed;

    RtgsParser(const std::vector<char32_t>& c, const RtgsTables& t, std::vector<std::string>* w)
        : cps(c), tables(t), warnings(w), killed(c.size(), false) {
        apply_silencer();
    }

    void warn(const std::string& msg) const {
        if (warnings) warnings->push_back(msg);
    }

    // thanthakhat kills its carrier consonant, the carrier's dependent
    // signs, and a cluster partner directly before the carrier
    void apply_silencer() {
        for (size_t i = 0; i < cps.size(); ++i) {
            if (cps[i] != tables.silencer()) {
                continue;
            }
            killed[i] = true;
            size_t j = i;
            while (j > 0 && (is_dependent_sign(cps[j - 1]) || tables.is_tone(cps[j - 1]))) {
                killed[--j] = true;
            }
            if (j > 0 && is_plain_consonant(cps[j - 1])) {
                killed[--j] = true;
                if (j > 0 && tables.clusters().count(std::u32string{cps[j - 1], cps[j]}) != 0) {
                    killed[j - 1] = true;
                }
            } else {
                warn("thanthakhat with no carrier consonant");
            }
        }
    }

    bool transparent(size_t i) const { return killed[i] || tables.is_tone(cps[i]); }

    // next non-transparent position in [i, hi), or hi
    size_t next_real(size_t i, size_t hi) const {
        while (i < hi && transparent(i)) ++i;
        return i;
    }

    // matches an onset at pos: cluster pair when allowed, else a single
    // consonant; returns position past the onset and its Latin value
    bool match_onset(size_t pos, size_t hi, bool allow_cluster, size_t& end,
                     std::string& latin) const {
        if (pos >= hi || !is_plain_consonant(cps[pos])) {
            return false;
        }
        if (allow_cluster) {
            const size_t nxt = next_real(pos + 1, hi);
            if (nxt < hi && is_plain_consonant(cps[nxt])) {
                const auto it = tables.clusters().find(std::u32string{cps[pos], cps[nxt]});
                if (it != tables.clusters().end()) {
                    end = nxt + 1;
                    latin = it->second;
                    return true;
                }
            }
        }
        end = pos + 1;
        latin = tables.initials().at(cps[pos]);
        return true;
    }

    // does the consonant at j begin the next syllable rather than close
    // the current one?
    bool starts_next_syllable(size_t j, size_t hi) const {
        const size_t k = next_real(j + 1, hi);
        if (k >= hi) {
            return false;
        }
        const char32_t c = cps[k];
        if (is_dependent_sign(c)) {
            return true;
        }
        // ro han: consonant followed by double ro rua
        if (c == 0x0E23) {
            const size_t k2 = next_real(k + 1, hi);
            if (k2 < hi && cps[k2] == 0x0E23) {
                return true;
            }
        }
        // onset cluster whose second member carries a dependent sign
        if (is_plain_consonant(c) &&
            tables.clusters().count(std::u32string{cps[j], c}) != 0) {
            const size_t k2 = next_real(k + 1, hi);
            if (k2 < hi && is_dependent_sign(cps[k2])) {
                return true;
            }
        }
        return false;
    }

    struct Match {
        size_t end = 0;
        std::string latin;
    };

    // tries one vowel pattern anchored at pos; a cluster onset is preferred
    // but the single-consonant reading is retried when the cluster reading
    // leaves the rest of the pattern unmatched (e.g. double ro han)
    bool match_pattern(const RtgsTables::VowelPattern& p, size_t pos, size_t hi, Match& m) const {
        return try_pattern(p, pos, hi, true, m) || try_pattern(p, pos, hi, false, m);
    }

    bool try_pattern(const RtgsTables::VowelPattern& p, size_t pos, size_t hi, bool allow_cluster,
                     Match& m) const {
        size_t cursor = pos;
        std::string onset;
        for (const char32_t el : p.pattern) {
            cursor = next_real(cursor, hi);
            if (cursor >= hi) {
                return false;
            }
            if (el == U'C') {
                size_t end = 0;
                if (!match_onset(cursor, hi, allow_cluster, end, onset)) {
                    return false;
                }
                cursor = end;
            } else {
                if (cps[cursor] != el) {
                    return false;
                }
                ++cursor;
            }
        }
        std::string final_latin;
        if (p.mode != FinalMode::forbidden) {
            const size_t j = next_real(cursor, hi);
            const bool available = j < hi && is_plain_consonant(cps[j]) && !starts_next_syllable(j, hi);
            if (available) {
                final_latin = tables.finals().at(cps[j]);
                cursor = j + 1;
            } else if (p.mode == FinalMode::required) {
                return false;
            }
        }
        m.end = cursor;
        m.latin = onset + p.latin + final_latin;
        return true;
    }

    struct Unit {
        size_t begin = 0;
        size_t end = 0;
        std::string latin;     // complete syllable when !bare
        bool bare = false;     // bare onset awaiting an inherent vowel
        char32_t first_cp = 0; // for final-consonant lookup when paired
    };

    void flush_bare_run(std::vector<Unit>& run, std::vector<RtgsSpan>& out) const {
        size_t idx = 0;
        while (idx < run.size()) {
            const size_t remaining = run.size() - idx;
            if (remaining == 2) {
                // closed syllable with inherent o
                out.push_back({run[idx].begin, run[idx + 1].end,
                               run[idx].latin + "o" + tables.finals().at(run[idx + 1].first_cp)});
                idx += 2;
            } else {
                // open syllable with inherent a
                out.push_back({run[idx].begin, run[idx].end, run[idx].latin + "a"});
                idx += 1;
            }
        }
        run.clear();
    }

    void parse_word(size_t lo, size_t hi, std::vector<RtgsSpan>& out) const {
        std::vector<Unit> bare_run;
        size_t i = lo;
        while (i < hi) {
            if (killed[i]) {
                ++i;
                continue;
            }
            const char32_t c = cps[i];
            if (tables.is_tone(c)) {
                ++i;
                continue;
            }
            if (tables.is_deletable(c)) {
                std::string s;
                utf8_append(s, c);
                warn("deleted rare sign \"" + s + "\"");
                ++i;
                continue;
            }
            // ru / lu stand alone
            if (c == 0x0E24 || c == 0x0E26) {
                flush_bare_run(bare_run, out);
                out.push_back({i, i + 1, tables.initials().at(c)});
                ++i;
                continue;
            }
            Match m;
            bool matched = false;
            for (const auto& p : tables.patterns()) {
                if (match_pattern(p, i, hi, m)) {
                    matched = true;
                    break;
                }
            }
            if (matched) {
                flush_bare_run(bare_run, out);
                out.push_back({i, m.end, m.latin});
                i = m.end;
                continue;
            }
            if (is_plain_consonant(c)) {
                // in a bare run only silent-ho clusters act as one onset;
                // written clusters belong to syllables with written vowels
                size_t end = 0;
                std::string onset;
                match_onset(i, hi, c == 0x0E2B, end, onset);
                bare_run.push_back({i, end, onset, true, c});
                i = end;
                continue;
            }
            // orphan dependent sign or other Thai-block residue
            std::string s;
            utf8_append(s, c);
            warn("deleted unattached sign \"" + s + "\"");
            ++i;
        }
        flush_bare_run(bare_run, out);
    }
};

}  // namespace detail

// Greedy longest-first syllabification. Every code point lands in exactly
// one span; spans carry their Latin rendering.
inline std::vector<RtgsSpan> syllabify(std::string_view thai, const RtgsTables& tables,
                                       std::vector<std::string>* warnings = nullptr) {
    const std::vector<char32_t> cps = utf8_decode(thai);
    for (size_t i = 0; i < cps.size(); ++i) {
        if (!is_thai(cps[i]) && cps[i] != U' ') {
            std::string s;
            utf8_append(s, cps[i]);
            throw Error("unsupported character \"" + s + "\" at offset " + std::to_string(i));
        }
    }
    detail::RtgsParser parser(cps, tables, warnings);
    std::vector<RtgsSpan> spans;
    size_t i = 0;
    while (i < cps.size()) {
        if (cps[i] == U' ') {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < cps.size() && cps[j] != U' ') ++j;
        parser.parse_word(i, j, spans);
        i = j;
    }
    // stretch spans to tile the whole input (deleted signs and spaces
    // attach to the preceding span, leading ones to the first span)
    if (spans.empty()) {
        if (!cps.empty()) {
            spans.push_back({0, cps.size(), ""});
        }
        return spans;
    }
    spans.front().begin = 0;
    for (size_t k = 1; k < spans.size(); ++k) {
        spans[k].begin = spans[k - 1].end;
    }
    spans.back().end = cps.size();
    return spans;
}

// Full romanization: per-syllable Latin joined with a disambiguating
// hyphen where the juncture would be ambiguous (vowel letter after vowel
// letter, or "ng" before a vowel-initial syllable).
inline std::string romanize_rtgs(std::string_view thai, const RtgsTables& tables,
                                 std::vector<std::string>* warnings = nullptr) {
    const auto spans = syllabify(thai, tables, warnings);
    const auto is_vowel = [](char c) {
        return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
    };
    std::string out;
    for (const auto& span : spans) {
        if (span.latin.empty()) {
            continue;
        }
        if (!out.empty() && is_vowel(span.latin.front())) {
            const bool vowel_tail = is_vowel(out.back());
            const bool ng_tail = out.size() >= 2 && out.compare(out.size() - 2, 2, "ng") == 0;
            if (vowel_tail || ng_tail) {
                out.push_back('-');
            }
        }
        out += span.latin;
    }
    return out;
}

// Levenshtein distance between a Latin variant and the RTGS romanization.
inline size_t rtgs_similarity(std::string_view latin_variant, std::string_view thai,
                              const RtgsTables& tables) {
    return levenshtein(ascii_lower(latin_variant), romanize_rtgs(thai, tables));
}

}  // namespace t2l
