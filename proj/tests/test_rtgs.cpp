#include <catch2/catch_amalgamated.hpp>

#include "t2l/rtgs.hpp"

using namespace t2l;

namespace {

std::string strip_tones(std::string_view s) {
    std::string out;
    for (char32_t c : utf8_decode(s)) {
        if (c < 0x0E48 || c > 0x0E4B) {
            utf8_append(out, c);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("builtin rtgs tables validate") {
    const RtgsTables& t = RtgsTables::builtin();
    CHECK(t.initials().size() == 46);
    CHECK(t.finals().size() == 46);
    CHECK(t.patterns().size() >= 30);
    // longest-first ordering
    for (size_t i = 1; i < t.patterns().size(); ++i) {
        CHECK(t.patterns()[i - 1].pattern.size() >= t.patterns()[i].pattern.size());
    }
}

TEST_CASE("syllabify spans") {
    const RtgsTables& t = RtgsTables::builtin();
    CHECK(syllabify("", t).empty());

    const auto one = syllabify("มา", t);
    REQUIRE(one.size() == 1);
    CHECK(one[0].begin == 0);
    CHECK(one[0].end == 2);

    const auto two = syllabify("มานี", t);
    REQUIRE(two.size() == 2);
    CHECK(two[0].end == 2);
    CHECK(two[1].begin == 2);
    CHECK(two[1].end == 4);
    for (const auto& span : two) {
        CHECK(!span.latin.empty());
    }
}

TEST_CASE("romanize basic names") {
    const RtgsTables& t = RtgsTables::builtin();
    CHECK(romanize_rtgs("มา", t) == "ma");
    CHECK(romanize_rtgs("มานี", t) == "mani");
    CHECK(romanize_rtgs("แก", t) == "kae");  // ae vowel class
    CHECK(romanize_rtgs("สมชาย", t) == "somchai");
    CHECK(romanize_rtgs("สุดา", t) == "suda");
    CHECK(romanize_rtgs("วิชัย", t) == "wichai");
    CHECK(romanize_rtgs("อานันท์", t) == "anan");
    CHECK(romanize_rtgs("ไทย", t) == "thai");
    CHECK(romanize_rtgs("เด็ก", t) == "dek");
    CHECK(romanize_rtgs("เกิด", t) == "koet");
    CHECK(romanize_rtgs("กรรม", t) == "kam");
    CHECK(romanize_rtgs("สรรค์", t) == "san");
    CHECK(romanize_rtgs("จันทร์", t) == "chan");
    CHECK(romanize_rtgs("ประยุทธ์", t) == "prayut");
    CHECK(romanize_rtgs("หนึ่ง", t) == "nueng");
    CHECK(romanize_rtgs("เมือง", t) == "mueang");
    CHECK(romanize_rtgs("กว่า", t) == "kwa");
    CHECK(romanize_rtgs("ตัว", t) == "tua");
    CHECK(romanize_rtgs("สวน", t) == "suan");
    CHECK(romanize_rtgs("น้ำ", t) == "nam");
    CHECK(romanize_rtgs("ใจ", t) == "chai");
    CHECK(romanize_rtgs("เลย", t) == "loei");
    CHECK(romanize_rtgs("แมว", t) == "maeo");
    CHECK(romanize_rtgs("นคร", t) == "nakhon");
    CHECK(romanize_rtgs("มนตรี", t) == "montri");
}

TEST_CASE("romanize hyphen disambiguation") {
    const RtgsTables& t = RtgsTables::builtin();
    CHECK(romanize_rtgs("สะอาด", t) == "sa-at");      // vowel after vowel
    CHECK(romanize_rtgs("บางออน", t) == "bang-on");  // ng before vowel
}

TEST_CASE("romanize rejects non-thai input") {
    const RtgsTables& t = RtgsTables::builtin();
    CHECK_THROWS_AS(romanize_rtgs("ké", t), Error);
    CHECK_THROWS_AS(romanize_rtgs("abc", t), Error);
}

TEST_CASE("rare signs are deleted with a warning") {
    const RtgsTables& t = RtgsTables::builtin();
    std::vector<std::string> warnings;
    CHECK(romanize_rtgs("มาๆ", t, &warnings) == "ma");
    CHECK(!warnings.empty());
}

TEST_CASE("romanize output alphabet is [a-z-]") {
    const RtgsTables& t = RtgsTables::builtin();
    const char* names[] = {"มานี",  "สมชาย",   "อานันท์", "สุดา",   "วิชัย",  "ประยุทธ์",
                           "หนึ่ง",  "เมือง",    "สะอาด",  "กรุงเทพ", "พรทิพย์", "ศักดิ์",
                           "เกียรติ", "สุนทร",    "บุญมี",   "คงคา",   "แสงดาว", "ทราย",
                           "ฤดี",    "เสาวลักษณ์"};
    for (const char* name : names) {
        const std::string r = romanize_rtgs(name, t);
        CAPTURE(name, r);
        CHECK(!r.empty());
        for (char c : r) {
            const bool ok = (c >= 'a' && c <= 'z') || c == '-';
            CHECK(ok);
        }
    }
}

TEST_CASE("tone mark handling is idempotent") {
    const RtgsTables& t = RtgsTables::builtin();
    const char* names[] = {"กว่า", "น้ำ", "หนึ่ง", "แม่", "ป้อม", "ชูใจ", "ที่", "ไม้"};
    for (const char* name : names) {
        CAPTURE(name);
        CHECK(romanize_rtgs(name, t) == romanize_rtgs(strip_tones(name), t));
    }
}

TEST_CASE("romanize is deterministic") {
    const RtgsTables& t = RtgsTables::builtin();
    for (int i = 0; i < 3; ++i) {
        CHECK(romanize_rtgs("เสาวลักษณ์", t) == romanize_rtgs("เสาวลักษณ์", t));
    }
}

TEST_CASE("rtgs_similarity") {
    const RtgsTables& t = RtgsTables::builtin();
    CHECK(rtgs_similarity("ma", "มา", t) == 0);
    CHECK(rtgs_similarity("MA", "มา", t) == 0);  // variant lowercased
    CHECK(rtgs_similarity("mar", "มา", t) == 1);
    CHECK(rtgs_similarity("somchai", "สมชาย", t) == 0);
    CHECK(rtgs_similarity("somchay", "สมชาย", t) == 1);
}
