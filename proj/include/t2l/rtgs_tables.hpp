#pragma once

// Built-in simplified RTGS table bundle. Section-tagged TSV rows, same
// format accepted by RtgsTables::from_tsv.
//
// Sections:
//   initial  - onset consonant -> Latin
//   final    - coda consonant  -> Latin
//   cluster  - two-character onset cluster (incl. silent-leading ho/o) -> Latin
//   vowel    - pattern with C placeholder -> Latin, mode in {none,opt,req}
//              (whether a final consonant is forbidden, optional or required)
//   tone     - tone marks, deleted wherever they appear
//   silencer - thanthakhat, kills its carrier (and a cluster partner)
//   delete   - rare signs dropped with a warning
//
// Unwritten inherent vowels are handled in code: a bare consonant pair
// forms a closed syllable with "o", a leftover single consonant an open
// syllable with "a".

namespace t2l::tables {

inline constexpr const char* kRtgsBundleTsv =
    "section\tkey\tvalue\tmode\n"
    // -------- initial consonants (U+0E01 - U+0E2E)
    "initial\tก\tk\t\n"
    "initial\tข\tkh\t\n"
    "initial\tฃ\tkh\t\n"
    "initial\tค\tkh\t\n"
    "initial\tฅ\tkh\t\n"
    "initial\tฆ\tkh\t\n"
    "initial\tง\tng\t\n"
    "initial\tจ\tch\t\n"
    "initial\tฉ\tch\t\n"
    "initial\tช\tch\t\n"
    "initial\tซ\ts\t\n"
    "initial\tฌ\tch\t\n"
    "initial\tญ\ty\t\n"
    "initial\tฎ\td\t\n"
    "initial\tฏ\tt\t\n"
    "initial\tฐ\tth\t\n"
    "initial\tฑ\tth\t\n"
    "initial\tฒ\tth\t\n"
    "initial\tณ\tn\t\n"
    "initial\tด\td\t\n"
    "initial\tต\tt\t\n"
    "initial\tถ\tth\t\n"
    "initial\tท\tth\t\n"
    "initial\tธ\tth\t\n"
    "initial\tน\tn\t\n"
    "initial\tบ\tb\t\n"
    "initial\tป\tp\t\n"
    "initial\tผ\tph\t\n"
    "initial\tฝ\tf\t\n"
    "initial\tพ\tph\t\n"
    "initial\tฟ\tf\t\n"
    "initial\tภ\tph\t\n"
    "initial\tม\tm\t\n"
    "initial\tย\ty\t\n"
    "initial\tร\tr\t\n"
    "initial\tฤ\true\t\n"
    "initial\tล\tl\t\n"
    "initial\tฦ\tlue\t\n"
    "initial\tว\tw\t\n"
    "initial\tศ\ts\t\n"
    "initial\tษ\ts\t\n"
    "initial\tส\ts\t\n"
    "initial\tห\th\t\n"
    "initial\tฬ\tl\t\n"
    "initial\tอ\t\t\n"
    "initial\tฮ\th\t\n"
    // -------- final consonants
    "final\tก\tk\t\n"
    "final\tข\tk\t\n"
    "final\tฃ\tk\t\n"
    "final\tค\tk\t\n"
    "final\tฅ\tk\t\n"
    "final\tฆ\tk\t\n"
    "final\tง\tng\t\n"
    "final\tจ\tt\t\n"
    "final\tฉ\tt\t\n"
    "final\tช\tt\t\n"
    "final\tซ\tt\t\n"
    "final\tฌ\tt\t\n"
    "final\tญ\tn\t\n"
    "final\tฎ\tt\t\n"
    "final\tฏ\tt\t\n"
    "final\tฐ\tt\t\n"
    "final\tฑ\tt\t\n"
    "final\tฒ\tt\t\n"
    "final\tณ\tn\t\n"
    "final\tด\tt\t\n"
    "final\tต\tt\t\n"
    "final\tถ\tt\t\n"
    "final\tท\tt\t\n"
    "final\tธ\tt\t\n"
    "final\tน\tn\t\n"
    "final\tบ\tp\t\n"
    "final\tป\tp\t\n"
    "final\tผ\tp\t\n"
    "final\tฝ\tp\t\n"
    "final\tพ\tp\t\n"
    "final\tฟ\tp\t\n"
    "final\tภ\tp\t\n"
    "final\tม\tm\t\n"
    "final\tย\ti\t\n"
    "final\tร\tn\t\n"
    "final\tฤ\t\t\n"
    "final\tล\tn\t\n"
    "final\tฦ\t\t\n"
    "final\tว\to\t\n"
    "final\tศ\tt\t\n"
    "final\tษ\tt\t\n"
    "final\tส\tt\t\n"
    "final\tห\t\t\n"
    "final\tฬ\tn\t\n"
    "final\tอ\t\t\n"
    "final\tฮ\t\t\n"
    // -------- onset clusters
    "cluster\tกร\tkr\t\n"
    "cluster\tกล\tkl\t\n"
    "cluster\tกว\tkw\t\n"
    "cluster\tขร\tkhr\t\n"
    "cluster\tขล\tkhl\t\n"
    "cluster\tขว\tkhw\t\n"
    "cluster\tคร\tkhr\t\n"
    "cluster\tคล\tkhl\t\n"
    "cluster\tคว\tkhw\t\n"
    "cluster\tตร\ttr\t\n"
    "cluster\tทร\ts\t\n"
    "cluster\tปร\tpr\t\n"
    "cluster\tปล\tpl\t\n"
    "cluster\tผล\tphl\t\n"
    "cluster\tพร\tphr\t\n"
    "cluster\tพล\tphl\t\n"
    // silent leading ho hip / o ang
    "cluster\tหง\tng\t\n"
    "cluster\tหญ\ty\t\n"
    "cluster\tหน\tn\t\n"
    "cluster\tหม\tm\t\n"
    "cluster\tหย\ty\t\n"
    "cluster\tหร\tr\t\n"
    "cluster\tหล\tl\t\n"
    "cluster\tหว\tw\t\n"
    // -------- vowel patterns (C = onset placeholder)
    "vowel\tเCียว\tiao\tnone\n"
    "vowel\tเCือ\tuea\topt\n"
    "vowel\tเCีย\tia\topt\n"
    "vowel\tเCาะ\to\tnone\n"
    "vowel\tCัวะ\tua\tnone\n"
    "vowel\tเCิ\toe\treq\n"
    "vowel\tเCอ\toe\topt\n"
    "vowel\tเCา\tao\tnone\n"
    "vowel\tเCะ\te\tnone\n"
    "vowel\tเC็\te\treq\n"
    "vowel\tเCย\toei\tnone\n"
    "vowel\tแCะ\tae\tnone\n"
    "vowel\tแC็\tae\treq\n"
    "vowel\tโCะ\to\tnone\n"
    "vowel\tไCย\tai\tnone\n"
    "vowel\tCรร\ta\treq\n"
    "vowel\tCรร\tan\tnone\n"
    "vowel\tCัว\tua\tnone\n"
    "vowel\tCือ\tue\tnone\n"
    "vowel\tแC\tae\topt\n"
    "vowel\tโC\to\topt\n"
    "vowel\tใC\tai\tnone\n"
    "vowel\tไC\tai\tnone\n"
    "vowel\tCว\tua\treq\n"
    "vowel\tCำ\tam\tnone\n"
    "vowel\tCะ\ta\tnone\n"
    "vowel\tCั\ta\treq\n"
    "vowel\tCา\ta\topt\n"
    "vowel\tCิ\ti\topt\n"
    "vowel\tCี\ti\topt\n"
    "vowel\tCึ\tue\topt\n"
    "vowel\tCื\tue\treq\n"
    "vowel\tCุ\tu\topt\n"
    "vowel\tCู\tu\topt\n"
    "vowel\tCอ\to\topt\n"
    // -------- tone marks
    "tone\t่\t\t\n"
    "tone\t้\t\t\n"
    "tone\t๊\t\t\n"
    "tone\t๋\t\t\n"
    // -------- silencer
    "silencer\t์\t\t\n"
    // -------- rare signs deleted with a warning
    "delete\tฯ\t\t\n"   // paiyannoi
    "delete\tฺ\t\t\n"   // phinthu
    "delete\tๅ\t\t\n"   // lakkhangyao
    "delete\tๆ\t\t\n"   // maiyamok
    "delete\tํ\t\t\n"   // nikhahit
    "delete\t๎\t\t\n"   // yamakkan
    "delete\t๏\t\t\n"   // fongman
    "delete\t฿\t\t\n"   // baht sign
    "delete\t๐\t\t\n"
    "delete\t๑\t\t\n"
    "delete\t๒\t\t\n"
    "delete\t๓\t\t\n"
    "delete\t๔\t\t\n"
    "delete\t๕\t\t\n"
    "delete\t๖\t\t\n"
    "delete\t๗\t\t\n"
    "delete\t๘\t\t\n"
    "delete\t๙\t\t\n"
    "delete\t๚\t\t\n"   // angkhankhu
    "delete\t๛\t\t\n";  // khomut

}  // namespace t2l::tables
