#pragma once

// Built-in articulatory feature table and toy grapheme-to-phoneme tables.
// All three are stored in the same TSV format the file loaders accept, so
// the built-ins and user-supplied files go through identical parsing.

namespace t2l::tables {

// Columns: segment + 22 articulatory features valued +, - or 0.
inline constexpr const char* kFeatureTableTsv =
    "segment\tsyllabic\tsonorant\tconsonantal\tcontinuant\tdelayed_release\tlateral\tnasal\t"
    "strident\tvoice\tspread_glottis\tconstricted_glottis\tanterior\tcoronal\tdistributed\t"
    "labial\thigh\tlow\tback\tround\ttense\tlong\tdorsal\n"
    // plosives
    "p\t-\t-\t+\t-\t-\t-\t-\t-\t-\t-\t-\t+\t-\t-\t+\t-\t-\t-\t-\t0\t-\t-\n"
    "b\t-\t-\t+\t-\t-\t-\t-\t-\t+\t-\t-\t+\t-\t-\t+\t-\t-\t-\t-\t0\t-\t-\n"
    "t\t-\t-\t+\t-\t-\t-\t-\t-\t-\t-\t-\t+\t+\t-\t-\t-\t-\t-\t-\t0\t-\t-\n"
    "d\t-\t-\t+\t-\t-\t-\t-\t-\t+\t-\t-\t+\t+\t-\t-\t-\t-\t-\t-\t0\t-\t-\n"
    "k\t-\t-\t+\t-\t-\t-\t-\t-\t-\t-\t-\t-\t-\t-\t-\t+\t-\t+\t-\t0\t-\t+\n"
    "g\t-\t-\t+\t-\t-\t-\t-\t-\t+\t-\t-\t-\t-\t-\t-\t+\t-\t+\t-\t0\t-\t+\n"
    "ʔ\t-\t-\t+\t-\t-\t-\t-\t-\t-\t-\t+\t-\t-\t-\t-\t-\t-\t-\t-\t0\t-\t-\n"
    // aspirated plosives
    "pʰ\t-\t-\t+\t-\t-\t-\t-\t-\t-\t+\t-\t+\t-\t-\t+\t-\t-\t-\t-\t0\t-\t-\n"
    "tʰ\t-\t-\t+\t-\t-\t-\t-\t-\t-\t+\t-\t+\t+\t-\t-\t-\t-\t-\t-\t0\t-\t-\n"
    "kʰ\t-\t-\t+\t-\t-\t-\t-\t-\t-\t+\t-\t-\t-\t-\t-\t+\t-\t+\t-\t0\t-\t+\n"
    // affricates
    "tɕ\t-\t-\t+\t-\t+\t-\t-\t+\t-\t-\t-\t-\t+\t+\t-\t+\t-\t-\t-\t0\t-\t+\n"
    "tɕʰ\t-\t-\t+\t-\t+\t-\t-\t+\t-\t+\t-\t-\t+\t+\t-\t+\t-\t-\t-\t0\t-\t+\n"
    "tʃ\t-\t-\t+\t-\t+\t-\t-\t+\t-\t-\t-\t-\t+\t+\t-\t-\t-\t-\t-\t0\t-\t-\n"
    "dʒ\t-\t-\t+\t-\t+\t-\t-\t+\t+\t-\t-\t-\t+\t+\t-\t-\t-\t-\t-\t0\t-\t-\n"
    // fricatives
    "f\t-\t-\t+\t+\t-\t-\t-\t+\t-\t-\t-\t+\t-\t-\t+\t-\t-\t-\t-\t0\t-\t-\n"
    "v\t-\t-\t+\t+\t-\t-\t-\t+\t+\t-\t-\t+\t-\t-\t+\t-\t-\t-\t-\t0\t-\t-\n"
    "θ\t-\t-\t+\t+\t-\t-\t-\t-\t-\t-\t-\t+\t+\t+\t-\t-\t-\t-\t-\t0\t-\t-\n"
    "ð\t-\t-\t+\t+\t-\t-\t-\t-\t+\t-\t-\t+\t+\t+\t-\t-\t-\t-\t-\t0\t-\t-\n"
    "s\t-\t-\t+\t+\t-\t-\t-\t+\t-\t-\t-\t+\t+\t-\t-\t-\t-\t-\t-\t0\t-\t-\n"
    "z\t-\t-\t+\t+\t-\t-\t-\t+\t+\t-\t-\t+\t+\t-\t-\t-\t-\t-\t-\t0\t-\t-\n"
    "ʃ\t-\t-\t+\t+\t-\t-\t-\t+\t-\t-\t-\t-\t+\t+\t-\t-\t-\t-\t-\t0\t-\t-\n"
    "ʒ\t-\t-\t+\t+\t-\t-\t-\t+\t+\t-\t-\t-\t+\t+\t-\t-\t-\t-\t-\t0\t-\t-\n"
    "h\t-\t-\t-\t+\t-\t-\t-\t-\t-\t+\t-\t-\t-\t-\t-\t-\t-\t-\t-\t0\t-\t-\n"
    // nasals
    "m\t-\t+\t+\t-\t-\t-\t+\t-\t+\t-\t-\t+\t-\t-\t+\t-\t-\t-\t-\t0\t-\t-\n"
    "n\t-\t+\t+\t-\t-\t-\t+\t-\t+\t-\t-\t+\t+\t-\t-\t-\t-\t-\t-\t0\t-\t-\n"
    "ŋ\t-\t+\t+\t-\t-\t-\t+\t-\t+\t-\t-\t-\t-\t-\t-\t+\t-\t+\t-\t0\t-\t+\n"
    // liquids
    "l\t-\t+\t+\t+\t-\t+\t-\t-\t+\t-\t-\t+\t+\t-\t-\t-\t-\t-\t-\t0\t-\t-\n"
    "r\t-\t+\t+\t+\t-\t-\t-\t-\t+\t-\t-\t+\t+\t-\t-\t-\t-\t-\t-\t0\t-\t-\n"
    // glides
    "w\t-\t+\t-\t+\t-\t-\t-\t-\t+\t-\t-\t-\t-\t-\t+\t+\t-\t+\t+\t0\t-\t+\n"
    "j\t-\t+\t-\t+\t-\t-\t-\t-\t+\t-\t-\t-\t-\t-\t-\t+\t-\t-\t-\t0\t-\t+\n"
    // front vowels
    "i\t+\t+\t-\t+\t-\t-\t-\t-\t+\t-\t-\t0\t-\t0\t-\t+\t-\t-\t-\t+\t-\t+\n"
    "iː\t+\t+\t-\t+\t-\t-\t-\t-\t+\t-\t-\t0\t-\t0\t-\t+\t-\t-\t-\t+\t+\t+\n"
    "ɪ\t+\t+\t-\t+\t-\t-\t-\t-\t+\t-\t-\t0\t-\t0\t-\t+\t-\t-\t-\t-\t-\t+\n"
    "e\t+\t+\t-\t+\t-\t-\t-\t-\t+\t-\t-\t0\t-\t0\t-\t-\t-\t-\t-\t+\t-\t+\n"
    "eː\t+\t+\t-\t+\t-\t-\t-\t-\t+\t-\t-\t0\t-\t0\t-\t-\t-\t-\t-\t+\t+\t+\n"
    "ɛ\t+\t+\t-\t+\t-\t-\t-\t-\t+\t-\t-\t0\t-\t0\t-\t-\t-\t-\t-\t-\t-\t+\n"
    "ɛː\t+\t+\t-\t+\t-\t-\t-\t-\t+\t-\t-\t0\t-\t0\t-\t-\t-\t-\t-\t-\t+\t+\n"
    "æ\t+\t+\t-\t+\t-\t-\t-\t-\t+\t-\t-\t0\t-\t0\t-\t-\t+\t-\t-\t-\t-\t+\n"
    // central/low vowels
    "a\t+\t+\t-\t+\t-\t-\t-\t-\t+\t-\t-\t0\t-\t0\t-\t-\t+\t-\t-\t0\t-\t+\n"
    "aː\t+\t+\t-\t+\t-\t-\t-\t-\t+\t-\t-\t0\t-\t0\t-\t-\t+\t-\t-\t0\t+\t+\n"
    "ɑː\t+\t+\t-\t+\t-\t-\t-\t-\t+\t-\t-\t0\t-\t0\t-\t-\t+\t+\t-\t0\t+\t+\n"
    "ɒ\t+\t+\t-\t+\t-\t-\t-\t-\t+\t-\t-\t0\t-\t0\t+\t-\t+\t+\t+\t0\t-\t+\n"
    "ʌ\t+\t+\t-\t+\t-\t-\t-\t-\t+\t-\t-\t0\t-\t0\t-\t-\t-\t+\t-\t-\t-\t+\n"
    "ə\t+\t+\t-\t+\t-\t-\t-\t-\t+\t-\t-\t0\t-\t0\t-\t-\t-\t0\t-\t-\t-\t+\n"
    "əː\t+\t+\t-\t+\t-\t-\t-\t-\t+\t-\t-\t0\t-\t0\t-\t-\t-\t0\t-\t-\t+\t+\n"
    // back vowels
    "ɯ\t+\t+\t-\t+\t-\t-\t-\t-\t+\t-\t-\t0\t-\t0\t-\t+\t-\t+\t-\t+\t-\t+\n"
    "ɯː\t+\t+\t-\t+\t-\t-\t-\t-\t+\t-\t-\t0\t-\t0\t-\t+\t-\t+\t-\t+\t+\t+\n"
    "u\t+\t+\t-\t+\t-\t-\t-\t-\t+\t-\t-\t0\t-\t0\t+\t+\t-\t+\t+\t+\t-\t+\n"
    "uː\t+\t+\t-\t+\t-\t-\t-\t-\t+\t-\t-\t0\t-\t0\t+\t+\t-\t+\t+\t+\t+\t+\n"
    "ʊ\t+\t+\t-\t+\t-\t-\t-\t-\t+\t-\t-\t0\t-\t0\t+\t+\t-\t+\t+\t-\t-\t+\n"
    "o\t+\t+\t-\t+\t-\t-\t-\t-\t+\t-\t-\t0\t-\t0\t+\t-\t-\t+\t+\t+\t-\t+\n"
    "oː\t+\t+\t-\t+\t-\t-\t-\t-\t+\t-\t-\t0\t-\t0\t+\t-\t-\t+\t+\t+\t+\t+\n"
    "ɔ\t+\t+\t-\t+\t-\t-\t-\t-\t+\t-\t-\t0\t-\t0\t+\t-\t-\t+\t+\t-\t-\t+\n"
    "ɔː\t+\t+\t-\t+\t-\t-\t-\t-\t+\t-\t-\t0\t-\t0\t+\t-\t-\t+\t+\t-\t+\t+\n";

// Toy Thai pronunciation table: one row per character or digraph, IPA
// segments space-separated (empty = silent). Onset consonant readings;
// leading vowels are transcribed in spelling order. This is a deterministic
// desk-scale stand-in for a real G2P model, not a pronunciation authority.
inline constexpr const char* kThaiG2pTsv =
    "grapheme\tipa\n"
    // consonants (U+0E01 - U+0E2E)
    "ก\tk\n"            // ko kai
    "ข\tkʰ\n"      // kho khai
    "ฃ\tkʰ\n"      // kho khuat
    "ค\tkʰ\n"      // kho khwai
    "ฅ\tkʰ\n"      // kho khon
    "ฆ\tkʰ\n"      // kho rakhang
    "ง\tŋ\n"       // ngo ngu
    "จ\ttɕ\n"      // cho chan
    "ฉ\ttɕʰ\n"  // cho ching
    "ช\ttɕʰ\n"  // cho chang
    "ซ\ts\n"            // so so
    "ฌ\ttɕʰ\n"  // cho choe
    "ญ\tj\n"            // yo ying
    "ฎ\td\n"            // do chada
    "ฏ\tt\n"            // to patak
    "ฐ\ttʰ\n"      // tho than
    "ฑ\ttʰ\n"      // tho montho
    "ฒ\ttʰ\n"      // tho phuthao
    "ณ\tn\n"            // no nen
    "ด\td\n"            // do dek
    "ต\tt\n"            // to tao
    "ถ\ttʰ\n"      // tho thung
    "ท\ttʰ\n"      // tho thahan
    "ธ\ttʰ\n"      // tho thong
    "น\tn\n"            // no nu
    "บ\tb\n"            // bo baimai
    "ป\tp\n"            // po pla
    "ผ\tpʰ\n"      // pho phung
    "ฝ\tf\n"            // fo fa
    "พ\tpʰ\n"      // pho phan
    "ฟ\tf\n"            // fo fan
    "ภ\tpʰ\n"      // pho samphao
    "ม\tm\n"            // mo ma
    "ย\tj\n"            // yo yak
    "ร\tr\n"            // ro rua
    "ฤ\tr ɯ\n"     // ru
    "ล\tl\n"            // lo ling
    "ฦ\tl ɯ\n"     // lu
    "ว\tw\n"            // wo waen
    "ศ\ts\n"            // so sala
    "ษ\ts\n"            // so ruesi
    "ส\ts\n"            // so suea
    "ห\th\n"            // ho hip
    "ฬ\tl\n"            // lo chula
    "อ\tʔ\n"       // o ang
    "ฮ\th\n"            // ho nokhuk
    // silent-h clusters
    "หง\tŋ\n"
    "หญ\tj\n"
    "หน\tn\n"
    "หม\tm\n"
    "หย\tj\n"
    "หร\tr\n"
    "หล\tl\n"
    "หว\tw\n"
    "อย\tj\n"      // silent o ang before yo yak
    "ทร\ts\n"      // tho+ro cluster read as s
    // vowels and vowel signs
    "ะ\ta\n"            // sara a
    "ั\ta\n"            // mai han-akat
    "า\taː\n"      // sara aa
    "ำ\ta m\n"          // sara am
    "ิ\ti\n"            // sara i
    "ี\tiː\n"      // sara ii
    "ึ\tɯ\n"       // sara ue
    "ื\tɯː\n" // sara uee
    "ุ\tu\n"            // sara u
    "ู\tuː\n"      // sara uu
    "เ\teː\n"      // sara e
    "แ\tɛː\n" // sara ae
    "โ\toː\n"      // sara o
    "ใ\ta j\n"          // sara ai maimuan
    "ไ\ta j\n"          // sara ai maimalai
    // tone marks and signs (silent in this toy transcription)
    "็\t\n"             // maitaikhu
    "่\t\n"             // mai ek
    "้\t\n"             // mai tho
    "๊\t\n"             // mai tri
    "๋\t\n"             // mai chattawa
    "์\t\n"             // thanthakhat
    " \t\n";

// Toy English spelling-to-sound table, loosely British readings.
inline constexpr const char* kEnglishG2pTsv =
    "grapheme\tipa\n"
    // digraphs
    "ch\ttʃ\n"
    "sh\tʃ\n"
    "th\tθ\n"
    "ph\tf\n"
    "ng\tŋ\n"
    "kh\tkʰ\n"
    "gh\tg\n"
    "ck\tk\n"
    "qu\tk w\n"
    "ee\tiː\n"
    "ea\tiː\n"
    "oo\tuː\n"
    "ou\ta ʊ\n"
    "ow\ta ʊ\n"
    "au\tɔː\n"
    "aw\tɔː\n"
    "ai\ta ɪ\n"
    "ay\te ɪ\n"
    "ei\te ɪ\n"
    "ey\te ɪ\n"
    "oi\tɔ ɪ\n"
    "oy\tɔ ɪ\n"
    "ae\tɛː\n"
    "oe\təː\n"
    "ue\tɯ\n"
    "ia\ti a\n"
    "ua\tu a\n"
    "ar\tɑː\n"
    "er\təː\n"
    "ir\təː\n"
    "or\tɔː\n"
    "ur\təː\n"
    // single letters
    "a\tɑː\n"
    "b\tb\n"
    "c\tk\n"
    "d\td\n"
    "e\te\n"
    "f\tf\n"
    "g\tg\n"
    "h\th\n"
    "i\tɪ\n"
    "j\tdʒ\n"
    "k\tk\n"
    "l\tl\n"
    "m\tm\n"
    "n\tn\n"
    "o\tɒ\n"
    "p\tp\n"
    "q\tk\n"
    "r\tr\n"
    "s\ts\n"
    "t\tt\n"
    "u\tʌ\n"
    "v\tv\n"
    "w\tw\n"
    "x\tk s\n"
    "y\tj\n"
    "z\tz\n"
    // separators
    "-\t\n"
    "'\t\n"
    " \t\n";

}  // namespace t2l::tables
