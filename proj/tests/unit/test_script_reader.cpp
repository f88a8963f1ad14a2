#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "doctest.h"

#include "clsfront/errors.hpp"
#include "clsfront/script_reader.hpp"
#include "clsfront/unicode.hpp"
#include "fixtures.hpp"
#include "printing.hpp"
#include "generators.hpp"

using namespace clsfront;
using clsfront::testing::shipped;
using clsfront::testing::utf8;

namespace {

const ScriptReader& reader() { return shipped().reader(); }

std::vector<std::string> raw(std::string_view word, Script script = Script::devanagari) {
  return reader().word_to_raw_cls(normalize_text(word), script).labels;
}

Errc error_of(std::string_view word, Script script = Script::devanagari,
              std::optional<std::size_t>* offset = nullptr) {
  try {
    (void)reader().word_to_raw_cls(normalize_text(word), script);
  } catch (const Error& e) {
    if (offset) *offset = e.offset();
    return e.code();
  }
  FAIL("expected an error");
  return Errc::io_error;
}

using V = std::vector<std::string>;

}  // namespace

TEST_SUITE("normalize_text") {
  TEST_CASE("precomposed nukta letters decompose") {
    CHECK(normalize_text(utf8(U"\u095C")) == utf8(U"\u0921\u093C"));
    CHECK(normalize_text(utf8(U"\u0958")) == utf8(U"\u0915\u093C"));
  }

  TEST_CASE("joiners are stripped") {
    CHECK(normalize_text(utf8(U"\u0915\u200C\u0937")) == utf8(U"\u0915\u0937"));
    CHECK(normalize_text(utf8(U"\u0915\u094D\u200D\u0937")) == utf8(U"\u0915\u094D\u0937"));
  }

  TEST_CASE("composable nukta pairs compose") {
    CHECK(normalize_text(utf8(U"\u0928\u093C")) == utf8(U"\u0929"));
  }

  TEST_CASE("invalid UTF-8 is rejected with an offset") {
    try {
      (void)normalize_text("ab\xC3");
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::invalid_utf8);
      CHECK(e.offset() == std::optional<std::size_t>(2));
    }
    CHECK_THROWS_AS(normalize_text("\xC0\x80"), Error);        // overlong
    CHECK_THROWS_AS(normalize_text("\xED\xA0\x80"), Error);    // surrogate
    CHECK_THROWS_AS(normalize_text("\xF4\x90\x80\x80"), Error);  // > U+10FFFF
  }

  TEST_CASE("idempotent on random codepoint strings") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> len(0, 12), pick(0, 9);
    const char32_t pool[] = {U'\u0915', U'\u093C', U'\u0958', U'\u095C', U'\u200C',
                             U'\u200D', U'\u0CBC', U'\u0C95', U'a',      U'\u0301'};
    for (int n = 0; n < 500; ++n) {
      std::u32string s;
      for (int i = len(rng); i > 0; --i) s += pool[pick(rng)];
      const std::string once = normalize_text(utf8(s));
      CHECK(normalize_text(once) == once);
    }
  }
}

TEST_SUITE("segment_aksharas") {
  TEST_CASE("single matra replaces the inherent vowel") {
    const auto a = reader().segment_aksharas(normalize_text("की"), Script::devanagari);
    REQUIRE(a.size() == 1);
    CHECK(a[0].consonants == V{"k"});
    CHECK(a[0].vowel == "ii");
  }

  TEST_CASE("virama joins consonants into one cluster") {
    const auto a = reader().segment_aksharas(normalize_text("क्ष"), Script::devanagari);
    REQUIRE(a.size() == 1);
    CHECK(a[0].consonants == V{"k", "sx"});
    CHECK(a[0].vowel == "a");
  }

  TEST_CASE("independent vowels form their own akshara") {
    const auto a = reader().segment_aksharas(normalize_text("अछि"), Script::devanagari);
    REQUIRE(a.size() == 2);
    CHECK(a[0].consonants.empty());
    CHECK(a[0].vowel == "a");
    CHECK(a[1].consonants == V{"ch"});
    CHECK(a[1].vowel == "i");
    CHECK(a[0].offset == 0);
    CHECK(a[1].offset == 3);
  }

  TEST_CASE("trailing signs and final virama") {
    const auto a = reader().segment_aksharas(normalize_text("नमः"), Script::devanagari);
    REQUIRE(a.size() == 2);
    CHECK(a[1].trailing == Trailing::visarga);

    const auto b = reader().segment_aksharas(normalize_text("जगत्"), Script::devanagari);
    REQUIRE(b.size() == 3);
    CHECK(b[2].consonants == V{"t"});
    CHECK_FALSE(b[2].vowel.has_value());

    const auto c = reader().segment_aksharas(normalize_text("स्त"), Script::devanagari);
    REQUIRE(c.size() == 1);
    CHECK(c[0].consonants == V{"s", "t"});
    CHECK(c[0].vowel == "a");

    const auto d = reader().segment_aksharas(normalize_text("त्"), Script::devanagari);
    REQUIRE(d.size() == 1);
    CHECK_FALSE(d[0].vowel.has_value());
  }

  TEST_CASE("chandrabindu marks the akshara nasal") {
    const auto a = reader().segment_aksharas(normalize_text("हँसी"), Script::devanagari);
    REQUIRE(a.size() == 2);
    CHECK(a[0].nasalized);
    CHECK_FALSE(a[1].nasalized);
  }
}

TEST_SUITE("word_to_raw_cls") {
  TEST_CASE("examples") {
    CHECK(raw("विकास") == V{"w", "i", "k", "aa", "s", "a"});
    CHECK(raw("क") == V{"k", "a"});
    // The flap takes the inherent vowel like any bare consonant.
    CHECK(raw(utf8(U"\u095C")) == V{"dxq", "a"});
    CHECK(raw(utf8(U"\u0921\u093C")) == V{"dxq", "a"});
    CHECK(raw("अन्तःस्थ") == V{"a", "n", "t", "a", "hq", "s", "th", "a"});
  }

  TEST_CASE("nukta letters") {
    CHECK(raw(utf8(U"\u0958")) == V{"kq", "a"});
    CHECK(raw(utf8(U"\u095A")) == V{"gq", "a"});
    CHECK(raw(utf8(U"\u095B")) == V{"jq", "a"});
    CHECK(raw(utf8(U"\u095E")) == V{"phq", "a"});
    CHECK(raw(utf8(U"\u095D")) == V{"dxhq", "a"});
    // No explicit row: the generic rule keeps the base label.
    CHECK(raw(utf8(U"\u0959")) == V{"kh", "a"});
    CHECK(raw(utf8(U"\u092E\u093C")) == V{"m", "a"});
  }

  TEST_CASE("anusvara becomes a homorganic nasal") {
    CHECK(raw("गंगा") == V{"g", "a", "ng", "g", "aa"});
    CHECK(raw("चंचल") == V{"c", "a", "nj", "c", "a", "l", "a"});
    CHECK(raw("ठंडा") == V{"txh", "a", "nx", "dx", "aa"});
    CHECK(raw("संत") == V{"s", "a", "n", "t", "a"});
    CHECK(raw("कंबल") == V{"k", "a", "m", "b", "a", "l", "a"});
    CHECK(raw("अंश") == V{"a", "nj", "sh", "a"});  // sh is palatal
    CHECK(raw("सं") == V{"s", "a", "m"});
    CHECK(raw("संआ") == V{"s", "a", "m", "aa"});
  }

  TEST_CASE("chandrabindu sets the nasal flag on the vowel only") {
    const auto seq = reader().word_to_raw_cls(normalize_text("चाँद"), Script::devanagari);
    CHECK(seq.labels == V{"c", "aa", "d", "a"});
    CHECK(seq.nasal_flags == std::vector<bool>{false, true, false, false});
  }

  TEST_CASE("vocalic r and word-final virama") {
    CHECK(raw("ऋषि") == V{"ru", "sx", "i"});
    CHECK(raw("कृष्ण") == V{"k", "ru", "sx", "nx", "a"});
    CHECK(raw("जगत्") == V{"j", "a", "g", "a", "t"});
    CHECK(raw("ओम्") == V{"oo", "m"});
  }

  TEST_CASE("Kannada and Telugu") {
    CHECK(raw("ವಿಕಾಸ", Script::kannada) == V{"w", "i", "k", "aa", "s", "a"});
    CHECK(raw("వికాస", Script::telugu) == V{"w", "i", "k", "aa", "s", "a"});
    CHECK(raw("ಕನ್ನಡ", Script::kannada) == V{"k", "a", "n", "n", "a", "dx", "a"});
    CHECK(raw("తెలుగు", Script::telugu) == V{"t", "e", "l", "u", "g", "u"});
    CHECK(raw("ಬೇರೆ", Script::kannada) == V{"b", "ee", "r", "e"});
  }

  TEST_CASE("errors") {
    CHECK(error_of("") == Errc::empty_word);

    std::optional<std::size_t> offset;
    CHECK(error_of("कx", Script::devanagari, &offset) == Errc::unknown_codepoint);
    CHECK(offset == std::optional<std::size_t>(3));
    CHECK(error_of("क1") == Errc::unknown_codepoint);
    CHECK(error_of("क,") == Errc::unknown_codepoint);
    // Right block, wrong script.
    CHECK(error_of("ಕ", Script::devanagari) == Errc::unknown_codepoint);
    CHECK(error_of("क", Script::telugu) == Errc::unknown_codepoint);

    CHECK(error_of("ि") == Errc::misplaced_sign);
    CHECK(error_of("काि") == Errc::misplaced_sign);
    CHECK(error_of("्क") == Errc::misplaced_sign);
    CHECK(error_of("ं") == Errc::misplaced_sign);
  }

  TEST_CASE("every emitted label is in the inventory and vowels survive") {
    std::mt19937 rng(11);
    for (Script script : {Script::devanagari, Script::kannada, Script::telugu}) {
      const testing::ScriptAlphabet alphabet(reader().table(script));
      for (int n = 0; n < 300; ++n) {
        const std::string word = normalize_text(utf8(testing::random_word(alphabet, rng)));
        CAPTURE(word);
        const ClsSequence seq = reader().word_to_raw_cls(word, script);
        REQUIRE(seq.labels.size() == seq.nasal_flags.size());
        int vowels = 0;
        for (std::size_t i = 0; i < seq.size(); ++i) {
          REQUIRE(reader().inventory().contains(seq.labels[i]));
          const bool vowel = reader().inventory().is_vowel(seq.labels[i]);
          vowels += vowel;
          if (seq.nasal_flags[i]) CHECK(vowel);
        }
        const bool only_virama_cluster =
            word.size() >= 3 && seq.labels.size() <= 3 && vowels == 0;
        if (!only_virama_cluster) CHECK(vowels >= 1);
      }
    }
  }

  TEST_CASE("precomposed and decomposed nukta spellings agree") {
    const std::map<char32_t, char32_t> compose = {
        {U'\u0915', U'\u0958'}, {U'\u0916', U'\u0959'}, {U'\u0917', U'\u095A'},
        {U'\u091C', U'\u095B'}, {U'\u0921', U'\u095C'}, {U'\u0922', U'\u095D'},
        {U'\u092B', U'\u095E'}, {U'\u092F', U'\u095F'}};
    std::mt19937 rng(5);
    const testing::ScriptAlphabet alphabet(reader().table(Script::devanagari));
    for (int n = 0; n < 300; ++n) {
      const std::u32string word = testing::random_word(alphabet, rng);
      std::u32string pre;
      for (std::size_t i = 0; i < word.size(); ++i) {
        auto it = compose.find(word[i]);
        if (it != compose.end() && i + 1 < word.size() && word[i + 1] == U'\u093C') {
          pre += it->second;
          ++i;
        } else {
          pre += word[i];
        }
      }
      CHECK(normalize_text(utf8(pre)) == normalize_text(utf8(word)));
      CHECK(raw(utf8(pre)) == raw(utf8(word)));
    }
  }

  TEST_CASE("Devanagari and Kannada spellings give the same labels") {
    std::ifstream in(CLSFRONT_TEST_DATA_DIR "/deva_kann_pairs.tsv");
    REQUIRE(in);
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      const auto tab = line.find('\t');
      REQUIRE(tab != std::string::npos);
      const std::string deva = line.substr(0, tab), kann = line.substr(tab + 1);
      CAPTURE(deva);
      const auto a = reader().word_to_raw_cls(normalize_text(deva), Script::devanagari);
      const auto b = reader().word_to_raw_cls(normalize_text(kann), Script::kannada);
      CHECK(a.labels == b.labels);
      CHECK(a.nasal_flags == b.nasal_flags);
      ++rows;
    }
    CHECK(rows >= 100);
  }
}
