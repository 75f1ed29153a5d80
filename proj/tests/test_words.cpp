#include "motzkin/words.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "motzkin/errors.hpp"
#include "motzkin/numbers.hpp"
#include "motzkin/oracle.hpp"

using motzkin::BigInt;
using motzkin::Block;
using motzkin::MotzkinWord;
using motzkin::PrimePair;

namespace {

MotzkinWord w(const char* text) { return MotzkinWord::parse(text); }

}  // namespace

TEST_CASE("parse accepts valid words") {
  CHECK(w("(0)0").length() == 4);
  CHECK(w("0").length() == 1);
  CHECK(w("000").all_zeros());
  CHECK(w("()0(())(00)").length() == 11);
}

TEST_CASE("parse rejects bad input") {
  CHECK_THROWS_AS(MotzkinWord::parse(""), motzkin::EmptyInput);
  CHECK_THROWS_AS(MotzkinWord::parse("(x)"), motzkin::IllegalCharacter);
  CHECK_THROWS_AS(MotzkinWord::parse(")("), motzkin::UnbalancedWord);
  try {
    MotzkinWord::parse(")(");
    FAIL("expected UnbalancedWord");
  } catch (const motzkin::UnbalancedWord& e) {
    CHECK(e.position == 1);
  }
  try {
    MotzkinWord::parse("00)0");
    FAIL("expected UnbalancedWord");
  } catch (const motzkin::UnbalancedWord& e) {
    CHECK(e.position == 3);
  }
  CHECK_THROWS_AS(MotzkinWord::parse("((("), motzkin::UnbalancedWord);
  try {
    MotzkinWord::parse("(a)");
    FAIL("expected IllegalCharacter");
  } catch (const motzkin::IllegalCharacter& e) {
    CHECK(e.position == 2);
  }
}

TEST_CASE("compare orders by length then by 0 < ( < )") {
  CHECK(compare(w("()"), w("(0)")) == std::strong_ordering::less);
  CHECK(compare(w("(00)"), w("(0)0")) == std::strong_ordering::less);
  CHECK(compare(w("(0)0"), w("(0)0")) == std::strong_ordering::equal);
  CHECK(compare(w("0"), w("()")) == std::strong_ordering::less);
  // Raw character codes would order these the other way around.
  CHECK(compare(w("0()"), w("()0")) == std::strong_ordering::less);
}

TEST_CASE("compare is a total order on all words up to length 7") {
  std::vector<MotzkinWord> all;
  for (int n = 1; n <= 7; ++n) {
    for (const auto& word : motzkin::oracle::brute_enumerate(n)) {
      all.push_back(word);
    }
  }
  for (const auto& a : all) {
    for (const auto& b : all) {
      const auto ab = compare(a, b);
      const auto ba = compare(b, a);
      if (ab == std::strong_ordering::equal) {
        CHECK(a == b);
        CHECK(ba == std::strong_ordering::equal);
      } else {
        CHECK(ab != ba);  // antisymmetry
      }
    }
  }
  // Transitivity, exhaustive at a smaller bound.
  std::vector<MotzkinWord> small;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& word : motzkin::oracle::brute_enumerate(n)) {
      small.push_back(word);
    }
  }
  for (const auto& a : small) {
    for (const auto& b : small) {
      for (const auto& c : small) {
        if (a < b && b < c) CHECK(a < c);
      }
    }
  }
}

TEST_CASE("row membership") {
  CHECK(motzkin::is_unique(w("0")));
  CHECK_FALSE(motzkin::is_unique(w("0()")));
  CHECK(motzkin::is_unique(w("(())")));
  CHECK(motzkin::membership(w("00")) == motzkin::RowMembership::Inherited);
  CHECK(motzkin::membership(w("(0)")) == motzkin::RowMembership::Unique);
}

TEST_CASE("range extremes") {
  CHECK(motzkin::range_min(4).text() == "(00)");
  CHECK(motzkin::range_min(2).text() == "()");
  CHECK(motzkin::range_max(5).text() == "()()0");
  CHECK(motzkin::range_max(2).text() == "()");
  CHECK(motzkin::range_max(1).text() == "0");
  CHECK_THROWS_AS(motzkin::range_min(1), std::invalid_argument);
}

TEST_CASE("enumerate_range yields the unique n-words in order") {
  CHECK(motzkin::enumerate_range(1).size() == 1);
  const auto two = motzkin::enumerate_range(2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].text() == "()");

  const auto four = motzkin::enumerate_range(4);
  REQUIRE(four.size() == 5);
  const char* expected[] = {"(00)", "(0)0", "(())", "()00", "()()"};
  for (int i = 0; i < 5; ++i) CHECK(four[i].text() == expected[i]);

  CHECK(motzkin::enumerate_range(7).size() == 76);
}

TEST_CASE("enumerate_range matches count, extremes, and the brute filter") {
  for (int n = 1; n <= 9; ++n) {
    const auto words = motzkin::enumerate_range(n);
    CHECK(BigInt(words.size()) == motzkin::motzkin_increment(n));
    if (n >= 2) {
      CHECK(words.front() == motzkin::range_min(n));
    }
    CHECK(words.back() == motzkin::range_max(n));
    // Independent route: filter the full alphabet product.
    std::vector<MotzkinWord> filtered;
    for (const auto& word : motzkin::oracle::brute_enumerate(n)) {
      if (motzkin::is_unique(word)) filtered.push_back(word);
    }
    CHECK(words == filtered);
  }
  for (int n = 10; n <= 12; ++n) {
    CHECK(BigInt(motzkin::enumerate_range(n).size()) ==
          motzkin::motzkin_increment(n));
  }
}

TEST_CASE("word counts per length match the sequences") {
  for (int n = 1; n <= 12; ++n) {
    const auto universe = motzkin::oracle::brute_enumerate(n);
    BigInt unique_count = 0;
    for (const auto& word : universe) unique_count += motzkin::is_unique(word);
    CHECK(BigInt(universe.size()) == motzkin::motzkin(n));
    CHECK(unique_count == motzkin::motzkin_increment(n));
  }
}

TEST_CASE("parse/render roundtrip on every enumerated word") {
  for (int n = 1; n <= 12; ++n) {
    motzkin::RangeEnumerator stream(n);
    while (auto word = stream.next()) {
      CHECK(MotzkinWord::parse(word->text()) == *word);
    }
  }
}

TEST_CASE("decompose lists matched pairs leftmost-first") {
  const auto pairs = decompose(w("(())()0"));
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0] == PrimePair{7, 4});
  CHECK(pairs[1] == PrimePair{6, 5});
  CHECK(pairs[2] == PrimePair{3, 2});

  CHECK(decompose(w("0")).empty());

  const auto single = decompose(w("(0)0"));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == PrimePair{4, 2});
}

TEST_CASE("decompose agrees with a hand-rolled matcher") {
  // Independent matching: repeatedly erase innermost "(zeros)" groups.
  auto reference = [](std::string text) {
    const int n = static_cast<int>(text.size());
    std::vector<PrimePair> found;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i + 1 < n; ++i) {
        if (text[i] != '(') continue;
        int j = i + 1;
        while (j < n && text[j] == '0') ++j;
        if (j < n && text[j] == ')') {
          found.push_back(PrimePair{n - i, n - j});
          text[i] = '0';
          text[j] = '0';
          changed = true;
        }
      }
    }
    std::sort(found.begin(), found.end(),
              [](const PrimePair& a, const PrimePair& b) { return a.n > b.n; });
    return found;
  };
  for (int n = 1; n <= 8; ++n) {
    for (const auto& word : motzkin::oracle::brute_enumerate(n)) {
      CHECK(decompose(word) == reference(word.text()));
    }
  }
}

TEST_CASE("count_pairs") {
  CHECK(count_pairs(w("((00())0)0")) == 3);
  CHECK(count_pairs(w("000")) == 0);
  CHECK(count_pairs(w("()()()")) == 3);
}

TEST_CASE("extract_block follows the worked example") {
  const MotzkinWord host = w("()0(())(00)");
  const auto blocks = simple_blocks(host);
  REQUIRE(blocks.size() == 3);
  CHECK(blocks[0] == Block{11, 10});
  CHECK(blocks[1] == Block{8, 5});
  CHECK(blocks[2] == Block{4, 1});

  const auto middle = extract_block(host, blocks[1]);
  CHECK(middle.remainder.text() == "()00000(00)");
  CHECK(middle.extracted.text() == "(())0000");

  // Rightmost simple block acquires no trailing zeros.
  const auto last = extract_block(host, blocks[2]);
  CHECK(last.extracted.text() == "(00)");
  CHECK(last.remainder.text() == "()0(())0000");

  // Untouched brackets keep their positions from the right end.
  for (const auto& p : decompose(last.remainder)) {
    const auto original = decompose(host);
    CHECK(std::find(original.begin(), original.end(), p) != original.end());
  }
}

TEST_CASE("extract_block of the only block leaves zeros") {
  const auto parts = extract_block(w("()0"), Block{3, 2});
  CHECK(parts.remainder.text() == "000");
  CHECK(parts.extracted.text() == "()0");
}

TEST_CASE("extract_block rejects nested blocks and non-blocks") {
  const MotzkinWord host = w("(())");
  CHECK_THROWS_AS(extract_block(host, Block{3, 2}), motzkin::NotASimpleBlock);
  CHECK_THROWS_AS(extract_block(host, Block{4, 2}), std::invalid_argument);
  CHECK_THROWS_AS(extract_block(w("()()"), Block{4, 1}),
                  std::invalid_argument);
}

TEST_CASE("superimpose follows the worked example") {
  CHECK(superimpose(w("()00000(00)"), w("(())0000")).text() == "()0(())(00)");
  CHECK(superimpose(w("000"), w("()0")).text() == "()0");
  CHECK(superimpose(w("()0"), w("000")).text() == "()0");
  CHECK_THROWS_AS(superimpose(w("()"), w("()")), motzkin::PositionConflict);
}

TEST_CASE("extract then superimpose reproduces the word") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& word : motzkin::oracle::brute_enumerate(n)) {
      for (const auto& block : simple_blocks(word)) {
        const auto parts = extract_block(word, block);
        CHECK(superimpose(parts.remainder, parts.extracted) == word);
      }
    }
  }
}

TEST_CASE("compact rendering shortens zero runs") {
  CHECK(motzkin::compact_render(w("(00)000")) == "(0{2})0{3}");
  CHECK(motzkin::compact_render(w("()0")) == "()0");
  CHECK(motzkin::compact_render(w("0")) == "0");
}
