#include "motzkin/prime_pairs.hpp"

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "doctest.h"
#include "motzkin/errors.hpp"
#include "motzkin/numbers.hpp"
#include "motzkin/oracle.hpp"
#include "motzkin/ranking.hpp"
#include "motzkin/words.hpp"

using motzkin::BigInt;
using motzkin::PairRelation;
using motzkin::PrimePair;

TEST_CASE("pair_word spells out the coordinates") {
  CHECK(pair_word(PrimePair{7, 4}).text() == "(00)000");
  CHECK(pair_word(PrimePair{2, 1}).text() == "()");
  CHECK(pair_word(PrimePair{5, 1}).text() == "(000)");
  CHECK_THROWS_AS(pair_word(PrimePair{3, 3}), motzkin::InvalidCoordinates);
  CHECK_THROWS_AS(pair_word(PrimePair{2, 0}), motzkin::InvalidCoordinates);
}

TEST_CASE("pair_index counts in row order") {
  CHECK(pair_index(PrimePair{2, 1}) == 1);
  CHECK(pair_index(PrimePair{3, 1}) == 2);
  CHECK(pair_index(PrimePair{7, 4}) == 4 + 15);

  // Enumerating the pair set in row order reproduces the closed form, and
  // the indices form 1 .. T_{N-1} without gaps.
  long long position = 0;
  std::set<long long> seen;
  for (int n = 2; n <= 12; ++n) {
    for (int r = 1; r < n; ++r) {
      ++position;
      CHECK(pair_index(PrimePair{n, r}) == position);
      seen.insert(position);
    }
  }
  CHECK(BigInt(seen.size()) == motzkin::triangular(11));
}

TEST_CASE("pair_weight closed form") {
  CHECK(pair_weight(PrimePair{7, 4}) == 59);
  CHECK(pair_weight(PrimePair{2, 1}) == 1);
  CHECK(pair_weight(PrimePair{8, 7}) == 272);
  for (int n = 2; n <= 12; ++n) {
    CHECK(pair_weight(PrimePair{n, 1}) == motzkin::motzkin(n - 1));
    for (int r = 1; r < n; ++r) {
      CHECK(pair_weight(PrimePair{n, r}) ==
            motzkin::motzkin(n - 1) + motzkin::delta(r));
    }
  }
}

TEST_CASE("closed-form weight agrees with the ranking path") {
  for (int n = 2; n <= 12; ++n) {
    for (int r = 1; r < n; ++r) {
      const PrimePair p{n, r};
      CHECK(rank(pair_word(p)) == pair_weight(p));
    }
  }
}

TEST_CASE("weight triangle rows") {
  const auto rows = motzkin::weight_triangle(8);
  REQUIRE(rows.size() == 7);
  const std::vector<std::vector<long long>> expected = {
      {1},
      {2, 3},
      {4, 5, 7},
      {9, 10, 12, 17},
      {21, 22, 24, 29, 42},
      {51, 52, 54, 59, 72, 106},
      {127, 128, 130, 135, 148, 182, 272},
  };
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].n == static_cast<int>(i) + 2);
    REQUIRE(rows[i].weights.size() == expected[i].size());
    for (std::size_t j = 0; j < expected[i].size(); ++j) {
      CHECK(rows[i].weights[j] == expected[i][j]);
    }
  }
}

TEST_CASE("row increments follow the delta sequence") {
  for (const auto& row : motzkin::weight_triangle(12)) {
    CHECK(row.weights.front() == motzkin::motzkin(row.n - 1));
    for (std::size_t j = 1; j < row.weights.size(); ++j) {
      const int r = static_cast<int>(j) + 1;
      CHECK(row.weights[j] - row.weights[j - 1] ==
            motzkin::delta(r) - motzkin::delta(r - 1));
    }
  }
}

TEST_CASE("each range holds n - 1 single-pair words") {
  for (int n = 2; n <= 12; ++n) {
    int count = 0;
    for (const auto& word : motzkin::enumerate_range(n)) {
      count += count_pairs(word) == 1;
    }
    CHECK(count == n - 1);
  }
}

TEST_CASE("classify_relation on the worked examples") {
  CHECK(classify_relation(PrimePair{5, 3}, PrimePair{6, 4}) ==
        PairRelation::Conflict);  // shifted copy crosses
  CHECK(classify_relation(PrimePair{7, 4}, PrimePair{6, 5}) ==
        PairRelation::SecondInsideFirst);
  CHECK(classify_relation(PrimePair{6, 5}, PrimePair{7, 4}) ==
        PairRelation::FirstInsideSecond);
  CHECK(classify_relation(PrimePair{7, 4}, PrimePair{3, 2}) ==
        PairRelation::Disjoint);
  CHECK(classify_relation(PrimePair{3, 2}, PrimePair{3, 2}) ==
        PairRelation::Conflict);  // identical positions collide
  CHECK(classify_relation(PrimePair{4, 2}, PrimePair{5, 3}) ==
        PairRelation::Conflict);
}

TEST_CASE("classify_relation is symmetric with mirrored nesting") {
  for (int pn = 2; pn <= 7; ++pn) {
    for (int pr = 1; pr < pn; ++pr) {
      for (int qn = 2; qn <= 7; ++qn) {
        for (int qr = 1; qr < qn; ++qr) {
          const auto forward =
              classify_relation(PrimePair{pn, pr}, PrimePair{qn, qr});
          const auto backward =
              classify_relation(PrimePair{qn, qr}, PrimePair{pn, pr});
          switch (forward) {
            case PairRelation::FirstInsideSecond:
              CHECK(backward == PairRelation::SecondInsideFirst);
              break;
            case PairRelation::SecondInsideFirst:
              CHECK(backward == PairRelation::FirstInsideSecond);
              break;
            default:
              CHECK(backward == forward);
          }
        }
      }
    }
  }
}

TEST_CASE("compatibility matches the co-hosting oracle") {
  // Two distinct pairs are compatible exactly when some word of length <= 8
  // hosts both in its decomposition.
  std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> cohosted;
  for (int n = 2; n <= 8; ++n) {
    for (const auto& word : motzkin::oracle::brute_enumerate(n)) {
      const auto pairs = decompose(word);
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = 0; j < pairs.size(); ++j) {
          if (i != j) {
            cohosted.insert(
                {{pairs[i].n, pairs[i].r}, {pairs[j].n, pairs[j].r}});
          }
        }
      }
    }
  }
  for (int pn = 2; pn <= 8; ++pn) {
    for (int pr = 1; pr < pn; ++pr) {
      for (int qn = 2; qn <= 8; ++qn) {
        for (int qr = 1; qr < qn; ++qr) {
          if (pn == qn && pr == qr) continue;
          const bool compatible =
              classify_relation(PrimePair{pn, pr}, PrimePair{qn, qr}) !=
              PairRelation::Conflict;
          CHECK(compatible == (cohosted.count({{pn, pr}, {qn, qr}}) > 0));
        }
      }
    }
  }
}
