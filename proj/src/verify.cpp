#include "motzkin/verify.hpp"

#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

#include "motzkin/numbers.hpp"
#include "motzkin/oracle.hpp"
#include "motzkin/prime_pairs.hpp"
#include "motzkin/ranking.hpp"
#include "motzkin/series.hpp"
#include "motzkin/triangle.hpp"
#include "motzkin/words.hpp"

namespace motzkin::verify {

namespace {

struct Bounds {
  int pair_rank_max_n;
  int boundary_max_n;
  int roundtrip_index_max_n;   // roundtrip indices run below motzkin(this)
  int unique_roundtrip_max_n;
  int brute_rank_max_n;
  int triangle_brute_max_n;
  int sum_max_n;
  int zones_max_n;
  int series_order;
  int pair_parts_order;
  int blocks_max_n;
  int compat_max_n;
};

Bounds bounds_for(Level level) {
  if (level == Level::Full) {
    return Bounds{12, 12, 10, 10, 9, 12, 30, 40, 30, 25, 10, 8};
  }
  return Bounds{9, 9, 8, 8, 7, 9, 15, 20, 12, 12, 8, 6};
}

const long long kMotzkinPrefix[] = {1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188};
const long long kIncrementPrefix[] = {0,    1,    1,    2,     5,
                                      12,   30,   76,   196,   512,
                                      1353, 3610, 9713, 26324, 71799};
// delta_r for r = 1 .. 13.
const long long kDeltaPrefix[] = {0,    1,    3,    8,     21,   55,  145,
                                  385,  1030, 2775, 7525, 20526, 56288};
// Weight triangle rows n = 2 .. 8, r = 1 .. n-1.
const std::vector<std::vector<long long>> kWeightTriangle = {
    {1},
    {2, 3},
    {4, 5, 7},
    {9, 10, 12, 17},
    {21, 22, 24, 29, 42},
    {51, 52, 54, 59, 72, 106},
    {127, 128, 130, 135, 148, 182, 272},
};

bool check_sequences(std::ostream& diag, const Bounds&) {
  for (int n = 0; n <= 10; ++n) {
    if (motzkin(n) != kMotzkinPrefix[n]) {
      diag << "motzkin(" << n << ") = " << motzkin(n);
      return false;
    }
  }
  for (int n = 0; n <= 14; ++n) {
    if (motzkin_increment(n) != kIncrementPrefix[n]) {
      diag << "motzkin_increment(" << n << ") = " << motzkin_increment(n);
      return false;
    }
  }
  for (int r = 1; r <= 13; ++r) {
    if (delta(r) != kDeltaPrefix[r - 1]) {
      diag << "delta(" << r << ") = " << delta(r);
      return false;
    }
  }
  return true;
}

bool check_published_weights(std::ostream& diag, const Bounds&) {
  const std::pair<const char*, long long> cases[] = {
      {"(0)0", 5}, {"(00)000", 59}, {"(())()0", 105}};
  for (const auto& [text, expected] : cases) {
    const Weight got = rank(MotzkinWord::parse(text));
    if (got != expected) {
      diag << "rank(" << text << ") = " << got << ", expected " << expected;
      return false;
    }
  }
  return true;
}

bool check_pair_weights(std::ostream& diag, const Bounds& bounds) {
  for (std::size_t i = 0; i < kWeightTriangle.size(); ++i) {
    const int n = static_cast<int>(i) + 2;
    for (int r = 1; r < n; ++r) {
      const BigInt expected = kWeightTriangle[i][r - 1];
      if (pair_weight(PrimePair{n, r}) != expected) {
        diag << "pair_weight(" << n << "," << r << ") != " << expected;
        return false;
      }
    }
  }
  for (int n = 2; n <= bounds.pair_rank_max_n; ++n) {
    for (int r = 1; r < n; ++r) {
      const PrimePair p{n, r};
      if (rank(pair_word(p)) != pair_weight(p)) {
        diag << "rank(pair_word) != pair_weight at (" << n << "," << r << ")";
        return false;
      }
    }
  }
  return true;
}

bool check_boundaries(std::ostream& diag, const Bounds& bounds) {
  for (int n = 2; n <= bounds.boundary_max_n; ++n) {
    if (rank(range_min(n)) != motzkin(n - 1)) {
      diag << "rank(range_min(" << n << ")) != M_" << n - 1;
      return false;
    }
    if (rank(range_max(n)) != motzkin(n) - 1) {
      diag << "rank(range_max(" << n << ")) != M_" << n << " - 1";
      return false;
    }
  }
  return true;
}

bool check_roundtrip(std::ostream& diag, const Bounds& bounds) {
  const BigInt limit = motzkin(bounds.roundtrip_index_max_n);
  for (BigInt i = 0; i < limit; ++i) {
    if (rank(unrank(i)) != i) {
      diag << "rank(unrank(" << i << ")) != " << i;
      return false;
    }
  }
  for (int n = 1; n <= bounds.unique_roundtrip_max_n; ++n) {
    RangeEnumerator stream(n);
    while (auto w = stream.next()) {
      if (unrank(rank(*w)) != *w) {
        diag << "unrank(rank(w)) != w for " << w->text();
        return false;
      }
    }
  }
  for (int n = 1; n <= bounds.brute_rank_max_n; ++n) {
    RangeEnumerator stream(n);
    while (auto w = stream.next()) {
      if (rank(*w) != oracle::brute_rank(*w)) {
        diag << "rank != brute_rank for " << w->text();
        return false;
      }
    }
  }
  return true;
}

bool check_triangle_counts(std::ostream& diag, const Bounds& bounds) {
  for (int n = 2; n <= bounds.triangle_brute_max_n; ++n) {
    for (int k = 1; k <= n / 2 + 1; ++k) {
      if (u_nk(n, k) != oracle::brute_count_pairs(n, k)) {
        diag << "u_nk(" << n << "," << k << ") != brute count";
        return false;
      }
    }
  }
  if (u_nk(10, 3) != 630) {
    diag << "u_nk(10,3) = " << u_nk(10, 3);
    return false;
  }
  if (u_nk(6, 1) != 5 || u_nk(6, 2) != 20 || u_nk(6, 3) != 5) {
    diag << "column 6 profile is not (5, 20, 5)";
    return false;
  }
  for (int n = 2; n <= bounds.sum_max_n; ++n) {
    BigInt sum = 0;
    for (int k = 1; k <= n / 2; ++k) sum += u_nk(n, k);
    if (sum != motzkin_increment(n)) {
      diag << "column sum at n = " << n << " != increment";
      return false;
    }
  }
  {
    BigInt sum = 0;
    for (int k = 1; k <= 7; ++k) sum += u_nk(15, k);
    if (sum != 196938) {
      diag << "column sum at n = 15 is " << sum << ", expected 196938";
      return false;
    }
  }
  return true;
}

bool check_row_identities(std::ostream& diag, const Bounds&) {
  for (int k = 1; k <= 8; ++k) {
    for (int n = 2; n < 2 * k; ++n) {
      if (u_nk(n, k) != 0) {
        diag << "u_nk(" << n << "," << k << ") nonzero below the diagonal";
        return false;
      }
    }
    if (!row_properties(k).matches_closed_forms) {
      diag << "row closed forms fail at k = " << k;
      return false;
    }
  }
  for (int k = 2; k <= 8; ++k) {
    if (!duplicate_check(k)) {
      diag << "duplicate identities fail at k = " << k;
      return false;
    }
  }
  if (u_nk(18, 5) != 1021020 || u_nk(18, 7) != 1021020 ||
      u_nk(18, 9) != 4862) {
    diag << "pinned row-18 entries differ";
    return false;
  }
  return true;
}

bool check_zones(std::ostream& diag, const Bounds& bounds) {
  const long long first_values[] = {2, 8, 20, 40, 70};  // n = 4 .. 8
  for (int n = 4; n <= bounds.zones_max_n; ++n) {
    const BigInt via_zones = u_n2_via_zones(n);
    if (via_zones != u_nk(n, 2) || via_zones != 2 * tetrahedral(n - 3)) {
      diag << "zone count disagrees at n = " << n;
      return false;
    }
    if (n <= 8 && via_zones != first_values[n - 4]) {
      diag << "u_n2(" << n << ") = " << via_zones;
      return false;
    }
  }
  return true;
}

bool check_series(std::ostream& diag, const Bounds& bounds) {
  const int order = bounds.series_order;
  const TruncatedSeries m = motzkin_gf(order);
  for (int j = 0; j < order; ++j) {
    if (m.coefficient(j) != Rational(motzkin(j))) {
      diag << "motzkin_gf coefficient " << j << " differs";
      return false;
    }
  }
  if (!motzkin_gf_residual(order).is_zero()) {
    diag << "functional-equation residual is nonzero";
    return false;
  }
  const TruncatedSeries u = increment_gf(order);
  for (int j = 0; j < order; ++j) {
    if (u.coefficient(j) != Rational(motzkin_increment(j))) {
      diag << "increment_gf coefficient " << j << " differs";
      return false;
    }
  }
  const PairGfParts parts = pair_gf_parts(bounds.pair_parts_order);
  for (int n = 0; n < bounds.pair_parts_order; ++n) {
    const Rational expected = n >= 2 ? Rational(motzkin(n - 1)) : Rational(0);
    if (parts.x_part.coefficient(n) != expected) {
      diag << "pair x-part coefficient " << n << " differs";
      return false;
    }
  }
  for (int r = 0; r < bounds.pair_parts_order; ++r) {
    const Rational expected = r >= 1 ? Rational(delta(r)) : Rational(0);
    if (parts.y_part.coefficient(r) != expected) {
      diag << "pair y-part coefficient " << r << " differs";
      return false;
    }
  }
  return true;
}

bool check_blocks(std::ostream& diag, const Bounds& bounds) {
  for (int n = 1; n <= bounds.blocks_max_n; ++n) {
    for (const MotzkinWord& w : oracle::brute_enumerate(n)) {
      for (const Block& b : simple_blocks(w)) {
        const Extraction parts = extract_block(w, b);
        if (superimpose(parts.remainder, parts.extracted) != w) {
          diag << "extract/superimpose roundtrip fails for " << w.text();
          return false;
        }
      }
    }
  }
  const Weight whole = rank(MotzkinWord::parse("()0(())(00)"));
  const Weight remainder = rank(MotzkinWord::parse("()00000(00)"));
  const Weight extracted = rank(MotzkinWord::parse("(())0000"));
  if (whole != remainder + extracted) {
    diag << "weight additivity fails: " << whole << " != " << remainder
         << " + " << extracted;
    return false;
  }
  return true;
}

bool check_compatibility(std::ostream& diag, const Bounds& bounds) {
  const int max_n = bounds.compat_max_n;
  std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> cohosted;
  for (int len = 2; len <= max_n; ++len) {
    for (const MotzkinWord& w : oracle::brute_enumerate(len)) {
      const auto pairs = decompose(w);
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = 0; j < pairs.size(); ++j) {
          if (i == j) continue;
          cohosted.insert({{pairs[i].n, pairs[i].r}, {pairs[j].n, pairs[j].r}});
        }
      }
    }
  }
  for (int pn = 2; pn <= max_n; ++pn) {
    for (int pr = 1; pr < pn; ++pr) {
      for (int qn = 2; qn <= max_n; ++qn) {
        for (int qr = 1; qr < qn; ++qr) {
          if (pn == qn && pr == qr) continue;
          const bool compatible =
              classify_relation(PrimePair{pn, pr}, PrimePair{qn, qr}) !=
              PairRelation::Conflict;
          const bool hosted = cohosted.count({{pn, pr}, {qn, qr}}) > 0;
          if (compatible != hosted) {
            diag << "relation/co-hosting mismatch for (" << pn << "," << pr
                 << ") vs (" << qn << "," << qr << ")";
            return false;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace

std::vector<Check> standard_checks(Level level) {
  const Bounds bounds = bounds_for(level);
  auto make = [bounds](const char* name,
                       bool (*fn)(std::ostream&, const Bounds&)) {
    return Check{name, [fn, bounds](std::ostream& diag) {
                   return fn(diag, bounds);
                 }};
  };
  return {
      make("sequence values", check_sequences),
      make("published weights", check_published_weights),
      make("pair_weight vs rank", check_pair_weights),
      make("range boundary weights", check_boundaries),
      make("rank/unrank roundtrip", check_roundtrip),
      make("triangle vs brute counts", check_triangle_counts),
      make("triangle row identities", check_row_identities),
      make("two-pair zone counts", check_zones),
      make("generating functions", check_series),
      make("block arithmetic", check_blocks),
      make("pair compatibility vs co-hosting", check_compatibility),
  };
}

bool run_checks(const std::vector<Check>& checks, std::ostream& out) {
  bool all_ok = true;
  for (const auto& check : checks) {
    std::ostringstream diag;
    const bool ok = check.run(diag);
    if (ok) {
      out << "PASS " << check.name << '\n';
    } else {
      out << "FAIL " << check.name;
      if (!diag.str().empty()) out << ": " << diag.str();
      out << '\n';
      all_ok = false;
    }
  }
  return all_ok;
}

bool run(Level level, std::ostream& out) {
  return run_checks(standard_checks(level), out);
}

}  // namespace motzkin::verify
