#pragma once

#include <vector>

#include "motzkin/bigint.hpp"

namespace motzkin {

/// Number of unique n-words with exactly k bracket pairs:
/// binom(n-1, 2k-1) * Cat(k) for n >= 2k, zero below the diagonal.
BigInt u_nk(int n, int k);

/// First row of the triangle, U(n, 1) = n - 1.
BigInt u_n1(int n);

/// U(n, 2) computed geometrically: for each right-bracket position r the
/// compatible companion pairs split into a zone that stays outside (T_{r-2}
/// points) and a zone nested inside (T_{n-r-2} points). Equals 2*Te_{n-3}.
BigInt u_n2_via_zones(int n);

struct ZoneCounts {
  std::vector<BigInt> outside;  // #A(r) for r = 1 .. n-1
  std::vector<BigInt> nested;   // #B(r) for r = 1 .. n-1
};

ZoneCounts two_pair_zone_counts(int n);

struct RowProperties {
  BigInt at_2k;       // U(2k, k)
  BigInt at_2k_plus_1;
  BigInt at_2k_plus_2;
  bool matches_closed_forms;  // Cat(k), 2k*Cat(k), k(2k+1)*Cat(k)
};

RowProperties row_properties(int k);

/// True iff U(3k, k-1) = U(3k, k+1) and (k-1) U(3k, k) = (k+2) U(3k, k+1);
/// requires k >= 2.
bool duplicate_check(int k);

enum class TriangleOrientation { ByRowsK, ByRowsN };

class TriangleTable {
 public:
  explicit TriangleTable(int max_n);

  int max_n() const { return max_n_; }
  int max_k() const { return max_n_ / 2; }
  BigInt at(int n, int k) const;    // zero outside the stored triangle
  BigInt column_sum(int n) const;   // sum over k of U(n, k)
  bool column_sums_match_increments() const;

 private:
  int max_n_;
  std::vector<std::vector<BigInt>> by_n_;  // by_n_[n] holds k = 1 .. n/2
};

TriangleTable triangle_table(int max_n);

}  // namespace motzkin
