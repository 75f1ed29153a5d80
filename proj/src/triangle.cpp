#include "motzkin/triangle.hpp"

#include <stdexcept>

#include "motzkin/numbers.hpp"

namespace motzkin {

BigInt u_nk(int n, int k) {
  if (n < 0 || k < 1) {
    throw std::invalid_argument("u_nk: requires n >= 0 and k >= 1");
  }
  if (n < 2 * k) return 0;
  return binomial(n - 1, 2 * k - 1) * catalan(k);
}

BigInt u_n1(int n) {
  if (n < 1) throw std::invalid_argument("u_n1: requires n >= 1");
  return n - 1;
}

namespace {

BigInt triangular_or_zero(int i) { return i < 1 ? BigInt(0) : triangular(i); }

}  // namespace

ZoneCounts two_pair_zone_counts(int n) {
  if (n < 4) throw std::invalid_argument("two_pair_zone_counts: n >= 4");
  ZoneCounts zones;
  for (int r = 1; r <= n - 1; ++r) {
    zones.outside.push_back(triangular_or_zero(r - 2));
    zones.nested.push_back(triangular_or_zero(n - r - 2));
  }
  return zones;
}

BigInt u_n2_via_zones(int n) {
  const ZoneCounts zones = two_pair_zone_counts(n);
  BigInt total = 0;
  for (const auto& v : zones.outside) total += v;
  for (const auto& v : zones.nested) total += v;
  return total;
}

RowProperties row_properties(int k) {
  if (k < 1) throw std::invalid_argument("row_properties: k >= 1");
  RowProperties props;
  props.at_2k = u_nk(2 * k, k);
  props.at_2k_plus_1 = u_nk(2 * k + 1, k);
  props.at_2k_plus_2 = u_nk(2 * k + 2, k);
  const BigInt cat = catalan(k);
  props.matches_closed_forms = props.at_2k == cat &&
                               props.at_2k_plus_1 == 2 * k * cat &&
                               props.at_2k_plus_2 == k * (2 * k + 1) * cat;
  return props;
}

bool duplicate_check(int k) {
  if (k < 2) throw std::invalid_argument("duplicate_check: k >= 2");
  const BigInt lower = u_nk(3 * k, k - 1);
  const BigInt upper = u_nk(3 * k, k + 1);
  const BigInt center = u_nk(3 * k, k);
  return lower == upper && (k - 1) * center == (k + 2) * upper;
}

TriangleTable::TriangleTable(int max_n) : max_n_(max_n) {
  if (max_n < 2) throw std::invalid_argument("TriangleTable: max_n >= 2");
  by_n_.resize(max_n + 1);
  for (int n = 2; n <= max_n; ++n) {
    for (int k = 1; k <= n / 2; ++k) {
      by_n_[n].push_back(u_nk(n, k));
    }
  }
}

BigInt TriangleTable::at(int n, int k) const {
  if (n < 2 || n > max_n_ || k < 1 || k > n / 2) return 0;
  return by_n_[n][k - 1];
}

BigInt TriangleTable::column_sum(int n) const {
  BigInt sum = 0;
  if (n >= 2 && n <= max_n_) {
    for (const auto& v : by_n_[n]) sum += v;
  }
  return sum;
}

bool TriangleTable::column_sums_match_increments() const {
  for (int n = 2; n <= max_n_; ++n) {
    if (column_sum(n) != motzkin_increment(n)) return false;
  }
  return true;
}

TriangleTable triangle_table(int max_n) { return TriangleTable(max_n); }

}  // namespace motzkin
