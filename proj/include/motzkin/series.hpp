#pragma once

#include <vector>

#include "motzkin/bigint.hpp"

namespace motzkin {

/// Finite-order power series with exact rational coefficients. Order N keeps
/// coefficients c_0 .. c_{N-1}; arithmetic never inspects anything beyond.
class TruncatedSeries {
 public:
  /// Zero series of the given order (order >= 1).
  explicit TruncatedSeries(int order);

  /// Series from explicit coefficients; the list is truncated or zero-padded
  /// to the requested order.
  TruncatedSeries(int order, std::vector<Rational> coefficients);

  static TruncatedSeries constant(int order, const Rational& value);
  static TruncatedSeries monomial(int order, int power, const Rational& value);

  int order() const { return static_cast<int>(c_.size()); }
  const Rational& coefficient(int j) const { return c_.at(j); }
  bool is_zero() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) =
      default;

 private:
  std::vector<Rational> c_;
};

// Truncated ring operations; operands must have equal orders.
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// q with mul(q, b) = a up to the common order; b needs a nonzero constant
/// term.
TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b);

/// s with mul(s, s) = a and s_0 = 1; a must have constant term 1. Computed
/// coefficientwise from s^2 = a.
TruncatedSeries sqrt(const TruncatedSeries& a);

/// Motzkin generating function built from the closed form
/// 2 / (1 - x + sqrt(1 - 2x - 3x^2)); coefficient j is M_j. The functional
/// equation M = 1 + x M + x^2 M^2 is re-checked on every build.
TruncatedSeries motzkin_gf(int order);

/// Residual M - 1 - x M - x^2 M^2; the zero series when everything is right.
TruncatedSeries motzkin_gf_residual(int order);

/// x - 1 + (1 - x) M(x); coefficient j is U_j.
TruncatedSeries increment_gf(int order);

struct PairGfParts {
  TruncatedSeries x_part;  // x M(x) - x: coefficient n is M_{n-1} for n >= 2
  TruncatedSeries y_part;  // coefficient r is delta_r for r >= 1
};

/// The two separable parts of the pair generating function. The y-part has a
/// simple pole, so (1 - y - y^2) M(y) - 1 is computed as a plain series one
/// order higher and shifted down by one power.
PairGfParts pair_gf_parts(int order);

}  // namespace motzkin
