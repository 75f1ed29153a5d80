#include "motzkin/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "motzkin/errors.hpp"

namespace motzkin {

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 1) throw std::invalid_argument("TruncatedSeries: order >= 1");
  c_.resize(order);
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Rational> coefficients)
    : TruncatedSeries(order) {
  const int n = std::min<int>(order, static_cast<int>(coefficients.size()));
  for (int j = 0; j < n; ++j) c_[j] = std::move(coefficients[j]);
}

TruncatedSeries TruncatedSeries::constant(int order, const Rational& value) {
  TruncatedSeries s(order);
  s.c_[0] = value;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(int order, int power,
                                          const Rational& value) {
  TruncatedSeries s(order);
  if (power < 0) throw std::invalid_argument("monomial: power >= 0");
  if (power < order) s.c_[power] = value;
  return s;
}

bool TruncatedSeries::is_zero() const {
  for (const auto& v : c_) {
    if (v != 0) return false;
  }
  return true;
}

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) throw OrderMismatch();
}

}  // namespace

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  std::vector<Rational> c(a.order());
  for (int j = 0; j < a.order(); ++j) c[j] = a.coefficient(j) + b.coefficient(j);
  return TruncatedSeries(a.order(), std::move(c));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  std::vector<Rational> c(a.order());
  for (int j = 0; j < a.order(); ++j) c[j] = a.coefficient(j) - b.coefficient(j);
  return TruncatedSeries(a.order(), std::move(c));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  std::vector<Rational> c(a.order());
  for (int i = 0; i < a.order(); ++i) {
    if (a.coefficient(i) == 0) continue;
    for (int j = 0; i + j < a.order(); ++j) {
      c[i + j] += a.coefficient(i) * b.coefficient(j);
    }
  }
  return TruncatedSeries(a.order(), std::move(c));
}

TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  if (b.coefficient(0) == 0) throw DivisionByZeroConstantTerm();
  std::vector<Rational> q(a.order());
  for (int j = 0; j < a.order(); ++j) {
    Rational acc = a.coefficient(j);
    for (int i = 0; i < j; ++i) acc -= q[i] * b.coefficient(j - i);
    q[j] = acc / b.coefficient(0);
  }
  return TruncatedSeries(a.order(), std::move(q));
}

TruncatedSeries sqrt(const TruncatedSeries& a) {
  if (a.coefficient(0) != 1) throw BadConstantTerm();
  std::vector<Rational> s(a.order());
  s[0] = 1;
  for (int j = 1; j < a.order(); ++j) {
    Rational acc = a.coefficient(j);
    for (int i = 1; i < j; ++i) acc -= s[i] * s[j - i];
    s[j] = acc / 2;
  }
  return TruncatedSeries(a.order(), std::move(s));
}

namespace {

// 1 - 2x - 3x^2 at the requested order.
TruncatedSeries discriminant(int order) {
  return TruncatedSeries(order, {Rational(1), Rational(-2), Rational(-3)});
}

}  // namespace

TruncatedSeries motzkin_gf(int order) {
  if (order < 1) throw std::invalid_argument("motzkin_gf: order >= 1");
  const TruncatedSeries root = sqrt(discriminant(order));
  const TruncatedSeries denominator =
      add(TruncatedSeries(order, {Rational(1), Rational(-1)}), root);
  const TruncatedSeries m =
      div(TruncatedSeries::constant(order, 2), denominator);

  // The closed form and the functional equation must agree coefficientwise.
  const TruncatedSeries x = TruncatedSeries::monomial(order, 1, 1);
  const TruncatedSeries residual =
      sub(sub(sub(m, TruncatedSeries::constant(order, 1)), mul(x, m)),
          mul(mul(x, x), mul(m, m)));
  if (!residual.is_zero()) {
    throw Error("motzkin_gf: functional equation violated");
  }
  return m;
}

TruncatedSeries motzkin_gf_residual(int order) {
  const TruncatedSeries m = motzkin_gf(order);
  const TruncatedSeries x = TruncatedSeries::monomial(order, 1, 1);
  return sub(sub(sub(m, TruncatedSeries::constant(order, 1)), mul(x, m)),
             mul(mul(x, x), mul(m, m)));
}

TruncatedSeries increment_gf(int order) {
  if (order < 2) throw std::invalid_argument("increment_gf: order >= 2");
  const TruncatedSeries m = motzkin_gf(order);
  const TruncatedSeries one_minus_x =
      TruncatedSeries(order, {Rational(1), Rational(-1)});
  const TruncatedSeries x_minus_one =
      TruncatedSeries(order, {Rational(-1), Rational(1)});
  return add(x_minus_one, mul(one_minus_x, m));
}

PairGfParts pair_gf_parts(int order) {
  if (order < 3) throw std::invalid_argument("pair_gf_parts: order >= 3");
  const TruncatedSeries m = motzkin_gf(order);
  const TruncatedSeries x = TruncatedSeries::monomial(order, 1, 1);
  TruncatedSeries x_part = sub(mul(x, m), x);

  // y * y_part = (1 - y - y^2) M(y) - 1 as an ordinary series; coefficient
  // r + 1 of it is delta_r.
  const int lifted = order + 1;
  const TruncatedSeries shifted = sub(
      mul(TruncatedSeries(lifted, {Rational(1), Rational(-1), Rational(-1)}),
          motzkin_gf(lifted)),
      TruncatedSeries::constant(lifted, 1));
  std::vector<Rational> y_coeffs(order);
  for (int r = 0; r < order; ++r) y_coeffs[r] = shifted.coefficient(r + 1);
  return PairGfParts{std::move(x_part),
                     TruncatedSeries(order, std::move(y_coeffs))};
}

}  // namespace motzkin
