#include "motzkin/prime_pairs.hpp"

#include <stdexcept>
#include <string>

#include "motzkin/errors.hpp"
#include "motzkin/numbers.hpp"

namespace motzkin {

namespace {

void validate(const PrimePair& p) {
  if (p.r < 1 || p.n <= p.r) throw InvalidCoordinates();
}

}  // namespace

MotzkinWord pair_word(const PrimePair& p) {
  validate(p);
  std::string text = "(";
  text.append(p.n - p.r - 1, '0');
  text += ')';
  text.append(p.r - 1, '0');
  return MotzkinWord::parse(text);
}

long long pair_index(const PrimePair& p) {
  validate(p);
  return p.r + static_cast<long long>(p.n - 1) * (p.n - 2) / 2;
}

BigInt pair_weight(const PrimePair& p) {
  validate(p);
  return motzkin(p.n - 1) + motzkin(p.r + 1) - motzkin(p.r) -
         motzkin(p.r - 1);
}

PairRelation classify_relation(const PrimePair& p, const PrimePair& q) {
  validate(p);
  validate(q);
  const bool shares_position =
      p.n == q.n || p.n == q.r || p.r == q.n || p.r == q.r;
  if (shares_position) return PairRelation::Conflict;
  const auto inside_p = [&](int x) { return p.r < x && x < p.n; };
  if (inside_p(q.n) != inside_p(q.r)) return PairRelation::Conflict;  // crossing
  if (inside_p(q.n)) return PairRelation::SecondInsideFirst;
  if (q.r < p.r && p.n < q.n) return PairRelation::FirstInsideSecond;
  return PairRelation::Disjoint;
}

std::vector<WeightTriangleRow> weight_triangle(int max_n) {
  if (max_n < 2) throw std::invalid_argument("weight_triangle: max_n >= 2");
  std::vector<WeightTriangleRow> rows;
  rows.reserve(max_n - 1);
  for (int n = 2; n <= max_n; ++n) {
    WeightTriangleRow row{n, {}};
    row.weights.reserve(n - 1);
    for (int r = 1; r < n; ++r) {
      row.weights.push_back(pair_weight(PrimePair{n, r}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace motzkin
