#pragma once

#include <vector>

#include "motzkin/bigint.hpp"
#include "motzkin/prime_pair.hpp"
#include "motzkin/words.hpp"

namespace motzkin {

/// The pair as a standalone word: '(' then n-r-1 zeros, ')' then r-1 zeros.
MotzkinWord pair_word(const PrimePair& p);

/// 1-based index of the pair in the row-ordered set of all prime pairs:
/// r + (n-1)(n-2)/2.
long long pair_index(const PrimePair& p);

/// Closed-form weight M_{n-1} + M_{r+1} - M_r - M_{r-1}; equals
/// M_{n-1} + delta_r, and rank(pair_word(p)) is tested to agree.
BigInt pair_weight(const PrimePair& p);

/// Geometric relation of two pairs on the position lattice. Conflict when
/// they share a position or their intervals cross; otherwise one is nested in
/// the other or they are disjoint.
PairRelation classify_relation(const PrimePair& p, const PrimePair& q);

struct WeightTriangleRow {
  int n;
  std::vector<BigInt> weights;  // wt p_{n,r} for r = 1 .. n-1
};

/// Weight triangle rows for n = 2 .. max_n. Row n starts at M_{n-1} and its
/// increments across r follow the delta sequence.
std::vector<WeightTriangleRow> weight_triangle(int max_n);

}  // namespace motzkin
