#pragma once

namespace motzkin {

// One matched bracket pair. Both coordinates are counted from the right end
// of the host word, starting at 1; n is the '(' position (and the pair's
// range when it stands alone), r the ')' position, n > r >= 1.
struct PrimePair {
  int n;
  int r;

  friend bool operator==(const PrimePair&, const PrimePair&) = default;
};

// How two pairs can sit relative to each other on the position lattice.
enum class PairRelation {
  FirstInsideSecond,
  SecondInsideFirst,
  Disjoint,
  Conflict,
};

}  // namespace motzkin
