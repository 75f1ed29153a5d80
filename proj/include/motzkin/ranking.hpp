#pragma once

#include <mutex>
#include <vector>

#include "motzkin/bigint.hpp"
#include "motzkin/words.hpp"

namespace motzkin {

/// A word's 0-based index in the row of unique words; weight 0 is "0".
using Weight = BigInt;

/// c(l, h): number of symbol sequences of length l that take bracket-nesting
/// height h down to 0 without going negative. Kernel of rank/unrank.
///
///   c(0, 0) = 1,  c(0, h) = 0 for h > 0,
///   c(l, h) = c(l-1, h) + c(l-1, h+1) + [h > 0] c(l-1, h-1).
///
/// Marginals tie it to the sequences: c(l, 0) = M_l and c(n-1, 1) = U_n.
class CompletionTable {
 public:
  /// Value of c(length, height); grows the memo on demand. Each entry is
  /// computed once and may be read concurrently afterwards.
  BigInt at(int length, int height);

 private:
  std::mutex mu_;
  std::vector<std::vector<BigInt>> rows_;  // rows_[l][h], 0 <= h <= l
};

/// Process-wide completion count c(length, height).
BigInt completion_count(int length, int height);

/// 0-based position of w in the row. Leading zeros are stripped first; the
/// word "0" has weight 0, and any longer all-zero word throws NotInRow.
/// Computed as M_{n-1} plus the number of smaller unique n-words, counted by
/// a single left-to-right pass over the completion table.
Weight rank(const MotzkinWord& w);

/// Inverse of rank: the unique word at the given index.
MotzkinWord unrank(const Weight& index);

}  // namespace motzkin
