#pragma once

#include <vector>

#include "motzkin/bigint.hpp"
#include "motzkin/words.hpp"

// Deliberately naive reference implementations used only to validate the
// closed forms and the fast paths. Nothing here shares logic with the modules
// under test: enumeration filters the full 3^n alphabet product instead of
// generating successors.
namespace motzkin::oracle {

// Caps keep the naive filters at desk scale; exceeding them throws
// LengthTooLarge instead of hanging.
inline constexpr int max_enumerate_length = 14;
inline constexpr int max_rank_length = 10;
inline constexpr int max_count_length = 12;

using WordUniverse = std::vector<MotzkinWord>;

/// Every valid n-word, in compare order; the count is motzkin(n).
WordUniverse brute_enumerate(int n);

/// Position of w among the unique words of all lengths <= |w|, with "0" at
/// position 0. Requires a unique word (or "0").
BigInt brute_rank(const MotzkinWord& w);

/// Number of unique n-words with exactly k '(' symbols.
BigInt brute_count_pairs(int n, int k);

}  // namespace motzkin::oracle
