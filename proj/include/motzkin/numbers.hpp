#pragma once

#include "motzkin/bigint.hpp"

namespace motzkin {

/// Motzkin number M_n, from the recurrence
/// M_0 = 1, M_n = M_{n-1} + sum_{k=0}^{n-2} M_k * M_{n-2-k}.
/// Values are memoized process-wide; safe for concurrent callers.
BigInt motzkin(int n);

/// Number of Motzkin n-words that start with '(' (plus the word "0"):
/// U_0 = 0, U_1 = 1, U_n = M_n - M_{n-1} for n >= 2.
BigInt motzkin_increment(int n);

/// Catalan number binom(2k, k) / (k + 1).
BigInt catalan(int k);

/// Triangular number n(n+1)/2.
BigInt triangular(int n);

/// Tetrahedral number t(t+1)(t+2)/6, the running sum of triangular numbers.
BigInt tetrahedral(int t);

/// delta_r = U_{r+1} - M_{r-1}, defined for r >= 1.
BigInt delta(int r);

/// Exact binomial coefficient; zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

}  // namespace motzkin
