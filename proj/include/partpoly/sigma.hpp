#pragma once

#include <cstdint>

namespace partpoly {

/// Sum of positive divisors of n. Memoized; reads of already-published
/// entries never block, so scans may call this concurrently.
/// Throws std::invalid_argument for n == 0.
std::int64_t sigma(unsigned long n);

/// Grow the memo table to cover 1..n up front (e.g. before a parallel scan).
void sigma_prefill(unsigned long n);

}  // namespace partpoly
