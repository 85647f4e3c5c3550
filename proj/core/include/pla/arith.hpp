// Arithmetic functions: von Mangoldt, Moebius, divisor count.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace pla {

// log p if n = p^k, else 0.  Throws std::invalid_argument for n = 0.
double von_mangoldt(std::uint64_t n);

// All (n, log p) with n = p^k in [lo, hi], ascending in n.  Sieve driven, so
// bulk windows cost O((hi-lo) log log hi) instead of per-element factoring.
std::vector<std::pair<std::uint64_t, double>> von_mangoldt_range(std::uint64_t lo,
                                                                 std::uint64_t hi);

// Moebius function, in {-1, 0, 1}.  Throws for n = 0.
int moebius(std::uint64_t n);

// Number of divisors tau(n).  Throws for n = 0.
std::uint64_t divisor_count(std::uint64_t n);

// tau(1..n) by the divisor sieve (test oracle helper, O(n log n)).
std::vector<std::uint32_t> divisor_count_table(std::uint64_t n);

}  // namespace pla
