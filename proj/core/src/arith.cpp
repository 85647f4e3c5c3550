#include "pla/arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pla/primes.hpp"

namespace pla {

double von_mangoldt(std::uint64_t n) {
  if (n == 0)
    throw std::invalid_argument("von_mangoldt: n must be >= 1");
  if (n == 1)
    return 0.0;
  // strip the smallest prime factor; n is a prime power iff nothing else remains
  std::uint64_t p = 0;
  std::uint64_t m = n;
  if (m % 2 == 0)
    p = 2;
  else {
    for (std::uint64_t d = 3; d * d <= m; d += 2)
      if (m % d == 0) {
        p = d;
        break;
      }
    if (p == 0)
      return std::log(static_cast<double>(n));  // n prime
  }
  while (m % p == 0) m /= p;
  return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

std::vector<std::pair<std::uint64_t, double>> von_mangoldt_range(std::uint64_t lo,
                                                                 std::uint64_t hi) {
  if (lo == 0 || hi < lo)
    throw std::invalid_argument("von_mangoldt_range: need 1 <= lo <= hi");
  std::vector<std::pair<std::uint64_t, double>> out;
  PrimeTable seg = sieve_primes(std::max<std::uint64_t>(lo, 2), std::max<std::uint64_t>(hi, 2));
  for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n <= hi; ++n)
    if (seg.contains(n))
      out.emplace_back(n, std::log(static_cast<double>(n)));
  // proper powers p^k, k >= 2, have p <= sqrt(hi)
  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi)));
  while ((root + 1) * (root + 1) <= hi) ++root;
  if (root >= 2) {
    PrimeTable small = sieve_primes(2, root);
    for (std::uint64_t p = 2; p <= root; ++p) {
      if (!small.contains(p))
        continue;
      double lp = std::log(static_cast<double>(p));
      for (std::uint64_t q = p * p;; q *= p) {
        if (q >= lo && q <= hi)
          out.emplace_back(q, lp);
        if (q > hi / p)
          break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int moebius(std::uint64_t n) {
  if (n == 0)
    throw std::invalid_argument("moebius: n must be >= 1");
  int factors = 0;
  auto strip = [&](std::uint64_t p) -> bool {
    if (n % p != 0)
      return true;
    n /= p;
    if (n % p == 0)
      return false;  // square factor
    ++factors;
    return true;
  };
  if (!strip(2))
    return 0;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (!strip(d))
      return 0;
  if (n > 1)
    ++factors;
  return factors % 2 == 0 ? 1 : -1;
}

std::uint64_t divisor_count(std::uint64_t n) {
  if (n == 0)
    throw std::invalid_argument("divisor_count: n must be >= 1");
  std::uint64_t tau = 1;
  auto strip = [&](std::uint64_t p) {
    std::uint64_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    tau *= e + 1;
  };
  strip(2);
  for (std::uint64_t d = 3; d * d <= n; d += 2) strip(d);
  if (n > 1)
    tau *= 2;
  return tau;
}

std::vector<std::uint32_t> divisor_count_table(std::uint64_t n) {
  std::vector<std::uint32_t> tau(n + 1, 0);
  for (std::uint64_t d = 1; d <= n; ++d)
    for (std::uint64_t m = d; m <= n; m += d) ++tau[m];
  return tau;
}

}  // namespace pla
