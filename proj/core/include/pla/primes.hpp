// Segmented sieve of Eratosthenes and the PrimeTable bit-vector.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pla {

// Prime membership for the inclusive range [lo, hi], one bit per integer.
class PrimeTable {
 public:
  PrimeTable() = default;
  PrimeTable(std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t> bits)
      : lo_(lo), hi_(hi), bits_(std::move(bits)) {}

  std::uint64_t lo() const { return lo_; }
  std::uint64_t hi() const { return hi_; }

  bool contains(std::uint64_t n) const {
    if (n < lo_ || n > hi_)
      return false;
    std::uint64_t i = n - lo_;
    return (bits_[i >> 6] >> (i & 63)) & 1u;
  }

  std::uint64_t count() const;
  std::uint64_t count_in(std::uint64_t a, std::uint64_t b) const;  // primes in [a,b]
  std::vector<std::uint64_t> to_vector() const;

  // Raw little-endian dump with a 24-byte header: magic "PLAPRIM1", lo, hi.
  void save(const std::string& path) const;
  // Throws std::runtime_error on bad magic / size; the caller revalidates.
  static PrimeTable load(const std::string& path);

  const std::vector<std::uint64_t>& words() const { return bits_; }

 private:
  std::uint64_t lo_ = 1, hi_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Exact prime membership for [lo, hi]; memory O(hi-lo) plus O(sqrt(hi)).
// Throws std::invalid_argument if hi < lo or lo == 0.
PrimeTable sieve_primes(std::uint64_t lo, std::uint64_t hi);

// sieve_primes with an optional on-disk cache rooted at dir (or the
// PLA_CACHE_DIR environment variable when dir is empty).  A loaded table is
// validated by re-sieving a pseudo-randomly chosen sub-segment; on any
// mismatch the cache file is ignored and the table recomputed.
PrimeTable cached_sieve_primes(std::uint64_t lo, std::uint64_t hi, const std::string& dir = "");

// Deterministic trial division; oracle-grade, fine up to ~1e14.
bool is_prime_u64(std::uint64_t n);

}  // namespace pla
