#include "pla/primes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace pla {

namespace {

constexpr std::uint64_t kSegmentSpan = 1u << 18;
constexpr char kMagic[8] = {'P', 'L', 'A', 'P', 'R', 'I', 'M', '1'};

std::vector<std::uint64_t> small_primes_upto(std::uint64_t n) {
  std::vector<std::uint8_t> is(n + 1, 1);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (!is[i])
      continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) is[j] = 0;
  }
  return out;
}

}  // namespace

std::uint64_t PrimeTable::count() const { return count_in(lo_, hi_); }

std::uint64_t PrimeTable::count_in(std::uint64_t a, std::uint64_t b) const {
  a = std::max(a, lo_);
  b = std::min(b, hi_);
  std::uint64_t c = 0;
  for (std::uint64_t n = a; n <= b; ++n)
    c += contains(n) ? 1 : 0;  // bit scan is fine at the scales used
  return c;
}

std::vector<std::uint64_t> PrimeTable::to_vector() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = lo_; n <= hi_; ++n)
    if (contains(n))
      out.push_back(n);
  return out;
}

void PrimeTable::save(const std::string& path) const {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f)
    throw std::runtime_error("PrimeTable::save: cannot open " + path);
  f.write(kMagic, 8);
  auto put_u64 = [&f](std::uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    f.write(b, 8);
  };
  put_u64(lo_);
  put_u64(hi_);
  std::uint64_t nbytes = (hi_ - lo_ + 1 + 7) / 8;
  std::vector<char> bytes(nbytes, 0);
  for (std::uint64_t i = 0; i < hi_ - lo_ + 1; ++i)
    if ((bits_[i >> 6] >> (i & 63)) & 1u)
      bytes[i >> 3] |= static_cast<char>(1u << (i & 7));
  f.write(bytes.data(), static_cast<std::streamsize>(nbytes));
}

PrimeTable PrimeTable::load(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f)
    throw std::runtime_error("PrimeTable::load: cannot open " + path);
  char magic[8];
  f.read(magic, 8);
  if (!f || std::memcmp(magic, kMagic, 8) != 0)
    throw std::runtime_error("PrimeTable::load: bad magic");
  auto get_u64 = [&f]() {
    char b[8];
    f.read(b, 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(b[i])) << (8 * i);
    return v;
  };
  std::uint64_t lo = get_u64();
  std::uint64_t hi = get_u64();
  if (!f || lo == 0 || hi < lo)
    throw std::runtime_error("PrimeTable::load: bad header");
  std::uint64_t span = hi - lo + 1;
  std::uint64_t nbytes = (span + 7) / 8;
  std::vector<char> bytes(nbytes);
  f.read(bytes.data(), static_cast<std::streamsize>(nbytes));
  if (!f)
    throw std::runtime_error("PrimeTable::load: truncated file");
  std::vector<std::uint64_t> words((span + 63) / 64, 0);
  for (std::uint64_t i = 0; i < span; ++i)
    if ((static_cast<unsigned char>(bytes[i >> 3]) >> (i & 7)) & 1u)
      words[i >> 6] |= std::uint64_t(1) << (i & 63);
  return PrimeTable(lo, hi, std::move(words));
}

PrimeTable sieve_primes(std::uint64_t lo, std::uint64_t hi) {
  if (lo == 0 || hi < lo)
    throw std::invalid_argument("sieve_primes: need 1 <= lo <= hi");
  std::uint64_t span = hi - lo + 1;
  std::vector<std::uint64_t> words((span + 63) / 64, 0);
  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi)));
  while ((root + 1) * (root + 1) <= hi) ++root;
  std::vector<std::uint64_t> base = root >= 2 ? small_primes_upto(root) : std::vector<std::uint64_t>{};

  std::vector<std::uint8_t> seg(kSegmentSpan);
  for (std::uint64_t start = lo; start <= hi; start += kSegmentSpan) {
    std::uint64_t end = std::min(hi, start + kSegmentSpan - 1);
    std::uint64_t len = end - start + 1;
    std::fill(seg.begin(), seg.begin() + len, 1);
    if (start <= 1)
      seg[0] = 0;  // start == 1
    for (std::uint64_t p : base) {
      std::uint64_t first = std::max(p * p, ((start + p - 1) / p) * p);
      if (first > end)
        continue;
      for (std::uint64_t m = first; m <= end; m += p) seg[m - start] = 0;
    }
    for (std::uint64_t i = 0; i < len; ++i)
      if (seg[i]) {
        std::uint64_t off = start - lo + i;
        words[off >> 6] |= std::uint64_t(1) << (off & 63);
      }
  }
  return PrimeTable(lo, hi, std::move(words));
}

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

bool validate_segment(const PrimeTable& t) {
  std::uint64_t span = t.hi() - t.lo() + 1;
  std::uint64_t want = std::min<std::uint64_t>(span, 4096);
  std::uint64_t off = span > want ? mix64(t.lo() ^ (t.hi() << 1)) % (span - want + 1) : 0;
  std::uint64_t a = t.lo() + off, b = a + want - 1;
  PrimeTable fresh = sieve_primes(a, b);
  for (std::uint64_t n = a; n <= b; ++n)
    if (fresh.contains(n) != t.contains(n))
      return false;
  return true;
}

}  // namespace

PrimeTable cached_sieve_primes(std::uint64_t lo, std::uint64_t hi, const std::string& dir) {
  std::string root = dir;
  if (root.empty()) {
    const char* env = std::getenv("PLA_CACHE_DIR");
    if (env != nullptr)
      root = env;
  }
  if (root.empty())
    return sieve_primes(lo, hi);

  std::filesystem::create_directories(root);
  std::string path = root + "/primes_" + std::to_string(lo) + "_" + std::to_string(hi) + ".bin";
  if (std::filesystem::exists(path)) {
    try {
      PrimeTable t = PrimeTable::load(path);
      if (t.lo() == lo && t.hi() == hi && validate_segment(t))
        return t;
      std::fprintf(stderr, "primeline: stale prime cache %s, resieving\n", path.c_str());
    } catch (const std::exception& e) {
      std::fprintf(stderr, "primeline: unreadable prime cache %s (%s), resieving\n", path.c_str(),
                   e.what());
    }
  }
  PrimeTable t = sieve_primes(lo, hi);
  try {
    t.save(path);
  } catch (const std::exception&) {
    // cache is best effort
  }
  return t;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2)
    return false;
  if (n % 2 == 0)
    return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0)
      return false;
  return true;
}

}  // namespace pla
