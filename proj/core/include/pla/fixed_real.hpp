// Deterministic fixed-point reals.
//
// FixedReal is a signed fixed-point number with an arbitrary-size integer
// part and a configurable number F of fraction bits (F >= 96, default 128).
// Multiplication by a machine-word natural is exact, so quantities like
// p*alpha keep their full F fraction bits with no rounding at all.
//
// Frac128 is the hot-loop companion: a bare 128-bit fraction in [0,1) whose
// addition wraps mod 1 and whose multiplication by a 64-bit natural is exact
// mod 1.  Phase walks like frac(h*c*n) for n = lo..hi reduce to one 128-bit
// add per step and never lose precision to cancellation.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

namespace pla {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kDefaultFracBits = 128;
inline constexpr int kMinFracBits = 96;

// floor(x / 2^k) for signed big integers (shift that rounds toward -inf).
BigInt shift_right_floor(const BigInt& x, unsigned k);
// floor(num / den), den > 0.
BigInt floor_div(const BigInt& num, const BigInt& den);

// 128-bit fraction in [0,1): value = (hi*2^64 + lo) / 2^128.
struct Frac128 {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;

  // Addition wraps mod 1 and is exact.
  Frac128& operator+=(const Frac128& o) {
    lo += o.lo;
    hi += o.hi + (lo < o.lo ? 1u : 0u);
    return *this;
  }
  friend Frac128 operator+(Frac128 a, const Frac128& b) { return a += b; }

  // frac(m * x), exact: the 192-bit product is reduced mod 2^128.
  Frac128 mul_u64(std::uint64_t m) const {
    unsigned __int128 p0 = static_cast<unsigned __int128>(lo) * m;
    unsigned __int128 p1 =
        static_cast<unsigned __int128>(hi) * m + static_cast<std::uint64_t>(p0 >> 64);
    return Frac128{static_cast<std::uint64_t>(p1), static_cast<std::uint64_t>(p0)};
  }

  // 1 - x mod 1 (0 maps to 0); this is frac(-x) for x != 0.
  Frac128 complement() const {
    Frac128 r;
    r.lo = ~lo + 1;
    r.hi = ~hi + (lo == 0 ? 1u : 0u);
    return r;
  }

  double to_double() const { return hi * 0x1p-64 + lo * 0x1p-128; }

  // Distance to the nearest integer of the represented value, in [0, 1/2].
  double dist_to_int() const {
    if (hi >> 63)
      return complement().to_double();
    return to_double();
  }

  friend bool operator<(const Frac128& a, const Frac128& b) {
    return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo;
  }
  friend bool operator==(const Frac128& a, const Frac128& b) {
    return a.hi == b.hi && a.lo == b.lo;
  }

  // Exact embedding of a double in [0,1); bits below 2^-128 are dropped.
  static Frac128 from_double(double x);
};

class FixedReal {
 public:
  FixedReal() : mant_(0), fbits_(kDefaultFracBits) {}
  explicit FixedReal(int fbits) : mant_(0), fbits_(check_bits(fbits)) {}

  static FixedReal from_mantissa(BigInt mant, int fbits);
  static FixedReal from_int(const BigInt& n, int fbits = kDefaultFracBits);
  // Exact: doubles are dyadic rationals.  Bits below 2^-fbits are floored away.
  static FixedReal from_double(double x, int fbits = kDefaultFracBits);
  // Parses [+-]ddd[.ddd]; the fraction is rounded to the nearest 2^-fbits grid.
  static FixedReal from_decimal(std::string_view s, int fbits = kDefaultFracBits);

  int frac_bits() const { return fbits_; }
  const BigInt& mantissa() const { return mant_; }

  // The (sign, integer_part, fraction) view: value = sign*(integer_part + fraction/2^F).
  int sign() const { return mant_ < 0 ? -1 : 1; }
  BigInt integer_part() const;
  BigInt fraction_part() const;

  bool is_zero() const { return mant_ == 0; }

  BigInt floor() const { return shift_right_floor(mant_, static_cast<unsigned>(fbits_)); }
  BigInt ceil() const;
  FixedReal frac() const;  // x - floor(x), in [0,1)
  Frac128 frac128() const;

  FixedReal operator-() const;
  FixedReal operator+(const FixedReal& o) const;
  FixedReal operator-(const FixedReal& o) const;
  // Truncating product (result keeps max(Fa, Fb) fraction bits).
  FixedReal operator*(const FixedReal& o) const;
  FixedReal mul_nat(std::uint64_t n) const;  // exact
  FixedReal div_nat(std::uint64_t n) const;  // floored, error < 2^-F
  // Full-precision product: result has Fa+Fb fraction bits, no rounding.
  FixedReal mul_exact(const FixedReal& o) const;

  // Exact rescale when widening; floored when narrowing.
  FixedReal with_bits(int fbits) const;

  int compare(const FixedReal& o) const;
  bool operator<(const FixedReal& o) const { return compare(o) < 0; }
  bool operator<=(const FixedReal& o) const { return compare(o) <= 0; }
  bool operator>(const FixedReal& o) const { return compare(o) > 0; }
  bool operator>=(const FixedReal& o) const { return compare(o) >= 0; }
  bool operator==(const FixedReal& o) const { return compare(o) == 0; }

  double to_double() const;

  // Round-trip digits: ceil(F*log10(2)), enough that parsing recovers the value.
  int roundtrip_digits() const;
  std::string to_decimal_string() const;
  std::string to_decimal_string(int digits) const;

 private:
  static int check_bits(int fbits);
  BigInt mant_;  // value = mant / 2^fbits
  int fbits_;
};

// min over integers m of |x - m|, in [0, 1/2].
double dist_nearest_int(const FixedReal& x);

// exp(2*pi*i*frac(x)), phase reduced mod 1 in fixed point first.
std::complex<double> e_frac(const FixedReal& x);

}  // namespace pla
