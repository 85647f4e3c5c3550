#include "pla/fixed_real.hpp"

#include <cmath>
#include <stdexcept>

namespace pla {

BigInt shift_right_floor(const BigInt& x, unsigned k) {
  if (x >= 0)
    return x >> k;
  // (-x) >> k truncates toward zero on the magnitude, so adjust for remainder.
  BigInt q = (-x) >> k;
  if ((q << k) != -x)
    ++q;
  return -q;
}

BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;  // truncates toward zero
  if ((q * den != num) && ((num < 0) != (den < 0)))
    --q;
  return q;
}

Frac128 Frac128::from_double(double x) {
  if (!(x >= 0.0 && x < 1.0))
    throw std::invalid_argument("Frac128::from_double: need x in [0,1)");
  double hi_part = std::floor(std::ldexp(x, 64));
  double lo_part = std::floor(std::ldexp(x - std::ldexp(hi_part, -64), 128));
  Frac128 r;
  r.hi = static_cast<std::uint64_t>(hi_part);
  r.lo = static_cast<std::uint64_t>(lo_part);
  return r;
}

int FixedReal::check_bits(int fbits) {
  if (fbits < kMinFracBits)
    throw std::invalid_argument("FixedReal: fraction bits must be >= 96");
  return fbits;
}

FixedReal FixedReal::from_mantissa(BigInt mant, int fbits) {
  FixedReal r(check_bits(fbits));
  r.mant_ = std::move(mant);
  return r;
}

FixedReal FixedReal::from_int(const BigInt& n, int fbits) {
  return from_mantissa(n << static_cast<unsigned>(check_bits(fbits)), fbits);
}

FixedReal FixedReal::from_double(double x, int fbits) {
  check_bits(fbits);
  if (!std::isfinite(x))
    throw std::invalid_argument("FixedReal::from_double: non-finite input");
  int exp = 0;
  double m = std::frexp(x, &exp);                       // x = m * 2^exp, |m| in [0.5, 1)
  auto mi = static_cast<long long>(std::ldexp(m, 53));  // 53-bit integer significand
  BigInt mant(mi);
  int shift = exp - 53 + fbits;
  if (shift >= 0)
    mant <<= static_cast<unsigned>(shift);
  else
    mant = shift_right_floor(mant, static_cast<unsigned>(-shift));
  return from_mantissa(std::move(mant), fbits);
}

namespace {

BigInt pow10(int k) {
  BigInt r = 1;
  for (int i = 0; i < k; ++i) r *= 10;
  return r;
}

}  // namespace

FixedReal FixedReal::from_decimal(std::string_view s, int fbits) {
  check_bits(fbits);
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  BigInt ipart = 0;
  bool any = false;
  for (; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i) {
    ipart = ipart * 10 + (s[i] - '0');
    any = true;
  }
  BigInt fnum = 0;
  int fdigits = 0;
  if (i < s.size() && s[i] == '.') {
    ++i;
    for (; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i) {
      fnum = fnum * 10 + (s[i] - '0');
      ++fdigits;
      any = true;
    }
  }
  if (!any || i != s.size())
    throw std::invalid_argument("FixedReal::from_decimal: bad literal '" + std::string(s) + "'");
  BigInt den = pow10(fdigits);
  // round-half-up to the 2^-fbits grid
  BigInt frac_mant = ((fnum << static_cast<unsigned>(fbits)) * 2 + den) / (den * 2);
  BigInt mant = (ipart << static_cast<unsigned>(fbits)) + frac_mant;
  if (neg)
    mant = -mant;
  return from_mantissa(std::move(mant), fbits);
}

BigInt FixedReal::integer_part() const {
  BigInt a = mant_ < 0 ? BigInt(-mant_) : mant_;
  return a >> static_cast<unsigned>(fbits_);
}

BigInt FixedReal::fraction_part() const {
  BigInt a = mant_ < 0 ? BigInt(-mant_) : mant_;
  return a - ((a >> static_cast<unsigned>(fbits_)) << static_cast<unsigned>(fbits_));
}

BigInt FixedReal::ceil() const {
  return -shift_right_floor(-mant_, static_cast<unsigned>(fbits_));
}

FixedReal FixedReal::frac() const {
  BigInt f = mant_ - (floor() << static_cast<unsigned>(fbits_));
  return from_mantissa(std::move(f), fbits_);
}

Frac128 FixedReal::frac128() const {
  BigInt f = frac().mantissa();
  if (fbits_ >= 128)
    f >>= static_cast<unsigned>(fbits_ - 128);
  else
    f <<= static_cast<unsigned>(128 - fbits_);
  Frac128 r;
  r.lo = static_cast<std::uint64_t>(f & BigInt(~std::uint64_t(0)));
  r.hi = static_cast<std::uint64_t>((f >> 64) & BigInt(~std::uint64_t(0)));
  return r;
}

FixedReal FixedReal::operator-() const { return from_mantissa(-mant_, fbits_); }

FixedReal FixedReal::operator+(const FixedReal& o) const {
  if (fbits_ == o.fbits_)
    return from_mantissa(mant_ + o.mant_, fbits_);
  int f = std::max(fbits_, o.fbits_);
  return with_bits(f) + o.with_bits(f);
}

FixedReal FixedReal::operator-(const FixedReal& o) const { return *this + (-o); }

FixedReal FixedReal::operator*(const FixedReal& o) const {
  int f = std::max(fbits_, o.fbits_);
  BigInt prod = mant_ * o.mant_;
  return from_mantissa(shift_right_floor(prod, static_cast<unsigned>(fbits_ + o.fbits_ - f)), f);
}

FixedReal FixedReal::mul_exact(const FixedReal& o) const {
  return from_mantissa(mant_ * o.mant_, fbits_ + o.fbits_);
}

FixedReal FixedReal::mul_nat(std::uint64_t n) const {
  return from_mantissa(mant_ * BigInt(n), fbits_);
}

FixedReal FixedReal::div_nat(std::uint64_t n) const {
  if (n == 0)
    throw std::invalid_argument("FixedReal::div_nat: division by zero");
  return from_mantissa(floor_div(mant_, BigInt(n)), fbits_);
}

FixedReal FixedReal::with_bits(int fbits) const {
  check_bits(fbits);
  if (fbits == fbits_)
    return *this;
  if (fbits > fbits_)
    return from_mantissa(mant_ << static_cast<unsigned>(fbits - fbits_), fbits);
  return from_mantissa(shift_right_floor(mant_, static_cast<unsigned>(fbits_ - fbits)), fbits);
}

int FixedReal::compare(const FixedReal& o) const {
  BigInt a = mant_, b = o.mant_;
  if (fbits_ < o.fbits_)
    a <<= static_cast<unsigned>(o.fbits_ - fbits_);
  else if (o.fbits_ < fbits_)
    b <<= static_cast<unsigned>(fbits_ - o.fbits_);
  return a < b ? -1 : (a == b ? 0 : 1);
}

double FixedReal::to_double() const {
  return std::ldexp(mant_.convert_to<double>(), -fbits_);
}

int FixedReal::roundtrip_digits() const {
  return static_cast<int>(std::ceil(fbits_ * 0.30102999566398120));
}

std::string FixedReal::to_decimal_string() const { return to_decimal_string(roundtrip_digits()); }

std::string FixedReal::to_decimal_string(int digits) const {
  BigInt a = mant_ < 0 ? BigInt(-mant_) : mant_;
  BigInt ip = a >> static_cast<unsigned>(fbits_);
  BigInt fr = a - (ip << static_cast<unsigned>(fbits_));
  BigInt scale = pow10(digits);
  // round-half-up on the last kept digit
  BigInt dec = ((fr * scale) * 2 + (BigInt(1) << static_cast<unsigned>(fbits_))) >>
               static_cast<unsigned>(fbits_ + 1);
  if (dec >= scale) {  // carry out of the fraction
    dec -= scale;
    ++ip;
  }
  std::string frac_str = dec.str();
  if (static_cast<int>(frac_str.size()) < digits)
    frac_str.insert(0, digits - frac_str.size(), '0');
  std::string out;
  if (mant_ < 0)
    out += '-';
  out += ip.str();
  if (digits > 0) {
    out += '.';
    out += frac_str;
  }
  return out;
}

double dist_nearest_int(const FixedReal& x) {
  FixedReal f = x.frac();
  FixedReal one_minus = FixedReal::from_int(1, f.frac_bits()) - f;
  return std::min(f.to_double(), one_minus.to_double());
}

std::complex<double> e_frac(const FixedReal& x) {
  double f = x.frac().to_double();
  double ang = 2.0 * M_PI * f;
  return {std::cos(ang), std::sin(ang)};
}

}  // namespace pla
