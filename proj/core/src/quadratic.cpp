#include "pla/quadratic.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>

namespace pla {

using boost::multiprecision::gcd;

BigInt isqrt(const BigInt& n) {
  if (n < 0)
    throw std::invalid_argument("isqrt: negative argument");
  return boost::multiprecision::sqrt(n);
}

bool is_squarefree_u64(std::uint64_t n) {
  if (n == 0)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % (d * d) == 0)
      return false;
  return true;
}

QuadraticIrrational::QuadraticIrrational(raw_tag, BigInt u, BigInt v, BigInt d, BigInt w)
    : u_(std::move(u)), v_(std::move(v)), d_(std::move(d)), w_(std::move(w)) {
  normalize();
}

QuadraticIrrational::QuadraticIrrational(BigInt u, BigInt v, BigInt d, BigInt w)
    : u_(std::move(u)), v_(std::move(v)), d_(std::move(d)), w_(std::move(w)) {
  if (w_ == 0)
    throw std::invalid_argument("QuadraticIrrational: w must be nonzero");
  if (v_ == 0)
    throw std::invalid_argument("QuadraticIrrational: v must be nonzero");
  if (d_ < 2)
    throw std::invalid_argument("QuadraticIrrational: d must be >= 2");
  if (d_ > BigInt(std::uint64_t(1) << 40))
    throw std::invalid_argument("QuadraticIrrational: d too large to validate squarefreeness");
  if (!is_squarefree_u64(d_.convert_to<std::uint64_t>()))
    throw std::invalid_argument("QuadraticIrrational: d must be squarefree");
  normalize();
}

void QuadraticIrrational::normalize() {
  if (w_ < 0) {
    u_ = -u_;
    v_ = -v_;
    w_ = -w_;
  }
  BigInt g = gcd(gcd(abs(u_), abs(v_)), w_);
  if (g > 1) {
    u_ /= g;
    v_ /= g;
    w_ /= g;
  }
}

int QuadraticIrrational::sign() const {
  // sign of u + v*sqrt(d), w > 0
  if (v_ == 0)
    return u_ == 0 ? 0 : (u_ < 0 ? -1 : 1);
  if (u_ >= 0 && v_ > 0)
    return 1;
  if (u_ <= 0 && v_ < 0)
    return -1;
  BigInt uu = u_ * u_, vv = v_ * v_ * d_;
  if (u_ > 0)  // v < 0: positive iff u^2 > v^2 d
    return uu > vv ? 1 : -1;
  return uu > vv ? -1 : 1;  // u < 0, v > 0
}

QuadraticIrrational QuadraticIrrational::operator-() const {
  return {raw_tag{}, -u_, -v_, d_, w_};
}

QuadraticIrrational QuadraticIrrational::operator+(const QuadraticIrrational& o) const {
  if (d_ != o.d_ && v_ != 0 && o.v_ != 0)
    throw std::invalid_argument("QuadraticIrrational: mixed radicands");
  const BigInt& d = v_ != 0 ? d_ : o.d_;
  return {raw_tag{}, u_ * o.w_ + o.u_ * w_, v_ * o.w_ + o.v_ * w_, d, w_ * o.w_};
}

QuadraticIrrational QuadraticIrrational::operator-(const QuadraticIrrational& o) const {
  return *this + (-o);
}

QuadraticIrrational QuadraticIrrational::operator*(const QuadraticIrrational& o) const {
  if (d_ != o.d_ && v_ != 0 && o.v_ != 0)
    throw std::invalid_argument("QuadraticIrrational: mixed radicands");
  const BigInt& d = v_ != 0 ? d_ : o.d_;
  return {raw_tag{}, u_ * o.u_ + v_ * o.v_ * d, u_ * o.v_ + v_ * o.u_, d, w_ * o.w_};
}

QuadraticIrrational QuadraticIrrational::add_rational(const BigInt& p, const BigInt& q) const {
  if (q == 0)
    throw std::invalid_argument("add_rational: zero denominator");
  return {raw_tag{}, u_ * q + p * w_, v_ * q, d_, w_ * q};
}

QuadraticIrrational QuadraticIrrational::mul_int(const BigInt& n) const {
  return {raw_tag{}, u_ * n, v_ * n, d_, w_};
}

QuadraticIrrational QuadraticIrrational::div_int(const BigInt& n) const {
  if (n == 0)
    throw std::invalid_argument("div_int: zero divisor");
  return {raw_tag{}, u_, v_, d_, w_ * n};
}

int QuadraticIrrational::compare_rational(const BigInt& p, const BigInt& q) const {
  return add_rational(-p, q).sign();
}

BigInt QuadraticIrrational::floor() const {
  // floor((u + v*sqrt(d))/w) with w > 0.  v*sqrt(d) lies strictly between
  // consecutive integers, so the inner floor transfers through the division.
  BigInt inner;
  if (v_ == 0)
    inner = 0;
  else if (v_ > 0)
    inner = isqrt(v_ * v_ * d_);
  else
    inner = -isqrt(v_ * v_ * d_) - 1;
  return floor_div(u_ + inner, w_);
}

FixedReal QuadraticIrrational::to_fixed(int fbits) const {
  BigInt scale = BigInt(1) << static_cast<unsigned>(fbits);
  BigInt num = u_ * scale;
  if (v_ != 0) {
    BigInt t = abs(v_) * scale;
    BigInt r = isqrt(t * t * d_);
    num += v_ > 0 ? r : -r - 1;
  }
  return FixedReal::from_mantissa(floor_div(num, w_), fbits);
}

double QuadraticIrrational::to_double() const { return to_fixed(128).to_double(); }

std::string QuadraticIrrational::str() const {
  return "(" + u_.str() + "+" + v_.str() + "*sqrt(" + d_.str() + "))/" + w_.str();
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool eat_word(std::string_view w) {
    skip_ws();
    if (s.substr(i, w.size()) == w) {
      i += w.size();
      return true;
    }
    return false;
  }
  bool parse_nat(BigInt& out) {
    skip_ws();
    std::size_t j = i;
    BigInt r = 0;
    while (j < s.size() && s[j] >= '0' && s[j] <= '9') {
      r = r * 10 + (s[j] - '0');
      ++j;
    }
    if (j == i)
      return false;
    i = j;
    out = r;
    return true;
  }
  bool done() {
    skip_ws();
    return i == s.size();
  }
};

// term := [nat '*'] 'sqrt' ( '(' nat ')' | nat )  or a bare integer
// expr := ['-'] term [('+'|'-') term]
// full := expr | '(' expr ')' [ '/' nat ]
bool parse_term(Cursor& c, BigInt& coeff, BigInt& rad, bool& has_rad) {
  has_rad = false;
  BigInt n = 1;
  bool had_num = c.parse_nat(n);
  if (had_num && !c.eat('*')) {
    // plain integer term unless "sqrt" follows directly (e.g. "2sqrt2" is rejected)
    if (c.eat_word("sqrt"))
      return false;
    coeff = n;
    return true;
  }
  if (!c.eat_word("sqrt")) {
    if (had_num) {
      coeff = n;
      return true;
    }
    return false;
  }
  BigInt d;
  if (c.eat('(')) {
    if (!c.parse_nat(d) || !c.eat(')'))
      return false;
  } else if (!c.parse_nat(d)) {
    return false;
  }
  coeff = n;
  rad = d;
  has_rad = true;
  return true;
}

bool parse_expr(Cursor& c, BigInt& u, BigInt& v, BigInt& d) {
  u = 0;
  v = 0;
  d = 0;
  int sign = c.eat('-') ? -1 : 1;
  for (int k = 0; k < 2; ++k) {
    BigInt coeff, rad;
    bool has_rad = false;
    if (!parse_term(c, coeff, rad, has_rad))
      return false;
    if (has_rad) {
      if (v != 0)
        return false;
      v = sign * coeff;
      d = rad;
    } else {
      if (u != 0)
        return false;
      u = sign * coeff;
    }
    if (c.eat('+'))
      sign = 1;
    else if (c.eat('-'))
      sign = -1;
    else
      break;
  }
  return true;
}

}  // namespace

QuadraticIrrational QuadraticIrrational::parse(std::string_view text) {
  if (text == "sqrt2")
    return {0, 1, 2, 1};
  if (text == "golden")
    return {1, 1, 5, 2};
  if (text == "1+sqrt3")
    return {1, 1, 3, 1};

  Cursor c{text};
  BigInt u, v, d, w = 1;
  bool ok = false;
  if (c.eat('(')) {
    ok = parse_expr(c, u, v, d) && c.eat(')');
    if (ok && c.eat('/'))
      ok = c.parse_nat(w);
  } else {
    ok = parse_expr(c, u, v, d);
  }
  if (!ok || !c.done() || v == 0)
    throw std::invalid_argument("QuadraticIrrational::parse: bad constant '" + std::string(text) +
                                "'");
  return {u, v, d, w};
}

}  // namespace pla
