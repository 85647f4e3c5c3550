#include "pla/continued_fraction.hpp"

#include <stdexcept>

namespace pla {

namespace {

// State for the exact expansion of (P + sqrt(D))/Q with Q | D - P^2.
struct SurdState {
  BigInt P, D, Q, sqrtD;

  static SurdState from(const QuadraticIrrational& c) {
    if (c.is_rational())
      throw std::invalid_argument("cf_expansion: rational input");
    SurdState s;
    // (u + v*sqrt(d))/w == (P + sqrt(v^2 d))/Q after absorbing |v|, with the
    // sign of v folded by negating numerator and denominator.
    if (c.v() > 0) {
      s.P = c.u();
      s.Q = c.w();
    } else {
      s.P = -c.u();
      s.Q = -c.w();
    }
    s.D = c.v() * c.v() * c.d();
    BigInt rem = (s.D - s.P * s.P) % s.Q;
    if (rem != 0) {
      BigInt f = abs(s.Q);
      s.P *= f;
      s.D *= f * f;
      s.Q *= f;
    }
    s.sqrtD = isqrt(s.D);
    return s;
  }

  BigInt next_quotient() {
    // floor((P + sqrt(D))/Q); sqrt(D) is irrational so P + sqrt(D) lies
    // strictly inside (P + sqrtD, P + sqrtD + 1) and the floor transfers.
    BigInt a;
    if (Q > 0)
      a = floor_div(P + sqrtD, Q);
    else
      a = -(floor_div(P + sqrtD, -Q) + 1);
    BigInt P2 = a * Q - P;
    BigInt Q2 = (D - P2 * P2) / Q;
    P = P2;
    Q = Q2;
    return a;
  }
};

}  // namespace

std::vector<BigInt> cf_expansion(const QuadraticIrrational& c, std::size_t count) {
  if (count == 0)
    throw std::invalid_argument("cf_expansion: count must be >= 1");
  SurdState s = SurdState::from(c);
  std::vector<BigInt> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(s.next_quotient());
  return out;
}

std::vector<BigInt> cf_expansion_heuristic(const FixedReal& x, std::size_t count) {
  if (count == 0)
    throw std::invalid_argument("cf_expansion_heuristic: count must be >= 1");
  std::vector<BigInt> out;
  int fbits = x.frac_bits();
  BigInt num = x.mantissa();          // x = num / den
  BigInt den = BigInt(1) << static_cast<unsigned>(fbits);
  // Stop once the remainder drops below the precision floor: quotients past
  // that point would be artifacts of the fixed-point grid.
  BigInt floor_eps = BigInt(1) << static_cast<unsigned>(fbits / 2);
  for (std::size_t k = 0; k < count; ++k) {
    BigInt a = floor_div(num, den);
    out.push_back(a);
    BigInt rem = num - a * den;
    if (rem < floor_eps)
      break;
    num = den;
    den = rem;
  }
  return out;
}

std::vector<Convergent> convergents(const QuadraticIrrational& c, std::size_t count) {
  std::vector<BigInt> pq = cf_expansion(c, count);
  std::vector<Convergent> out;
  out.reserve(count);
  BigInt a_prev2 = 0, a_prev1 = 1;  // a_{-2}, a_{-1}
  BigInt q_prev2 = 1, q_prev1 = 0;
  for (std::size_t k = 0; k < pq.size(); ++k) {
    BigInt a = pq[k] * a_prev1 + a_prev2;
    BigInt q = pq[k] * q_prev1 + q_prev2;
    out.push_back(Convergent{k, a, q, pq[k]});
    a_prev2 = a_prev1;
    a_prev1 = a;
    q_prev2 = q_prev1;
    q_prev1 = q;
  }
  return out;
}

bool convergent_within_q2(const QuadraticIrrational& c, const Convergent& cv) {
  // |c - a/q| < 1/q^2  <=>  (c*q - a)*q in (-1, 1)
  QuadraticIrrational t = c.mul_int(cv.q).add_rational(-cv.a, 1).mul_int(cv.q);
  return t.add_rational(1, 1).sign() > 0 && t.add_rational(-1, 1).sign() < 0;
}

std::vector<std::uint64_t> sequence_S(const QuadraticIrrational& c, std::uint64_t n_max) {
  if (n_max == 0)
    throw std::invalid_argument("sequence_S: n_max must be >= 1");
  std::vector<std::uint64_t> out;
  SurdState s = SurdState::from(c);
  BigInt q_prev2 = 1, q_prev1 = 0;
  BigInt bound = n_max;
  for (;;) {
    BigInt pq = s.next_quotient();
    BigInt q = pq * q_prev1 + q_prev2;
    q_prev2 = q_prev1;
    q_prev1 = q;
    if (q * q > bound)
      break;
    auto qq = (q * q).convert_to<std::uint64_t>();
    if (out.empty() || out.back() != qq)
      out.push_back(qq);
  }
  return out;
}

std::optional<std::uint64_t> sequence_S_ceiling(const QuadraticIrrational& c, std::uint64_t x) {
  SurdState s = SurdState::from(c);
  BigInt q_prev2 = 1, q_prev1 = 0;
  BigInt bound = BigInt(x) * 1024;  // denominators grow geometrically; ample headroom
  for (;;) {
    BigInt pq = s.next_quotient();
    BigInt q = pq * q_prev1 + q_prev2;
    q_prev2 = q_prev1;
    q_prev1 = q;
    BigInt qq = q * q;
    if (qq >= x)
      return qq.convert_to<std::uint64_t>();
    if (qq > bound)
      return std::nullopt;
  }
}

RationalApprox rational_approx_at(const QuadraticIrrational& c, std::uint64_t N, int fbits) {
  BigInt root = isqrt(BigInt(N));
  if (root * root != N)
    throw std::invalid_argument("rational_approx_at: N is not a squared denominator");
  // Walk convergents until the denominator passes sqrt(N); keep the last
  // match so the repeated q=1 case picks the closer approximant.
  SurdState s = SurdState::from(c);
  BigInt a_prev2 = 0, a_prev1 = 1;
  BigInt q_prev2 = 1, q_prev1 = 0;
  std::optional<std::pair<BigInt, BigInt>> hit;
  for (int k = 0; k < 512; ++k) {
    BigInt pq = s.next_quotient();
    BigInt a = pq * a_prev1 + a_prev2;
    BigInt q = pq * q_prev1 + q_prev2;
    a_prev2 = a_prev1;
    a_prev1 = a;
    q_prev2 = q_prev1;
    q_prev1 = q;
    if (q == root)
      hit = {a, q};
    if (q > root)
      break;
  }
  if (!hit)
    throw std::invalid_argument("rational_approx_at: N is not in the denominator sequence");
  const auto& [a, q] = *hit;
  // beta = N*(c - a/q); |beta| <= 1 is certified on the surd, not the float.
  QuadraticIrrational beta_surd = c.mul_int(q).add_rational(-a, 1).mul_int(root);
  if (beta_surd.add_rational(1, 1).sign() < 0 || beta_surd.add_rational(-1, 1).sign() > 0)
    throw std::logic_error("rational_approx_at: |beta| <= 1 violated");
  RationalApprox r;
  r.a = a;
  r.q = root.convert_to<std::uint64_t>();
  r.beta = beta_surd.to_fixed(fbits);
  return r;
}

RealConstant RealConstant::from_surd(QuadraticIrrational q) {
  RealConstant r;
  r.text_ = q.str();
  r.surd_ = std::move(q);
  return r;
}

RealConstant RealConstant::from_fixed(FixedReal x, std::string text) {
  RealConstant r;
  r.fixed_ = std::move(x);
  r.text_ = std::move(text);
  return r;
}

RealConstant RealConstant::parse(std::string_view text, int fbits) {
  try {
    RealConstant r;
    r.surd_ = QuadraticIrrational::parse(text);
    r.text_ = std::string(text);
    return r;
  } catch (const std::invalid_argument&) {
    // fall through to a decimal literal, flagged heuristic
  }
  RealConstant r;
  r.fixed_ = FixedReal::from_decimal(text, fbits);
  r.text_ = std::string(text);
  return r;
}

const QuadraticIrrational& RealConstant::surd() const {
  if (!surd_)
    throw std::logic_error("RealConstant: '" + text_ +
                           "' is a heuristic (non-quadratic) constant");
  return *surd_;
}

FixedReal RealConstant::to_fixed(int fbits) const {
  if (surd_)
    return surd_->to_fixed(fbits);
  return fixed_.with_bits(fbits);
}

double RealConstant::to_double() const {
  return surd_ ? surd_->to_double() : fixed_.to_double();
}

}  // namespace pla
