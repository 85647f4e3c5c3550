#include "pla/vaaler.hpp"

#include <cmath>
#include <stdexcept>

namespace pla {

double psi(double x) { return x - std::floor(x) - 0.5; }

double vaaler_w(double t) {
  double at = std::fabs(t);
  if (at == 0.0 || at >= 1.0)
    throw std::invalid_argument("vaaler_w: need 0 < |t| < 1");
  double pt = M_PI * t;
  double core;  // pi*t*cot(pi*t)
  if (at < 1e-4) {
    double s = pt * pt;
    core = 1.0 - s / 3.0 - s * s / 45.0;
  } else {
    core = pt * std::cos(pt) / std::sin(pt);
  }
  return core * (1.0 - at) + at;
}

VaalerKernel::VaalerKernel(int J) : J_(J) {
  if (J < 1)
    throw std::invalid_argument("VaalerKernel: J must be >= 1");
  w_.resize(J);
  tri_.resize(J + 1);
  tri_[0] = 1.0;
  for (int j = 1; j <= J; ++j) {
    double t = static_cast<double>(j) / (J + 1);
    w_[j - 1] = vaaler_w(t);
    tri_[j] = 1.0 - t;
  }
}

double psi_star(double x, const VaalerKernel& k) {
  double acc = 0.0;
  double two_pi_x = 2.0 * M_PI * x;
  for (int j = 1; j <= k.J(); ++j)
    acc += k.weights()[j - 1] * std::sin(two_pi_x * j) / j;
  return -acc / M_PI;
}

double delta_j(double x, const VaalerKernel& k) {
  double acc = 1.0;
  double two_pi_x = 2.0 * M_PI * x;
  for (int j = 1; j <= k.J(); ++j)
    acc += 2.0 * k.triangle()[j] * std::cos(two_pi_x * j);
  return acc / (2.0 * k.J() + 2.0);
}

}  // namespace pla
