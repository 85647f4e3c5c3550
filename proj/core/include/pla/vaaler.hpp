// Sawtooth psi, Vaaler's trigonometric approximation psi* and its Fejer
// majorant delta_J:  |psi*(x) - psi(x)| <= delta_J(x) for all real x.

#pragma once

#include <vector>

namespace pla {

// psi(x) = x - floor(x) - 1/2, in [-1/2, 1/2).
double psi(double x);

// W(t) = pi*t*(1-|t|)*cot(pi*t) + |t| for 0 < |t| < 1.  Near t = 0 the
// product pi*t*cot(pi*t) is evaluated by its even Taylor expansion.
double vaaler_w(double t);

// Precomputed weights for a fixed J: W(j/(J+1)) for 1<=j<=J and the Fejer
// triangle 1 - |j|/(J+1) for |j| <= J.  Immutable and shareable.
class VaalerKernel {
 public:
  explicit VaalerKernel(int J);

  int J() const { return J_; }
  const std::vector<double>& weights() const { return w_; }       // w_[j-1] = W(j/(J+1))
  const std::vector<double>& triangle() const { return tri_; }    // tri_[j], 0<=j<=J

 private:
  int J_;
  std::vector<double> w_;
  std::vector<double> tri_;
};

// psi*(x) = -(1/pi) * sum_{j=1}^{J} W(j/(J+1)) sin(2 pi j x)/j.
// The +-j pairs are folded, so the value is real by construction.
double psi_star(double x, const VaalerKernel& k);

// delta_J(x) = (1 + 2 sum_{j=1}^{J} (1 - j/(J+1)) cos(2 pi j x)) / (2J+2),
// a Fejer kernel value, nonnegative up to rounding.
double delta_j(double x, const VaalerKernel& k);

}  // namespace pla
