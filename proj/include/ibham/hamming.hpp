#pragma once

#include "ibham/prob.hpp"

namespace ibham {

// n-ary symmetric channel family: diagonal 1-(n-1)*alpha, off-diagonal alpha.
// The three crossover values {0, 1/n, 1/(n-1)} behave qualitatively
// differently and are tracked via extreme()/regular().
struct HammingParams {
  int n;
  double alpha;

  HammingParams(int n_, double alpha_);

  enum class Extreme { none, deterministic, independent, max_crossover };

  // Exact-extreme detection window. CLI round-trips print 12 significant
  // digits, which lands re-parsed values well inside this window.
  static constexpr double kExtremeTol = 1e-12;
  // Parameters closer than this to an extreme (but not at one) are rejected
  // by the curve machinery instead of silently switching branches.
  static constexpr double kNearExtremeTol = 1e-7;

  Extreme extreme() const;
  bool regular() const { return extreme() == Extreme::none && !near_extreme(); }
  bool near_extreme() const;
};

Channel hamming_channel(const HammingParams& p);

// Row entropy of the n-ary symmetric channel, q in [0, 1/(n-1)], in nats.
double h_n(int n, double q);

// Inverse of h_n restricted to the increasing branch [0, 1/n].
// Accepts v in [0, log n] with 1e-12 slack (clamped); |h_n(result) - v|
// lands at machine precision after a bisection + Newton polish.
double h_n_inverse(int n, double v);

// Crossover of the serial composition of two symmetric channels:
// alpha + (1 - n*alpha) * beta. beta within 1e-12 outside [0, 1/n] is
// clamped before use.
double gamma_compose(const HammingParams& p, double beta);

}  // namespace ibham
