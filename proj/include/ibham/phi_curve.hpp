#pragma once

#include <optional>
#include <vector>

#include "ibham/hamming.hpp"
#include "ibham/parallel.hpp"

namespace ibham {

// One evaluated point of the rate curve. slope is empty at R = 0 where the
// closed-form quotient degenerates (both logarithms diverge).
struct CurvePoint {
  double R;
  double beta;
  double gamma;
  double phi;
  double phi_bar;
  std::optional<double> slope;
};

struct InflectionPoint {
  double R_s;
  double beta_s;
};

// The inflection rate R_s and the critical tangent rate R_c, with the
// crossover probabilities they map to and the slope of the linear envelope
// segment through the origin.
struct CriticalPoints {
  double R_s;
  double beta_s;
  double R_c;
  double beta_c;
  double envelope_slope;  // phi(R_c) / R_c
};

// Maximal output-entropy deficit log n - H(Y) over inputs with entropy
// deficit at most R. Strictly increasing on [0, log n]. Requires a regular
// alpha (n = 2 is allowed).
double phi(const HammingParams& p, double R);

// Closed-form derivative of phi. Defined on (0, log n]; returns exactly 0
// at R = log n. Throws at R = 0 where the formula degenerates.
double phi_slope(const HammingParams& p, double R);

// Sign carrier of the curvature of phi: eta(beta) has the sign of the
// second derivative of phi at the rate corresponding to beta in (0, 1/n).
double eta(const HammingParams& p, double beta);

// Unique curvature sign change of phi, n >= 3. Throws regime_error for
// n = 2 (the curve is concave throughout).
InflectionPoint inflection_point(const HammingParams& p);

// Tangent-from-origin contact point: the unique root of
// g(R) = R * phi'(R) - phi(R) on (R_s, log n). Throws for n = 2.
CriticalPoints critical_rate(const HammingParams& p);

// Upper concave envelope of phi: linear with slope phi(R_c)/R_c on [0, R_c],
// equal to phi beyond.
double phi_envelope(const HammingParams& p, double R);
double phi_envelope(const HammingParams& p, double R, const CriticalPoints& cp);

// The information bottleneck value at rate R for uniform input. Handles all
// parameter regimes: the envelope for regular n >= 3, phi itself for n = 2,
// and the closed forms at the three extreme crossovers.
double ib_value(const HammingParams& p, double R);

// Evaluates the curve on a sorted grid of rates in [0, log n]. Points are
// independent; the parallel path is bit-identical to the serial one.
std::vector<CurvePoint> sample_curve(const HammingParams& p,
                                     const std::vector<double>& grid,
                                     Execution exec = Execution::parallel);

}  // namespace ibham
