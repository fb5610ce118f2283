#pragma once

#include <cstdint>

#include "ibham/representations.hpp"

namespace ibham {

// Knobs for the brute-force verifiers. A fixed seed makes every run fully
// deterministic, including under the parallel execution policy.
struct SearchConfig {
  int grid_resolution = 400;  // simplex subdivisions per coordinate; also
                              // the rate-axis interval count for the
                              // envelope oracle
  int restarts = 64;
  int max_iterations = 4000;
  double step_tolerance = 1e-12;
  std::uint64_t seed = 1;
};

struct PhiBruteForceResult {
  double value;
  std::vector<double> argmax;  // best grid point
  long feasible_count;
};

// Exhaustive simplex-grid maximization of log n - H(Y) subject to the input
// entropy-deficit constraint. Independent of the closed-form route through
// the channel composition rule. Guarded to n <= 4.
PhiBruteForceResult phi_bruteforce(const HammingParams& p, double R,
                                   const SearchConfig& cfg,
                                   Execution exec = Execution::parallel);

struct EnvelopeEstimate {
  std::vector<double> rates;
  std::vector<double> phi_samples;
  std::vector<double> envelope;  // upper concave majorant at the samples
  std::vector<int> hull;         // indices of the hull vertices
  double rc_estimate;            // right endpoint of the first hull segment
};

// Upper concave majorant of densely sampled phi, built as the upper convex
// hull of the sample points. Its first linear segment ends at an estimate
// of the critical rate, independent of the tangent-equation root.
EnvelopeEstimate envelope_bruteforce(const HammingParams& p,
                                     const SearchConfig& cfg,
                                     Execution exec = Execution::parallel);

struct ConstrainedSearchResult {
  double best_value;  // best I(Y;T) found
  Channel best_channel;
  int best_restart;
  long total_iterations;
};

// Multi-restart projected ascent over n-by-cardinality representation
// channels, maximizing I(Y;T) subject to I(X;T) <= R. Restarts are seeded
// (base seed + restart index) and include structured candidates: the
// symmetric channel at the rate's crossover and merged-column variants of
// the (n+1)-symbol optimum. Ascent can only under-report the optimum, so
// the cardinality gap it witnesses is conservative. Guarded to n <= 4 and
// cardinality <= n + 1.
ConstrainedSearchResult ib_constrained_search(const HammingParams& p, double R,
                                              int cardinality,
                                              const SearchConfig& cfg,
                                              Execution exec = Execution::parallel);

struct TightnessReport {
  int n;
  double alpha;
  double R;
  double envelope_value;    // ib_value(R)
  double best_at_card_n;    // search optimum with |T| = n
  double best_at_card_n1;   // time-sharing construction with |T| = n + 1,
                            // evaluated from first principles
  double gap;               // envelope_value - best_at_card_n
  SearchConfig config;
  long iterations_card_n;
};

// Assembles the numerical witness that cardinality n falls short of the
// envelope below the critical rate while n + 1 achieves it. R must lie in
// (0, R_c); anything else throws tightness_regime_error.
TightnessReport tightness_check(const HammingParams& p, double R,
                                const SearchConfig& cfg,
                                Execution exec = Execution::parallel);

}  // namespace ibham
