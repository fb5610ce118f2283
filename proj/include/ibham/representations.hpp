#pragma once

#include <string>
#include <vector>

#include "ibham/phi_curve.hpp"

namespace ibham {

enum class Regime { constant, time_sharing, hamming };

const char* regime_name(Regime r);

// A candidate representation channel p(t|x) with its induced marginal,
// cardinality, and the rate it was built for.
struct Representation {
  Channel channel;        // n rows, |T| columns
  Distribution marginal;  // uniform input pushed through channel
  int cardinality;
  Regime regime;
  double R_target;
};

// Minimal-cardinality optimal representation at rate R:
//   R = 0                -> constant, one symbol;
//   R in (0, R_c)        -> n+1 symbols: a constant symbol t_0 (always last,
//                           weight 1 - R/R_c) time-shared with a symmetric
//                           channel at crossover beta_c (weight R/R_c);
//   R in [R_c, log n]    -> n symbols, symmetric channel at crossover
//                           h_n_inverse(log n - R).
// For n = 2 the curve is concave and the symmetric channel is optimal at
// every positive rate. At R = R_c exactly the n-symbol form is returned
// (minimal cardinality wins the tie).
Representation optimal_representation(const HammingParams& p, double R);

struct SymbolReport {
  double p_t;    // marginal mass of the symbol
  double R_t;    // log n - H(X | T = t); 0 for zero-mass symbols
  bool defined;  // false when p_t = 0 and the posterior is undefined
};

struct ValidationReport {
  double I_XT;
  double I_YT;
  double ib_target;          // ib_value at R_target
  double rate_deviation;     // |I_XT - R_target|
  double value_deviation;    // |I_YT - ib_target|
  std::vector<SymbolReport> symbols;
  bool pattern_ok;           // per-symbol rates match the regime pattern
  double pattern_deviation;
  bool marginal_ok;          // stored marginal vs channel-induced marginal
  double marginal_deviation;
  bool markov_ok;            // I_YT <= I(X;Y) + 1e-12

  bool ok() const {
    return rate_deviation <= 1e-9 && value_deviation <= 1e-9 && pattern_ok &&
           marginal_ok && markov_ok;
  }
};

// Recomputes everything from first principles: mutual informations through
// the channel (the Markov chain Y - X - T is honored by reversing p(t|x)
// and composing with the forward channel), per-symbol rates, and the
// regime-appropriate pattern. The report carries failures; it never throws
// on a well-formed representation.
ValidationReport validate_representation(const HammingParams& p,
                                         const Representation& rep);

}  // namespace ibham
