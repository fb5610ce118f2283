#pragma once

#include <vector>

#include "ibham/errors.hpp"

namespace ibham {

// Probability vector over a finite alphabet. Immutable after construction.
// Construction normalizes row sums within 1e-9 of 1 and rejects anything
// further off; entries must be nonnegative.
class Distribution {
 public:
  explicit Distribution(std::vector<double> probs);

  static Distribution uniform(int size);
  static Distribution point_mass(int size, int at);

  int size() const { return static_cast<int>(probs_.size()); }
  double operator[](int i) const { return probs_[static_cast<size_t>(i)]; }
  const std::vector<double>& probs() const { return probs_; }

  auto begin() const { return probs_.begin(); }
  auto end() const { return probs_.end(); }

 private:
  std::vector<double> probs_;
};

// Row-stochastic conditional matrix: one Distribution per input symbol,
// all over the same output alphabet.
class Channel {
 public:
  explicit Channel(std::vector<Distribution> rows);

  static Channel from_rows(const std::vector<std::vector<double>>& rows);
  static Channel identity(int size);

  int input_size() const { return static_cast<int>(rows_.size()); }
  int output_size() const { return rows_.front().size(); }
  const Distribution& row(int x) const { return rows_[static_cast<size_t>(x)]; }
  double at(int x, int y) const { return rows_[static_cast<size_t>(x)][y]; }

 private:
  std::vector<Distribution> rows_;
};

// Shannon entropy in nats, with 0 log 0 = 0.
double entropy(const Distribution& d);

// Marginal of the channel output under the given input.
Distribution output_distribution(const Distribution& input, const Channel& ch);

// I(input; output) in nats. Values in [-1e-12, 0) are clamped to 0.
double mutual_information(const Distribution& input, const Channel& ch);

// Serial concatenation: result[x][z] = sum_y first[x][y] * second[y][z].
Channel compose(const Channel& first, const Channel& second);

struct BayesReverse {
  Channel reverse;        // p(x | t); rows with zero marginal are filler
  Distribution marginal;  // p(t)
  std::vector<bool> defined;  // false where the output symbol has zero mass
};

// Reverses a channel through Bayes' law. Output symbols with zero marginal
// get a uniform filler row and defined[t] = false; callers must drop or
// handle those rows.
BayesReverse bayes_reverse(const Distribution& input, const Channel& ch);

}  // namespace ibham
