#include "ibham/prob.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace ibham {

namespace {

constexpr double kSumRejectTol = 1e-9;

double xlogx(double v) { return v > 0.0 ? v * std::log(v) : 0.0; }

}  // namespace

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) {
    throw validation_error("distribution must have at least one symbol");
  }
  double sum = 0.0;
  for (double v : probs_) {
    if (!(v >= 0.0)) {
      throw validation_error("distribution entry is negative or NaN: " +
                             std::to_string(v));
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kSumRejectTol) {
    throw validation_error("distribution sums to " + std::to_string(sum) +
                           ", outside the 1e-9 normalization window");
  }
  for (double& v : probs_) v /= sum;
}

Distribution Distribution::uniform(int size) {
  if (size < 1) throw validation_error("alphabet size must be positive");
  return Distribution(std::vector<double>(static_cast<size_t>(size),
                                          1.0 / static_cast<double>(size)));
}

Distribution Distribution::point_mass(int size, int at) {
  if (size < 1 || at < 0 || at >= size) {
    throw validation_error("point mass index out of range");
  }
  std::vector<double> v(static_cast<size_t>(size), 0.0);
  v[static_cast<size_t>(at)] = 1.0;
  return Distribution(std::move(v));
}

Channel::Channel(std::vector<Distribution> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw validation_error("channel must have at least one row");
  const int out = rows_.front().size();
  for (const auto& r : rows_) {
    if (r.size() != out) {
      throw validation_error("channel rows disagree on output alphabet size");
    }
  }
}

Channel Channel::from_rows(const std::vector<std::vector<double>>& rows) {
  std::vector<Distribution> ds;
  ds.reserve(rows.size());
  for (const auto& r : rows) ds.emplace_back(r);
  return Channel(std::move(ds));
}

Channel Channel::identity(int size) {
  std::vector<Distribution> rows;
  rows.reserve(static_cast<size_t>(size));
  for (int i = 0; i < size; ++i) rows.push_back(Distribution::point_mass(size, i));
  return Channel(std::move(rows));
}

double entropy(const Distribution& d) {
  double h = 0.0;
  for (double v : d) h -= xlogx(v);
  return h < 0.0 ? 0.0 : h;  // -0.0 from point masses
}

Distribution output_distribution(const Distribution& input, const Channel& ch) {
  if (input.size() != ch.input_size()) {
    throw validation_error("input size does not match channel row count");
  }
  std::vector<double> out(static_cast<size_t>(ch.output_size()), 0.0);
  for (int x = 0; x < input.size(); ++x) {
    const double px = input[x];
    if (px == 0.0) continue;
    for (int y = 0; y < ch.output_size(); ++y) {
      out[static_cast<size_t>(y)] += px * ch.at(x, y);
    }
  }
  return Distribution(std::move(out));
}

double mutual_information(const Distribution& input, const Channel& ch) {
  const double h_out = entropy(output_distribution(input, ch));
  double h_cond = 0.0;
  for (int x = 0; x < input.size(); ++x) {
    h_cond += input[x] * entropy(ch.row(x));
  }
  double mi = h_out - h_cond;
  if (mi < 0.0 && mi >= -1e-12) mi = 0.0;
  return mi;
}

Channel compose(const Channel& first, const Channel& second) {
  if (first.output_size() != second.input_size()) {
    throw validation_error("inner alphabet mismatch in channel composition");
  }
  std::vector<Distribution> rows;
  rows.reserve(static_cast<size_t>(first.input_size()));
  for (int x = 0; x < first.input_size(); ++x) {
    std::vector<double> row(static_cast<size_t>(second.output_size()), 0.0);
    for (int y = 0; y < first.output_size(); ++y) {
      const double w = first.at(x, y);
      if (w == 0.0) continue;
      for (int z = 0; z < second.output_size(); ++z) {
        row[static_cast<size_t>(z)] += w * second.at(y, z);
      }
    }
    rows.emplace_back(std::move(row));
  }
  return Channel(std::move(rows));
}

BayesReverse bayes_reverse(const Distribution& input, const Channel& ch) {
  if (input.size() != ch.input_size()) {
    throw validation_error("input size does not match channel row count");
  }
  const int nt = ch.output_size();
  Distribution marginal = output_distribution(input, ch);
  std::vector<Distribution> rows;
  std::vector<bool> defined(static_cast<size_t>(nt), true);
  rows.reserve(static_cast<size_t>(nt));
  for (int t = 0; t < nt; ++t) {
    const double pt = marginal[t];
    if (pt <= 0.0) {
      defined[static_cast<size_t>(t)] = false;
      rows.push_back(Distribution::uniform(input.size()));
      continue;
    }
    std::vector<double> row(static_cast<size_t>(input.size()));
    for (int x = 0; x < input.size(); ++x) {
      row[static_cast<size_t>(x)] = input[x] * ch.at(x, t) / pt;
    }
    rows.emplace_back(std::move(row));
  }
  return BayesReverse{Channel(std::move(rows)), std::move(marginal),
                      std::move(defined)};
}

}  // namespace ibham
