#include "evotune/mathutil.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace evotune {

double percentile_linear(std::span<const double> values, double p) {
  if (values.empty()) throw std::invalid_argument("percentile of empty set");
  if (p < 0.0 || p > 100.0) throw std::invalid_argument("percentile out of range");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() == 1) return sorted[0];
  double rank = p / 100.0 * static_cast<double>(sorted.size() - 1);
  std::size_t lo = static_cast<std::size_t>(rank);
  if (lo >= sorted.size() - 1) return sorted.back();
  double frac = rank - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

std::vector<double> softmax_probs(std::span<const double> values,
                                  double temperature) {
  if (values.empty()) throw std::invalid_argument("softmax of empty set");
  if (temperature <= 0.0) throw std::invalid_argument("softmax temperature <= 0");
  double max_v = *std::max_element(values.begin(), values.end());
  std::vector<double> probs(values.size());
  double total = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    probs[i] = std::exp((values[i] - max_v) / temperature);
    total += probs[i];
  }
  for (double& p : probs) p /= total;
  return probs;
}

std::vector<double> minmax_normalize(std::span<const double> values) {
  if (values.empty()) return {};
  auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  double lo = *lo_it, hi = *hi_it;
  std::vector<double> out(values.size(), 0.0);
  if (hi > lo) {
    for (std::size_t i = 0; i < values.size(); ++i)
      out[i] = (values[i] - lo) / (hi - lo);
  }
  return out;
}

double mean(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("mean of empty set");
  double total = 0.0;
  for (double v : values) total += v;
  return total / static_cast<double>(values.size());
}

}  // namespace evotune
