#pragma once

#include <span>
#include <vector>

namespace evotune {

// Linear-interpolation percentile (numpy 'linear' method). p in [0, 100].
// Input need not be sorted. Throws on empty input.
double percentile_linear(std::span<const double> values, double p);

// softmax(values / temperature), numerically stable. temperature > 0.
std::vector<double> softmax_probs(std::span<const double> values,
                                  double temperature);

// Min-max rescale to [0, 1]; all-equal input maps to all zeros.
std::vector<double> minmax_normalize(std::span<const double> values);

double mean(std::span<const double> values);

}  // namespace evotune
