// SPDX-License-Identifier: Apache-2.0
// Order-statistic summaries for benchmark runs: medians over values that
// may be infinite, and nonparametric confidence intervals for the median.
#pragma once

#include <utility>
#include <vector>

namespace litstar {

/// Median with +infinity sorting above every finite value (failed runs
/// count as infinitely costly). Even sizes average the two central order
/// statistics. Throws on an empty list or on NaN entries.
double medianWithInfinities(std::vector<double> values);

/// 1-based order-statistic indices (l, u) bracketing the median with
/// coverage >= confidence under the binomial(n, 1/2) law:
/// l = 1 + max{k : F(k) <= (1-confidence)/2} (0 if no such k, then
/// clamped to 1) and u = n - l + 1, the tightest symmetric pair.
std::pair<int, int> ciOrderIndices(int n, double confidence = 0.99);

/// Median plus its confidence bracket, all drawn from the sorted sample.
struct SummaryStat {
    double median = 0.0;
    double lo = 0.0;
    double hi = 0.0;
};

SummaryStat medianCi(std::vector<double> values, double confidence = 0.99);

}  // namespace litstar
