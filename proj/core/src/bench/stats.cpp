// SPDX-License-Identifier: Apache-2.0

#include "litstar/bench/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace litstar {

double medianWithInfinities(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("medianWithInfinities: empty sample");
    for (double v : values) {
        if (std::isnan(v)) throw std::invalid_argument("medianWithInfinities: NaN sample");
    }
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::pair<int, int> ciOrderIndices(int n, double confidence) {
    if (n < 1) throw std::invalid_argument("ciOrderIndices: n must be >= 1");
    if (!(confidence > 0.0) || !(confidence < 1.0)) {
        throw std::invalid_argument("ciOrderIndices: confidence must lie in (0, 1)");
    }
    const double tail = 0.5 * (1.0 - confidence);
    const double log_half = std::log(0.5);
    double cdf = 0.0;
    int last_ok = -1;
    for (int k = 0; k <= n; ++k) {
        const double logpmf = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                              std::lgamma(n - k + 1.0) + n * log_half;
        cdf += std::exp(logpmf);
        if (cdf <= tail) {
            last_ok = k;
        } else {
            break;
        }
    }
    const int l = std::max(1, last_ok + 1);
    const int u = n - l + 1;
    return {l, u};
}

SummaryStat medianCi(std::vector<double> values, double confidence) {
    SummaryStat s;
    s.median = medianWithInfinities(values);
    std::sort(values.begin(), values.end());
    const auto [l, u] = ciOrderIndices(static_cast<int>(values.size()), confidence);
    s.lo = values[static_cast<std::size_t>(l - 1)];
    s.hi = values[static_cast<std::size_t>(u - 1)];
    return s;
}

}  // namespace litstar
