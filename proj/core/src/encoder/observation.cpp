// SPDX-License-Identifier: Apache-2.0

#include "litstar/encoder/observation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace litstar {

double ratioCalc(std::size_t invalid_count, std::size_t valid_count) {
    const std::size_t total = invalid_count + valid_count;
    if (total == 0) return 0.0;
    return static_cast<double>(invalid_count) / static_cast<double>(total);
}

double localRadius(std::size_t q, Eigen::Index n, double free_measure, double eta) {
    if (q < 2) throw std::invalid_argument("localRadius: need q >= 2");
    if (n < 1) throw std::invalid_argument("localRadius: need n >= 1");
    if (free_measure < 0.0) throw std::invalid_argument("localRadius: free_measure must be >= 0");
    const double nd = static_cast<double>(n);
    const double qd = static_cast<double>(q);
    const double inner =
        2.0 * (1.0 + 1.0 / nd) * (free_measure / unitBallMeasure(n)) * (std::log(qd) / qd);
    return eta * std::pow(inner, 1.0 / nd);
}

double localRatioK(const SampleLedger& ledger, const State& center_k, double r,
                   std::size_t* distance_evals) {
    const BallCounts c = ledger.countWithin(center_k, r);
    if (distance_evals) *distance_evals += c.distance_evals;
    return ratioCalc(c.invalid, c.valid);
}

double localRatioB(const SampleLedger& ledger, const std::vector<State>& path_states, double r,
                   std::size_t* distance_evals) {
    if (path_states.empty()) return 0.0;
    double sum = 0.0;
    for (const State& x : path_states) {
        sum += localRatioK(ledger, x, r, distance_evals);
    }
    return sum / static_cast<double>(path_states.size());
}

double lambdaNorm(const InformedSet& inf, const Environment& env) {
    const double bounds_measure = env.bounds.measure();
    const double lam = hyperspheroidMeasure(inf, env.dim, bounds_measure);
    if (bounds_measure <= 0.0) return 0.0;
    return std::clamp(lam / bounds_measure, 0.0, 1.0);
}

ObservationPair observe(const SampleLedger& ledger, const InformedSet& inf, const Environment& env,
                        const std::vector<State>& path_states, const State& center_k, double eta) {
    ObservationPair out;
    const double rho_global = ratioCalc(ledger.invalidCount(), ledger.validCount());
    const double lnorm = lambdaNorm(inf, env);
    out.batch.rho_global = out.neighbor.rho_global = rho_global;
    out.batch.lambda_norm = out.neighbor.lambda_norm = lnorm;

    const std::size_t q = ledger.classifiedCount();
    if (q >= 2) {
        const double free_measure = (1.0 - rho_global) * env.bounds.measure();
        out.radius = localRadius(q, env.dim, free_measure, eta);
        out.batch.rho_local = localRatioB(ledger, path_states, out.radius, &out.distance_evals);
        out.neighbor.rho_local = localRatioK(ledger, center_k, out.radius, &out.distance_evals);
    }
    return out;
}

}  // namespace litstar
