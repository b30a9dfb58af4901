// SPDX-License-Identifier: Apache-2.0
// Uniform and informed (prolate hyperspheroid) state sampling.
#pragma once

#include <limits>

#include "litstar/space/environment.hpp"
#include "litstar/space/rng.hpp"
#include "litstar/space/types.hpp"

namespace litstar {

/// The set of states that could lie on a path from x_a to x_b cheaper than
/// c_best: the prolate hyperspheroid {x : |x-x_a| + |x-x_b| <= c_best} with
/// foci x_a, x_b and transverse diameter c_min = |x_a - x_b|.
struct InformedSet {
    State x_a;
    State x_b;
    double c_best = std::numeric_limits<double>::infinity();
    double c_min = 0.0;

    InformedSet() = default;
    InformedSet(State a, State b, double best = std::numeric_limits<double>::infinity())
        : x_a(std::move(a)), x_b(std::move(b)), c_best(best), c_min((x_b - x_a).norm()) {
        if (x_a.size() != x_b.size()) throw std::invalid_argument("InformedSet: dimension mismatch");
        if (c_best < c_min) throw std::invalid_argument("InformedSet: c_best < c_min");
    }
};

/// Lebesgue measure of the unit ball in R^n: pi^{n/2} / Gamma(n/2 + 1).
double unitBallMeasure(Eigen::Index n);

/// Closed-form Lebesgue measure of the hyperspheroid,
/// c_best * (c_best^2 - c_min^2)^{(n-1)/2} * zeta_n / 2^n.
/// Returns bounds_measure when c_best is infinite (no solution yet, the
/// sampling domain is the whole bounded space).
double hyperspheroidMeasure(const InformedSet& inf, Eigen::Index n,
                            double bounds_measure = std::numeric_limits<double>::infinity());

/// Uniform sample over the box. Validity is NOT checked here; the caller
/// classifies the result.
State sampleUniform(const AxisBox& bounds, RngStream& rng);
State sampleUniform(const Environment& env, RngStream& rng);

/// Uniform sample over the hyperspheroid intersected with the bounds.
/// Unit-ball sample, axis scaling, reflection of the first basis vector
/// onto the focal axis, then rejection against bounds (capped at 1000
/// attempts, after which it falls back to a uniform bounds sample).
/// c_best = infinity also falls back to sampleUniform.
State sampleInformed(const InformedSet& inf, const Environment& env, RngStream& rng);

}  // namespace litstar
