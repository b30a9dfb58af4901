// SPDX-License-Identifier: Apache-2.0

#include "litstar/space/sampling.hpp"

#include <cmath>

namespace litstar {

double unitBallMeasure(Eigen::Index n) {
    if (n < 1) throw std::invalid_argument("unitBallMeasure: n must be >= 1");
    const double nd = static_cast<double>(n);
    return std::pow(M_PI, nd / 2.0) / std::tgamma(nd / 2.0 + 1.0);
}

double hyperspheroidMeasure(const InformedSet& inf, Eigen::Index n, double bounds_measure) {
    if (std::isinf(inf.c_best)) return bounds_measure;
    const double cb = inf.c_best;
    const double diff = std::max(cb * cb - inf.c_min * inf.c_min, 0.0);
    const double nd = static_cast<double>(n);
    return cb * std::pow(diff, (nd - 1.0) / 2.0) * unitBallMeasure(n) / std::pow(2.0, nd);
}

State sampleUniform(const AxisBox& bounds, RngStream& rng) {
    State x(bounds.dim());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        x[i] = rng.uniform(bounds.lo[i], bounds.hi[i]);
    }
    return x;
}

State sampleUniform(const Environment& env, RngStream& rng) { return sampleUniform(env.bounds, rng); }

namespace {

// Uniform point in the unit n-ball: normal direction, radius u^{1/n}.
State sampleUnitBall(Eigen::Index n, RngStream& rng) {
    State d(n);
    double norm = 0.0;
    do {
        for (Eigen::Index i = 0; i < n; ++i) d[i] = rng.normal();
        norm = d.norm();
    } while (norm == 0.0);
    const double r = std::pow(rng.uniform01(), 1.0 / static_cast<double>(n));
    return (r / norm) * d;
}

}  // namespace

State sampleInformed(const InformedSet& inf, const Environment& env, RngStream& rng) {
    if (std::isinf(inf.c_best)) return sampleUniform(env, rng);
    const Eigen::Index n = env.dim;
    const double cb = std::max(inf.c_best, inf.c_min);
    const double r1 = cb / 2.0;
    const double rrest = std::sqrt(std::max(cb * cb - inf.c_min * inf.c_min, 0.0)) / 2.0;
    const State center = 0.5 * (inf.x_a + inf.x_b);

    // Householder reflection taking e1 to the unit focal axis a1. Because
    // the scaled ball is rotationally symmetric about its first axis, a
    // reflection distributes identically to a rotation. Skip it when the
    // foci coincide (the spheroid is a ball) or a1 is already e1.
    State v;
    double vtv = 0.0;
    if (inf.c_min > 0.0) {
        State a1 = (inf.x_b - inf.x_a) / inf.c_min;
        a1[0] -= 1.0;  // v = a1 - e1
        vtv = a1.squaredNorm();
        if (vtv > 1e-24) v = std::move(a1);
    }

    for (int attempt = 0; attempt < 1000; ++attempt) {
        State y = sampleUnitBall(n, rng);
        y[0] *= r1;
        for (Eigen::Index i = 1; i < n; ++i) y[i] *= rrest;
        if (vtv > 1e-24) y -= v * (2.0 * v.dot(y) / vtv);
        y += center;
        if (env.bounds.contains(y)) return y;
    }
    return sampleUniform(env, rng);
}

}  // namespace litstar
