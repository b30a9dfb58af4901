// SPDX-License-Identifier: Apache-2.0
// Adaptive-moment parameter updates and target-network soft updates.
#pragma once

#include "litstar/nn/network.hpp"

namespace litstar {

/// Adam. Moment accumulators are kept per parameter array in the fixed
/// traversal order (conv banks, then dense layers; W before b).
struct AdamState {
    double lr = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    long long step = 0;
    std::vector<Eigen::MatrixXd> m;
    std::vector<Eigen::MatrixXd> v;
};

/// Zero-initialized moments shaped for the given network.
AdamState makeAdam(const Network& net, double lr = 1e-3);

/// One in-place Adam step with bias-corrected moments. Throws
/// std::runtime_error on a non-finite gradient (training halts rather
/// than corrupting parameters). Bumps net.version.
void adamStep(AdamState& state, Network& net, const GradientBundle& grads);

/// target <- tau * online + (1 - tau) * target, elementwise over every
/// parameter array. Architectures must match. Bumps target.version.
void softUpdate(Network& target, const Network& online, double tau);

/// Exact parameter copy (tau = 1 endpoint), preserving the target's
/// identity. Bumps target.version.
void copyParams(Network& target, const Network& online);

}  // namespace litstar
