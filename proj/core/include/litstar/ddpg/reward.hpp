// SPDX-License-Identifier: Apache-2.0
// Reward functions for the batch-size and neighbor-factor heads.
#pragma once

#include <cstddef>

namespace litstar {

/// Everything the reward functions read about the step that just finished.
/// t and c describe the most recent solution update (seconds taken and
/// path cost); n_update counts solution updates so far; path_len is the
/// number of states on the current best path.
struct RewardFactors {
    double t = 0.0;
    double c = 0.0;
    int n_update = 0;
    std::size_t path_len = 0;
    bool solution_found = false;

    double alpha_b = 1.0;
    double beta_b = 1.0;
    double gamma_b = 0.05;
    double nu = 1.0;
    double nu_min = 0.2;

    double alpha_k = 1.0;
    double beta_k = 1.0;
    /// Negative by default so shorter paths (fewer states) score higher.
    double gamma_k = -0.05;
};

/// Decay weight kappa = max(nu_min, nu * log2(6.8 - n_update)); the
/// argument goes nonpositive from n_update = 7 on, where kappa = nu_min.
double decayKappa(int n_update, double nu, double nu_min);

/// Batch-size head: alpha_b*kappa/t + beta_b*kappa/c - gamma_b*n_update.
/// Without a solution this step only the penalty term applies. t is
/// floored at 1e-3 s so near-instant updates cannot blow up the reward.
double rewardB(const RewardFactors& f);

/// Neighbor head: alpha_k/t + beta_k/c + gamma_k*path_len; 0 without a
/// solution. Same 1e-3 s floor on t.
double rewardK(const RewardFactors& f);

}  // namespace litstar
