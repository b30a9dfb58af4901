// SPDX-License-Identifier: Apache-2.0

#include "litstar/ddpg/reward.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace litstar {

namespace {
constexpr double kTimeFloor = 1e-3;
}

double decayKappa(int n_update, double nu, double nu_min) {
    if (n_update < 0) throw std::invalid_argument("decayKappa: n_update must be >= 0");
    const double arg = 6.8 - static_cast<double>(n_update);
    if (arg <= 0.0) return nu_min;
    return std::max(nu_min, nu * std::log2(arg));
}

double rewardB(const RewardFactors& f) {
    if (!f.solution_found) {
        return -f.gamma_b * static_cast<double>(f.n_update);
    }
    if (!(f.t > 0.0) || !(f.c > 0.0)) throw std::invalid_argument("rewardB: t and c must be > 0");
    const double kappa = decayKappa(f.n_update, f.nu, f.nu_min);
    const double t = std::max(f.t, kTimeFloor);
    return f.alpha_b * kappa / t + f.beta_b * kappa / f.c -
           f.gamma_b * static_cast<double>(f.n_update);
}

double rewardK(const RewardFactors& f) {
    if (!f.solution_found) return 0.0;
    if (!(f.t > 0.0) || !(f.c > 0.0)) throw std::invalid_argument("rewardK: t and c must be > 0");
    const double t = std::max(f.t, kTimeFloor);
    return f.alpha_k / t + f.beta_k / f.c + f.gamma_k * static_cast<double>(f.path_len);
}

}  // namespace litstar
