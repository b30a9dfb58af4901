// SPDX-License-Identifier: Apache-2.0
// Observation triple (global invalid ratio, local invalid ratio, informed-set measure).
#pragma once

#include <vector>

#include "litstar/encoder/ledger.hpp"
#include "litstar/space/environment.hpp"
#include "litstar/space/sampling.hpp"
#include "litstar/space/types.hpp"

namespace litstar {

/// What the parameter policy sees: all three components normalized to [0,1].
struct MapObservation {
    double rho_global = 0.0;
    double rho_local = 0.0;
    double lambda_norm = 1.0;
};

/// Both policy inputs computed in one pass. The two observations share
/// rho_global and lambda_norm and differ only in the local ratio: the
/// batch-size head averages over balls around the current path's states,
/// the neighbor head uses a single ball at the last expanded vertex.
struct ObservationPair {
    MapObservation batch;
    MapObservation neighbor;
    double radius = 0.0;
    std::size_t distance_evals = 0;
};

/// Invalid fraction invalid / (valid + invalid); 0 when both counts are 0.
double ratioCalc(std::size_t invalid_count, std::size_t valid_count);

/// Connectivity radius r(q) = eta * (2(1+1/n) * (free_measure/zeta_n) *
/// (ln q / q))^{1/n} with zeta_n the unit-ball measure. Throws for q < 2.
double localRadius(std::size_t q, Eigen::Index n, double free_measure, double eta);

/// Mean invalid ratio over radius-r balls centered on each path state;
/// 0 for an empty path. Adds its distance evaluations to distance_evals
/// when non-null.
double localRatioB(const SampleLedger& ledger, const std::vector<State>& path_states, double r,
                   std::size_t* distance_evals = nullptr);

/// Invalid ratio inside the single radius-r ball at center_k.
double localRatioK(const SampleLedger& ledger, const State& center_k, double r,
                   std::size_t* distance_evals = nullptr);

/// Informed-set measure over bounds measure, clamped to [0,1]; 1 before
/// the first solution (c_best infinite).
double lambdaNorm(const InformedSet& inf, const Environment& env);

/// Assembles both observations. The free-space measure in the radius
/// formula is estimated as (1 - rho_global) * bounds measure; with fewer
/// than two classified states the local ratios are 0 and radius is 0.
ObservationPair observe(const SampleLedger& ledger, const InformedSet& inf, const Environment& env,
                        const std::vector<State>& path_states, const State& center_k, double eta);

}  // namespace litstar
