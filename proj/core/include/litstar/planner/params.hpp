// SPDX-License-Identifier: Apache-2.0
// Parameter-selection interface: how the planner asks for batch size and neighbor factor.
#pragma once

#include <cstddef>

#include "litstar/encoder/observation.hpp"

namespace litstar {

/// Search-progress summary handed to the policy alongside the observation.
/// Mirrors the reward bookkeeping: update_gap is the time between the two
/// most recent solution updates (or since planning started, before the
/// second), seconds_since_update the staleness of the newest one.
struct DecisionContext {
    double update_gap = 0.0;
    double seconds_since_update = 0.0;
    double best_cost = 0.0;
    int n_update = 0;
    std::size_t path_len = 0;
    bool has_solution = false;
    double elapsed = 0.0;
};

/// Chooses the two runtime parameters. batchSize fires once per solution
/// update (next batch size in [20, 200]); neighborFactor fires once per
/// vertex expansion (k-nearest factor in [3, 15]; the fixed baseline may
/// return values outside that band, e.g. 1). episodeEnd is called once
/// when the plan invocation finishes, for policies that learn.
class ParameterPolicy {
public:
    virtual ~ParameterPolicy() = default;
    virtual int batchSize(const MapObservation& obs, const DecisionContext& ctx) = 0;
    virtual double neighborFactor(const MapObservation& obs, const DecisionContext& ctx) = 0;
    virtual void episodeEnd(const DecisionContext& /*ctx*/) {}
};

/// Constant parameters; the ablation baseline.
class FixedPolicy final : public ParameterPolicy {
public:
    FixedPolicy(int batch, double psi) : batch_(batch), psi_(psi) {}
    int batchSize(const MapObservation&, const DecisionContext&) override { return batch_; }
    double neighborFactor(const MapObservation&, const DecisionContext&) override { return psi_; }

private:
    int batch_;
    double psi_;
};

}  // namespace litstar
