// SPDX-License-Identifier: Apache-2.0
// Anytime batch-informed planner with policy-chosen batch size and neighbor factor.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "litstar/encoder/ledger.hpp"
#include "litstar/planner/clock.hpp"
#include "litstar/planner/params.hpp"
#include "litstar/space/environment.hpp"
#include "litstar/space/rng.hpp"

namespace litstar {

enum class PlanMode { Fixed, Tensor, Online };

struct PlannerConfig {
    /// RGG constant in the connection-count and radius formulas.
    double eta = 1.1;
    /// Multiplier slightly above 1 on connection counts, preserving the
    /// asymptotic-optimality margin under finite samples.
    double rewire_factor = 1.001;
    /// Batch size used until the policy's first batch decision.
    int b_init = 100;
    PlanMode mode = PlanMode::Fixed;
    int fixed_batch = 100;
    double fixed_psi = 1.0;
    double time_budget = 1.0;
    /// Accepted for config-surface compatibility; the batch planner itself
    /// never goal-biases (goals are ordinary samples).
    double goal_bias = 0.05;
    ClockMode clock = ClockMode::Wall;
    double clock_units_per_second = 1e6;
};

/// One committed improvement of the best path.
struct SolutionRecord {
    std::vector<State> path;
    double cost = 0.0;
    double time = 0.0;
    int n_update = 0;
};

struct PlanStats {
    std::uint64_t iterations = 0;
    std::uint64_t batches = 0;
    std::uint64_t expansions = 0;
    std::uint64_t edges_processed = 0;
    std::uint64_t work_units = 0;
    std::size_t valid_states = 0;
    std::size_t invalid_states = 0;
    double elapsed = 0.0;
};

struct PlanResult {
    std::vector<SolutionRecord> solutions;
    PlanStats stats;

    [[nodiscard]] bool solved() const { return !solutions.empty(); }
    [[nodiscard]] const SolutionRecord& best() const { return solutions.back(); }
};

/// Connection count k = ceil(eta * e * psi * (1 + 1/n) * ln q), clamped to
/// [1, q-1]. Accepts any psi > 0 (the learned band is [3,15]; the fixed
/// baseline uses 1).
int computeK(double psi, double eta, Eigen::Index n, std::size_t q);

/// The k active valid states nearest to `center` (excluded itself),
/// ascending by squared distance with ids breaking ties. Vertex expansion
/// enumerates exactly this set; `distance_evals`, when given, receives the
/// number of exact distance computations performed.
std::vector<std::pair<double, SampleLedger::Id>> kNearestValid(const SampleLedger& ledger,
                                                               SampleLedger::Id center, int k,
                                                               std::size_t* distance_evals = nullptr);

/// Runs the anytime loop until the time budget: process the cheapest
/// still-promising queued edge; when none remains, expand the best vertex
/// with a policy-chosen neighbor count; when nothing is expandable either,
/// prune dominated states and draw the next policy-sized sample batch.
/// Returns every solution found, in strictly improving cost order.
PlanResult plan(const Environment& env, const PlannerConfig& config, RngStream& rng,
                ParameterPolicy& policy);

/// Result document {solutions, config echo, seed} as JSON text.
std::string planResultToJson(const PlanResult& result, const PlannerConfig& config,
                             std::uint64_t seed);

}  // namespace litstar
