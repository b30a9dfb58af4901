// SPDX-License-Identifier: Apache-2.0
// Repeated seeded planner trials with CSV, JSON summary, and SVG output.
#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "litstar/bench/stats.hpp"
#include "litstar/planner/planner.hpp"

namespace litstar {

/// One seeded run of one planner. Failed runs keep infinite costs.
struct TrialResult {
    std::string planner;
    std::uint64_t seed = 0;
    double t_init = std::numeric_limits<double>::infinity();
    double c_init = std::numeric_limits<double>::infinity();
    double c_final = std::numeric_limits<double>::infinity();
    bool success = false;
    /// Full anytime trace (cost, time) for plotting; not serialized to CSV.
    std::vector<SolutionRecord> trace;
};

/// Builds a fresh policy per trial so trials stay independent under
/// parallel execution.
using PolicyFactory = std::function<std::unique_ptr<ParameterPolicy>()>;

struct NamedPlanner {
    std::string name;
    PolicyFactory make;
};

struct BenchOptions {
    PlannerConfig planner;
    std::uint64_t base_seed = 0;
    int runs = 1;
    /// Worker threads; 1 runs trials sequentially. Results are identical
    /// either way: each trial owns its RNG and result slot.
    int jobs = 1;
};

/// Runs `runs` trials per planner with seeds base_seed .. base_seed+runs-1
/// and returns results sorted by (planner, seed).
std::vector<TrialResult> runBench(const Environment& env,
                                  const std::vector<NamedPlanner>& planners,
                                  const BenchOptions& options);

struct PlannerSummary {
    std::string planner;
    int runs = 0;
    double success_rate = 0.0;
    SummaryStat t_init;
    SummaryStat c_init;
    SummaryStat c_final;
};

std::vector<PlannerSummary> summarize(const std::vector<TrialResult>& results,
                                      double confidence = 0.99);

/// planner,seed,t_init,c_init,c_final,success with shortest-round-trip
/// reals ("inf" for failures) and 0/1 success.
std::string benchCsv(const std::vector<TrialResult>& results);

std::string summaryJson(const std::vector<PlannerSummary>& summaries);

/// Median cost-vs-time step curves per planner with confidence bands on a
/// log-scaled time axis. Self-contained static SVG.
std::string benchSvg(const std::vector<TrialResult>& results, double time_budget,
                     double confidence = 0.99);

}  // namespace litstar
