// SPDX-License-Identifier: Apache-2.0
// Weights-file round trip: networks, fuzzy params, and consequents as JSON.
#pragma once

#include <string>

#include "litstar/fuzzy/inference.hpp"
#include "litstar/nn/network.hpp"

namespace litstar {

/// Everything needed to run one TSK head: the policy net, its value net,
/// and the rule consequents that fix the output range.
struct HeadWeights {
    Network actor;
    Network critic;
    RuleConsequents cons;
};

/// Full trained state for both heads plus the shared fuzzifier.
struct WeightsBundle {
    HeadWeights b;
    HeadWeights k;
    MembershipParams fuzzy = MembershipParams::defaults();
};

/// Untrained bundle with seed-derived initial weights.
WeightsBundle makeInitialWeights(std::uint64_t seed);

/// JSON round trip. Reals are written shortest-round-trip, so
/// load(save(x)) reproduces every parameter bit-exactly.
std::string weightsToJson(const WeightsBundle& w);
WeightsBundle weightsFromJson(const std::string& text);
void saveWeights(const WeightsBundle& w, const std::string& path);
WeightsBundle loadWeights(const std::string& path);

}  // namespace litstar
