// SPDX-License-Identifier: Apache-2.0
// Baked policy lookup: actor outputs precomputed on a 3-axis observation grid.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "litstar/fuzzy/inference.hpp"
#include "litstar/nn/network.hpp"
#include "litstar/planner/params.hpp"

namespace litstar {

struct AxisSpec {
    std::string name;
    double min = 0.0;
    double max = 1.0;
    int bins = 21;
};

/// Piecewise-constant map from observation space to a parameter value.
/// values is row-major in axis order (global ratio, local ratio, measure).
struct PolicyTensor {
    std::array<AxisSpec, 3> axes;
    std::vector<double> values;
    Head head = Head::B;
    double range_lo = 0.0;
    double range_hi = 0.0;
};

/// 21 bins over [0,1] per axis.
std::array<AxisSpec, 3> defaultAxes();

/// Bin indices for an observation: per axis, clamp into [min,max] then
/// floor((v-min)/(max-min)*bins), the top edge mapping to bins-1.
std::array<int, 3> toIndex(const MapObservation& obs, const std::array<AxisSpec, 3>& axes);

/// Evaluates fuzzify -> actor -> executable defuzzification at every bin
/// center and stores the results. The actor must be an actor-architecture
/// network and cons must carry the requested head, else this throws.
PolicyTensor bake(const Network& actor, const MembershipParams& fuzzy, const RuleConsequents& cons,
                  const std::array<AxisSpec, 3>& axes = defaultAxes());

/// Constant-time piecewise-constant lookup.
double lookup(const PolicyTensor& tensor, const MapObservation& obs);

/// JSON round trip; values survive bit-exactly.
std::string tensorToJson(const PolicyTensor& tensor);
PolicyTensor tensorFromJson(const std::string& text);
void saveTensor(const PolicyTensor& tensor, const std::string& path);
PolicyTensor loadTensor(const std::string& path);

/// Planner policy backed by one baked tensor per head.
class TensorPolicy final : public ParameterPolicy {
public:
    TensorPolicy(PolicyTensor tensor_b, PolicyTensor tensor_k);

    int batchSize(const MapObservation& obs, const DecisionContext&) override;
    double neighborFactor(const MapObservation& obs, const DecisionContext&) override;

private:
    PolicyTensor b_;
    PolicyTensor k_;
};

}  // namespace litstar
