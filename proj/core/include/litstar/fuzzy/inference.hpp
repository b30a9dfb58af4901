// SPDX-License-Identifier: Apache-2.0
// Gaussian fuzzification of observations and TSK defuzzification of rule weights.
#pragma once

#include <array>

#include "litstar/encoder/observation.hpp"

namespace litstar {

/// Gaussian membership functions for the three inputs (global ratio, local
/// ratio, measure), three sets each (small, medium, dominant). centers and
/// widths are indexed [input][set]; centers ascend per input, widths > 0.
struct MembershipParams {
    std::array<std::array<double, 3>, 3> centers;
    std::array<std::array<double, 3>, 3> widths;

    void validate() const;

    /// centers (0, 0.5, 1) and width 0.2 for every input/set.
    static MembershipParams defaults();
};

/// Membership degrees, input-major set-minor: entries 3i+j hold input i
/// against set j. Every entry is in (0, 1].
using FuzzyVector = std::array<double, 9>;

/// Which parameter a TSK head produces.
enum class Head { B, K };

/// Constant rule consequents for one head. f ascends; its endpoints define
/// the head's output range (batch size in [20,200], neighbor factor in
/// [3,15]).
struct RuleConsequents {
    std::array<double, 3> f;
    Head head = Head::B;

    void validate() const;
    [[nodiscard]] double rangeLo() const { return f[0]; }
    [[nodiscard]] double rangeHi() const { return f[2]; }

    static RuleConsequents defaultsB();  // (20, 110, 200)
    static RuleConsequents defaultsK();  // (3, 9, 15)
};

/// mu[3i+j] = exp(-(x_i - center_{i,j})^2 / (2 width_{i,j}^2)).
FuzzyVector fuzzify(const MapObservation& obs, const MembershipParams& params);

/// Raw weighted mean sum(w_i f_i) / sum(w_i) with no rounding or clamping
/// (the differentiable quantity the actor trains through). All w_i must be
/// >= 0; sum(w) = 0 returns the range midpoint.
double defuzzifySmooth(const std::array<double, 3>& w, const RuleConsequents& cons);

/// Executable output: the weighted mean rounded to the nearest integer for
/// the batch head, then clamped to the head's range.
double defuzzifyTsk(const std::array<double, 3>& w, const RuleConsequents& cons);

}  // namespace litstar
