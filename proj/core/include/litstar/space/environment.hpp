// SPDX-License-Identifier: Apache-2.0
// Axis-aligned box world: bounds, obstacles, start/goal states, collision checks.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "litstar/space/types.hpp"

namespace litstar {

/// A planning problem in R^n with axis-aligned box obstacles.
struct Environment {
    Eigen::Index dim = 0;
    AxisBox bounds;
    std::vector<AxisBox> obstacles;
    State start;
    std::vector<State> goals;
    /// Collision resolution: interpolated edge states are spaced at most
    /// this far apart. Obstacles thinner than delta can be missed between
    /// check points (see isEdgeValid).
    double delta = 0.0;

    /// Throws std::invalid_argument if the invariants fail: start and every
    /// goal must be valid states, bounds must match dim, delta must be
    /// positive, and at least one goal is required.
    void validate() const;
};

/// Default collision resolution: 1% of the shortest bounds extent.
double defaultDelta(const AxisBox& bounds);

/// True iff x lies inside the bounds and outside every obstacle. The
/// boundary of an obstacle counts as invalid. Throws on dimension mismatch.
bool isStateValid(const Environment& env, const State& x);

/// True iff every interpolated state at spacing <= env.delta along the
/// segment a-b is valid, endpoints included. Symmetric in (a, b) by
/// construction. Obstacles thinner than delta that fall entirely between
/// two check points are not detected; with delta <= thickness/2 a hit is
/// guaranteed.
bool isEdgeValid(const Environment& env, const State& a, const State& b);

/// Same result as isEdgeValid; additionally adds the number of state
/// checks performed to work (used for deterministic cost accounting).
bool isEdgeValidCounted(const Environment& env, const State& a, const State& b, std::uint64_t& work);

/// JSON round-trip with full-precision reals:
/// {dim, bounds:{lo,hi}, obstacles:[{lo,hi}], start, goals, delta}
std::string environmentToJson(const Environment& env);
Environment environmentFromJson(const std::string& text);
void saveEnvironment(const Environment& env, const std::string& path);
Environment loadEnvironment(const std::string& path);

}  // namespace litstar
