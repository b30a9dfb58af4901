// SPDX-License-Identifier: Apache-2.0
// Procedural benchmark worlds: narrow passage and random rectangles.
#pragma once

#include <cstdint>

#include "litstar/space/environment.hpp"

namespace litstar {

/// Narrow-passage world on [0,1]^dim: a thin wall orthogonal to axis 0 at
/// the midpoint with one centered gap of width gap_width per non-wall axis.
/// Start sits at 0.25 on every axis; the goal is its mirror across the
/// wall (0.75 on axis 0). The straight start-goal segment hits the wall
/// whenever gap_width < 0.5. The layout is deterministic; seed is accepted
/// for interface symmetry with the random worlds and ignored.
/// Requires dim >= 2 and gap_width > 0.
Environment makeNarrowPassage(Eigen::Index dim, double gap_width, std::uint64_t seed = 0);

/// Random-rectangles world on [0,1]^dim: `count` axis-aligned boxes with
/// per-axis side lengths uniform in [max_side/3, max_side], re-drawn while
/// a box contains the start or a goal. Start at 0.25 and goal at 0.75 on
/// every axis. Requires dim >= 2, count >= 0, max_side in (0, 1].
Environment makeRandomRectangles(Eigen::Index dim, int count, double max_side, std::uint64_t seed);

}  // namespace litstar
