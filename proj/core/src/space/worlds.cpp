// SPDX-License-Identifier: Apache-2.0

#include "litstar/space/worlds.hpp"

#include <stdexcept>

#include "litstar/space/rng.hpp"

namespace litstar {

namespace {

constexpr double kWallThickness = 0.04;

AxisBox unitBounds(Eigen::Index dim) {
    return AxisBox(State::Zero(dim), State::Ones(dim));
}

}  // namespace

Environment makeNarrowPassage(Eigen::Index dim, double gap_width, std::uint64_t /*seed*/) {
    if (dim < 2) throw std::invalid_argument("makeNarrowPassage: dim must be >= 2");
    if (!(gap_width > 0.0)) throw std::invalid_argument("makeNarrowPassage: gap_width must be > 0");

    Environment env;
    env.dim = dim;
    env.bounds = unitBounds(dim);
    env.delta = defaultDelta(env.bounds);

    // The wall minus its gap column is covered by two boxes per non-wall
    // axis: everything in the slab with that coordinate below the gap, and
    // everything with it above. The boxes overlap; their union is exact.
    const double slab_lo = 0.5 - kWallThickness / 2.0;
    const double slab_hi = 0.5 + kWallThickness / 2.0;
    const double gap_lo = 0.5 - gap_width / 2.0;
    const double gap_hi = 0.5 + gap_width / 2.0;
    for (Eigen::Index axis = 1; axis < dim; ++axis) {
        if (gap_lo > 0.0) {
            State lo = State::Zero(dim);
            State hi = State::Ones(dim);
            lo[0] = slab_lo;
            hi[0] = slab_hi;
            hi[axis] = gap_lo;
            env.obstacles.emplace_back(std::move(lo), std::move(hi));
        }
        if (gap_hi < 1.0) {
            State lo = State::Zero(dim);
            State hi = State::Ones(dim);
            lo[0] = slab_lo;
            hi[0] = slab_hi;
            lo[axis] = gap_hi;
            env.obstacles.emplace_back(std::move(lo), std::move(hi));
        }
    }

    env.start = State::Constant(dim, 0.25);
    State goal = State::Constant(dim, 0.25);
    goal[0] = 0.75;
    env.goals.push_back(std::move(goal));
    env.validate();
    return env;
}

Environment makeRandomRectangles(Eigen::Index dim, int count, double max_side, std::uint64_t seed) {
    if (dim < 2) throw std::invalid_argument("makeRandomRectangles: dim must be >= 2");
    if (count < 0) throw std::invalid_argument("makeRandomRectangles: count must be >= 0");
    if (!(max_side > 0.0) || max_side > 1.0) {
        throw std::invalid_argument("makeRandomRectangles: max_side must be in (0, 1]");
    }

    Environment env;
    env.dim = dim;
    env.bounds = unitBounds(dim);
    env.delta = defaultDelta(env.bounds);
    env.start = State::Constant(dim, 0.25);
    env.goals.push_back(State::Constant(dim, 0.75));

    RngStream rng(seed);
    for (int b = 0; b < count; ++b) {
        bool placed = false;
        for (int attempt = 0; attempt < 1000 && !placed; ++attempt) {
            State lo(dim);
            State hi(dim);
            for (Eigen::Index i = 0; i < dim; ++i) {
                const double side = rng.uniform(max_side / 3.0, max_side);
                lo[i] = rng.uniform(0.0, 1.0 - side);
                hi[i] = lo[i] + side;
            }
            AxisBox box(std::move(lo), std::move(hi));
            bool blocked = box.contains(env.start);
            for (const State& g : env.goals) blocked = blocked || box.contains(g);
            if (!blocked) {
                env.obstacles.push_back(std::move(box));
                placed = true;
            }
        }
        if (!placed) {
            throw std::runtime_error("makeRandomRectangles: could not place an obstacle clear of start/goal");
        }
    }
    env.validate();
    return env;
}

}  // namespace litstar
