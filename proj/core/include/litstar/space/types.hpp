// SPDX-License-Identifier: Apache-2.0
//
// Basic value types for n-dimensional configuration spaces.

#pragma once

#include <Eigen/Core>
#include <stdexcept>

namespace litstar {

/// A configuration-space state: n unitless real coordinates.
using State = Eigen::VectorXd;

/// Axis-aligned box, used both as the space bounds and as the obstacle
/// primitive. Requires lo[i] <= hi[i] on every axis.
struct AxisBox {
    State lo;
    State hi;

    AxisBox() = default;
    AxisBox(State lower, State upper) : lo(std::move(lower)), hi(std::move(upper)) {
        if (lo.size() != hi.size()) {
            throw std::invalid_argument("AxisBox: lo/hi dimension mismatch");
        }
        for (Eigen::Index i = 0; i < lo.size(); ++i) {
            if (lo[i] > hi[i]) {
                throw std::invalid_argument("AxisBox: lo > hi");
            }
        }
    }

    [[nodiscard]] Eigen::Index dim() const { return lo.size(); }

    /// Closed containment test (boundary counts as inside).
    [[nodiscard]] bool contains(const State& x) const {
        return (x.array() >= lo.array()).all() && (x.array() <= hi.array()).all();
    }

    /// Lebesgue measure (product of extents).
    [[nodiscard]] double measure() const {
        double m = 1.0;
        for (Eigen::Index i = 0; i < lo.size(); ++i) m *= hi[i] - lo[i];
        return m;
    }

    [[nodiscard]] State extent() const { return hi - lo; }
    [[nodiscard]] State center() const { return 0.5 * (lo + hi); }
};

}  // namespace litstar
