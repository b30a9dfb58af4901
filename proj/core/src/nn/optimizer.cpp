// SPDX-License-Identifier: Apache-2.0

#include "litstar/nn/optimizer.hpp"

#include <cmath>
#include <stdexcept>

namespace litstar {

namespace {

// Applies fn(param_matrix) to every parameter array in traversal order.
template <class Net, class F>
void visitParams(Net& net, F&& fn) {
    for (auto& c : net.conv) {
        fn(c.W);
        fn(c.b);
    }
    for (auto& d : net.dense) {
        fn(d.W);
        fn(d.b);
    }
}

// Applies fn(param, grad) pairwise over network and gradient arrays.
template <class F>
void visitWithGrads(Network& net, const GradientBundle& g, F&& fn) {
    if (g.dense.size() != net.dense.size()) {
        throw std::invalid_argument("gradient bundle does not match network");
    }
    for (std::size_t i = 0; i < net.conv.size(); ++i) {
        fn(net.conv[i].W, g.conv[i].W);
        fn(net.conv[i].b, g.conv[i].b);
    }
    for (std::size_t i = 0; i < net.dense.size(); ++i) {
        fn(net.dense[i].W, g.dense[i].W);
        fn(net.dense[i].b, g.dense[i].b);
    }
}

}  // namespace

AdamState makeAdam(const Network& net, double lr) {
    AdamState s;
    s.lr = lr;
    visitParams(net, [&](const auto& p) {
        s.m.emplace_back(Eigen::MatrixXd::Zero(p.rows(), p.cols()));
        s.v.emplace_back(Eigen::MatrixXd::Zero(p.rows(), p.cols()));
    });
    return s;
}

void adamStep(AdamState& state, Network& net, const GradientBundle& grads) {
    ++state.step;
    const double bc1 = 1.0 - std::pow(state.beta1, static_cast<double>(state.step));
    const double bc2 = 1.0 - std::pow(state.beta2, static_cast<double>(state.step));
    std::size_t slot = 0;
    visitWithGrads(net, grads, [&](auto& p, const auto& g) {
        if (p.rows() != g.rows() || p.cols() != g.cols()) {
            throw std::invalid_argument("adamStep: gradient shape mismatch");
        }
        if (!g.allFinite()) {
            throw std::runtime_error("adamStep: non-finite gradient, halting");
        }
        Eigen::MatrixXd& m = state.m[slot];
        Eigen::MatrixXd& v = state.v[slot];
        ++slot;
        m = state.beta1 * m + (1.0 - state.beta1) * g;
        v.array() = state.beta2 * v.array() + (1.0 - state.beta2) * g.array().square();
        p.array() -= state.lr * (m.array() / bc1) / ((v.array() / bc2).sqrt() + state.eps);
    });
    if (slot != state.m.size()) throw std::invalid_argument("adamStep: state does not match network");
    ++net.version;
}

void softUpdate(Network& target, const Network& online, double tau) {
    if (target.arch != online.arch || target.dense.size() != online.dense.size()) {
        throw std::invalid_argument("softUpdate: architecture mismatch");
    }
    for (std::size_t i = 0; i < target.conv.size(); ++i) {
        if (target.conv[i].W.rows() != online.conv[i].W.rows() ||
            target.conv[i].W.cols() != online.conv[i].W.cols()) {
            throw std::invalid_argument("softUpdate: architecture mismatch");
        }
        target.conv[i].W = tau * online.conv[i].W + (1.0 - tau) * target.conv[i].W;
        target.conv[i].b = tau * online.conv[i].b + (1.0 - tau) * target.conv[i].b;
    }
    for (std::size_t i = 0; i < target.dense.size(); ++i) {
        if (target.dense[i].W.rows() != online.dense[i].W.rows() ||
            target.dense[i].W.cols() != online.dense[i].W.cols()) {
            throw std::invalid_argument("softUpdate: architecture mismatch");
        }
        target.dense[i].W = tau * online.dense[i].W + (1.0 - tau) * target.dense[i].W;
        target.dense[i].b = tau * online.dense[i].b + (1.0 - tau) * target.dense[i].b;
    }
    ++target.version;
}

void copyParams(Network& target, const Network& online) { softUpdate(target, online, 1.0); }

}  // namespace litstar
