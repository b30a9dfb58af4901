// SPDX-License-Identifier: Apache-2.0
// Two fixed feedforward architectures with analytic forward/backward passes.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace litstar {

enum class Activation { ReLU, Logistic, Linear };

/// Single-input-channel 1-D convolution, zero-padded to preserve length.
/// W is out_channels x kernel; cross-correlation indexing.
struct Conv1D {
    Eigen::MatrixXd W;
    Eigen::VectorXd b;
    int kernel = 0;
};

struct Dense {
    Eigen::MatrixXd W;
    Eigen::VectorXd b;
    Activation act = Activation::Linear;
};

enum class Arch { Actor, Critic };

/// The policy net (9 inputs -> 3 logistic rule weights) or the value net
/// (9 + 1 action scalar -> 1 linear value). Both share the same shape:
/// a bank of three parallel convolutions (kernels 3, 5, 7, three output
/// channels each) over the input sequence, flattened channel-major, then
/// a 64-128-128-64-32 ReLU trunk and the head.
struct Network {
    Arch arch = Arch::Actor;
    std::array<Conv1D, 3> conv;
    std::vector<Dense> dense;
    /// Bumped by every parameter update; forward caches record it so a
    /// backward pass against mutated parameters is rejected.
    std::uint64_t version = 0;
};

[[nodiscard]] Eigen::Index inputWidth(Arch arch);
[[nodiscard]] Eigen::Index outputWidth(Arch arch);

/// Fresh network with uniform(-1/sqrt(fan_in), +1/sqrt(fan_in)) weights
/// and zero biases, deterministic in the seed.
Network makeNetwork(Arch arch, std::uint64_t seed);

/// Activations recorded by forward() for the matching backward().
struct ForwardCache {
    std::uint64_t version = 0;
    Eigen::VectorXd input;
    Eigen::VectorXd flat;                 // flattened conv-bank output
    std::vector<Eigen::VectorXd> pre;     // dense pre-activations
    std::vector<Eigen::VectorXd> post;    // dense activations
};

/// Gradients of a scalar loss with respect to every parameter array and
/// the input vector. Shapes mirror the network.
struct GradientBundle {
    struct ConvGrad {
        Eigen::MatrixXd W;
        Eigen::VectorXd b;
    };
    struct DenseGrad {
        Eigen::MatrixXd W;
        Eigen::VectorXd b;
    };
    std::array<ConvGrad, 3> conv;
    std::vector<DenseGrad> dense;
    Eigen::VectorXd input;
};

/// Deterministic forward pass; fills cache when given. Throws on input
/// width mismatch. Never mutates the network.
Eigen::VectorXd forward(const Network& net, const Eigen::VectorXd& input, ForwardCache* cache = nullptr);

/// Analytic gradients for upstream = d loss / d output. The cache must
/// come from a forward() against the network's current parameters; a
/// version mismatch throws.
GradientBundle backward(const Network& net, const ForwardCache& cache, const Eigen::VectorXd& upstream);

}  // namespace litstar
