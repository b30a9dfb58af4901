// SPDX-License-Identifier: Apache-2.0
// Prioritized experience replay over a sum tree.
#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "litstar/space/rng.hpp"

namespace litstar {

/// One decision step: fuzzified observation, rule weights emitted by the
/// actor (post-logistic), the crisp defuzzified action, reward, successor
/// observation, terminal flag.
struct Transition {
    std::array<double, 9> s{};
    std::array<double, 3> a{};
    double z = 0.0;
    double r = 0.0;
    std::array<double, 9> s_next{};
    bool done = false;
};

/// Binary indexed tree of nonnegative masses supporting point updates,
/// total queries, and prefix-mass search in O(log n).
class SumTree {
public:
    explicit SumTree(std::size_t capacity);

    void set(std::size_t idx, double value);
    [[nodiscard]] double get(std::size_t idx) const;
    [[nodiscard]] double total() const;
    /// Index of the leaf whose cumulative interval contains mass
    /// (0 <= mass < total), clamped into [0, capacity).
    [[nodiscard]] std::size_t find(double mass) const;

private:
    std::size_t capacity_;
    std::size_t leaves_;  // power of two >= capacity
    std::vector<double> tree_;
};

/// Ring buffer of transitions with proportional prioritized sampling:
/// P(i) = p_i^alpha / sum p_j^alpha. New transitions enter at the maximum
/// raw priority seen so far; priorities are floored at 1e-6.
class ReplayBuffer {
public:
    ReplayBuffer(std::size_t capacity, double alpha);

    void add(Transition t);
    [[nodiscard]] std::size_t size() const { return size_; }
    [[nodiscard]] std::size_t capacity() const { return capacity_; }
    [[nodiscard]] double alpha() const { return alpha_; }
    [[nodiscard]] const Transition& at(std::size_t idx) const { return data_[idx]; }
    [[nodiscard]] double priority(std::size_t idx) const { return priorities_[idx]; }

    /// Updates a stored transition's raw priority (floored).
    void setPriority(std::size_t idx, double p);

    struct SampleResult {
        std::vector<std::size_t> indices;
        std::vector<double> weights;  // (N P(i))^-beta, normalized by batch max
    };

    /// m independent prioritized draws with importance weights. Throws if
    /// fewer than m transitions are stored.
    [[nodiscard]] SampleResult sample(std::size_t m, double beta, RngStream& rng) const;

private:
    std::size_t capacity_;
    double alpha_;
    std::vector<Transition> data_;
    std::vector<double> priorities_;
    SumTree tree_;
    std::size_t next_ = 0;
    std::size_t size_ = 0;
    double max_priority_ = 1.0;
};

}  // namespace litstar
