// SPDX-License-Identifier: Apache-2.0

#include "litstar/ddpg/replay.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace litstar {

namespace {
constexpr double kPriorityFloor = 1e-6;
}

SumTree::SumTree(std::size_t capacity) : capacity_(capacity) {
    if (capacity == 0) throw std::invalid_argument("SumTree: capacity must be > 0");
    leaves_ = 1;
    while (leaves_ < capacity) leaves_ *= 2;
    tree_.assign(2 * leaves_, 0.0);
}

void SumTree::set(std::size_t idx, double value) {
    if (idx >= capacity_) throw std::out_of_range("SumTree::set: index out of range");
    if (!(value >= 0.0)) throw std::invalid_argument("SumTree::set: value must be >= 0");
    std::size_t node = leaves_ + idx;
    tree_[node] = value;
    for (node /= 2; node >= 1; node /= 2) {
        tree_[node] = tree_[2 * node] + tree_[2 * node + 1];
    }
}

double SumTree::get(std::size_t idx) const {
    if (idx >= capacity_) throw std::out_of_range("SumTree::get: index out of range");
    return tree_[leaves_ + idx];
}

double SumTree::total() const { return tree_[1]; }

std::size_t SumTree::find(double mass) const {
    std::size_t node = 1;
    while (node < leaves_) {
        const double left = tree_[2 * node];
        if (mass < left) {
            node = 2 * node;
        } else {
            mass -= left;
            node = 2 * node + 1;
        }
    }
    return std::min(node - leaves_, capacity_ - 1);
}

ReplayBuffer::ReplayBuffer(std::size_t capacity, double alpha)
    : capacity_(capacity), alpha_(alpha), tree_(capacity == 0 ? 1 : capacity) {
    if (capacity == 0) throw std::invalid_argument("ReplayBuffer: capacity must be > 0");
    if (alpha < 0.0) throw std::invalid_argument("ReplayBuffer: alpha must be >= 0");
    data_.resize(capacity);
    priorities_.assign(capacity, 0.0);
}

void ReplayBuffer::add(Transition t) {
    const std::size_t idx = next_;
    data_[idx] = t;
    next_ = (next_ + 1) % capacity_;
    if (size_ < capacity_) ++size_;
    priorities_[idx] = max_priority_;
    tree_.set(idx, std::pow(max_priority_, alpha_));
}

void ReplayBuffer::setPriority(std::size_t idx, double p) {
    if (idx >= size_) throw std::out_of_range("ReplayBuffer::setPriority: index out of range");
    p = std::max(p, kPriorityFloor);
    priorities_[idx] = p;
    max_priority_ = std::max(max_priority_, p);
    tree_.set(idx, std::pow(p, alpha_));
}

ReplayBuffer::SampleResult ReplayBuffer::sample(std::size_t m, double beta, RngStream& rng) const {
    if (size_ < m) throw std::invalid_argument("ReplayBuffer::sample: fewer transitions than batch size");
    SampleResult out;
    out.indices.reserve(m);
    out.weights.reserve(m);
    const double total = tree_.total();
    if (!(total > 0.0)) throw std::runtime_error("ReplayBuffer::sample: empty priority mass");
    const double n = static_cast<double>(size_);
    double wmax = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        // Occupied slots are exactly [0, size); clamp guards the edge case
        // of rounding in the prefix search landing on an empty slot.
        const std::size_t idx = std::min(tree_.find(rng.uniform01() * total), size_ - 1);
        const double prob = tree_.get(idx) / total;
        const double w = std::pow(n * prob, -beta);
        out.indices.push_back(idx);
        out.weights.push_back(w);
        wmax = std::max(wmax, w);
    }
    for (double& w : out.weights) w /= wmax;
    return out;
}

}  // namespace litstar
