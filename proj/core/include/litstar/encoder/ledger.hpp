// SPDX-License-Identifier: Apache-2.0
// Sample ledger: every drawn sample classified valid/invalid, with radius queries.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "litstar/space/types.hpp"

namespace litstar {

/// Counts of ledgered states inside a query ball, plus the number of exact
/// distance evaluations the query performed (for cost accounting).
struct BallCounts {
    std::size_t valid = 0;
    std::size_t invalid = 0;
    std::size_t distance_evals = 0;
};

/// Append-mostly store of classified samples. Valid states live in an
/// arena addressed by stable ids and can be retired (pruning); invalid
/// states are kept forever (the global invalid ratio needs them).
/// Single-writer: the planner loop mutates, everything else reads.
///
/// Spatial queries are served from a cell-bucket index over the first
/// min(n, 6) axes. The index is maintained incrementally across
/// mutations and rebuilt when the population outgrows the cell layout;
/// every query verifies candidates by exact distance, so results are
/// identical to a linear scan.
class SampleLedger {
public:
    using Id = std::uint32_t;

    explicit SampleLedger(Eigen::Index dim) : dim_(dim) {}

    [[nodiscard]] Eigen::Index dim() const { return dim_; }

    /// Stores a valid state and returns its stable id.
    Id addValid(State x);

    /// Retires a valid state. Its id is never reused.
    void removeValid(Id id);

    void addInvalid(State x);

    [[nodiscard]] std::size_t validCount() const { return active_count_; }
    [[nodiscard]] std::size_t invalidCount() const { return invalid_.size(); }
    /// Total states ever classified and still on the books (q in the
    /// connectivity-radius formula): active valid + all invalid.
    [[nodiscard]] std::size_t classifiedCount() const { return active_count_ + invalid_.size(); }

    [[nodiscard]] const State& validState(Id id) const { return valid_[id]; }
    [[nodiscard]] bool isActive(Id id) const { return active_[id] != 0; }
    /// Upper bound (exclusive) on ids handed out so far.
    [[nodiscard]] Id idEnd() const { return static_cast<Id>(valid_.size()); }

    /// Bumped on every mutation; lets read-side caches detect staleness.
    [[nodiscard]] std::uint64_t version() const { return version_; }

    /// Calls fn(id, state) for every active valid state, in id order.
    template <class F>
    void forEachValid(F&& fn) const {
        for (Id id = 0; id < valid_.size(); ++id) {
            if (active_[id]) fn(id, valid_[id]);
        }
    }

    /// Counts active valid and invalid states with |x - center| <= r.
    /// r <= 0 degenerates to a linear scan.
    [[nodiscard]] BallCounts countWithin(const State& center, double r) const;

    /// The k active valid states nearest to the state with id `center`
    /// (itself excluded), ascending by (squared distance, id). When
    /// `distance_evals` is given it receives the number of exact distance
    /// computations the query performed.
    [[nodiscard]] std::vector<std::pair<double, Id>> kNearestValid(
        Id center, int k, std::size_t* distance_evals = nullptr) const;

private:
    struct GridEntry {
        Id index;  // id into valid_ or position into invalid_
        std::uint8_t is_valid;
    };

    struct Grid {
        Eigen::Index axes = 0;  // gridded axes, min(dim, 6)
        int m = 1;              // cells per axis
        double lo[6] = {};      // box origin per gridded axis
        double hi[6] = {};      // box upper edge, lo + m * h
        double h[6] = {};       // cell edge per gridded axis
        double inv_h[6] = {};
        std::size_t stride[6] = {};
        std::vector<std::vector<GridEntry>> cells;
        std::size_t built_entries = 0;
        bool live = false;  // cells mirror the population exactly
    };

    void ensureGrid() const;
    void rebuildGrid() const;
    [[nodiscard]] std::size_t cellOf(const State& x) const;
    [[nodiscard]] bool inGridBox(const State& x) const;
    void gridAdd(const State& x, GridEntry e);
    void gridRemove(const State& x, GridEntry e);

    Eigen::Index dim_;
    std::vector<State> valid_;
    std::vector<std::uint8_t> active_;
    std::size_t active_count_ = 0;
    std::vector<State> invalid_;
    std::uint64_t version_ = 0;

    mutable Grid grid_;
};

}  // namespace litstar
