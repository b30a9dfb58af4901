// SPDX-License-Identifier: Apache-2.0

#include "litstar/encoder/ledger.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <queue>
#include <stdexcept>

namespace litstar {

namespace {

constexpr std::size_t kMaxCells = std::size_t{1} << 18;
constexpr std::size_t kPerCellTarget = 3;
// Relative slack on squared-distance bounds; orders of magnitude above fp
// rounding, so cell pruning can never drop a qualifying state.
constexpr double kBoundSlack = 1e-9;

}  // namespace

SampleLedger::Id SampleLedger::addValid(State x) {
    if (x.size() != dim_) throw std::invalid_argument("SampleLedger::addValid: dimension mismatch");
    valid_.push_back(std::move(x));
    active_.push_back(1);
    ++active_count_;
    ++version_;
    const Id id = static_cast<Id>(valid_.size() - 1);
    gridAdd(valid_.back(), {id, 1});
    return id;
}

void SampleLedger::removeValid(Id id) {
    if (id >= valid_.size() || !active_[id]) {
        throw std::invalid_argument("SampleLedger::removeValid: id not active");
    }
    active_[id] = 0;
    --active_count_;
    ++version_;
    gridRemove(valid_[id], {id, 1});
}

void SampleLedger::addInvalid(State x) {
    if (x.size() != dim_) throw std::invalid_argument("SampleLedger::addInvalid: dimension mismatch");
    invalid_.push_back(std::move(x));
    ++version_;
    gridAdd(invalid_.back(), {static_cast<Id>(invalid_.size() - 1), 0});
}

std::size_t SampleLedger::cellOf(const State& x) const {
    const Grid& g = grid_;
    std::size_t flat = 0;
    for (Eigen::Index i = 0; i < g.axes; ++i) {
        double v = (x[i] - g.lo[i]) * g.inv_h[i];
        v = std::max(v, 0.0);
        v = std::min(v, static_cast<double>(g.m - 1));
        flat += static_cast<std::size_t>(v) * g.stride[i];
    }
    return flat;
}

bool SampleLedger::inGridBox(const State& x) const {
    for (Eigen::Index i = 0; i < grid_.axes; ++i) {
        if (x[i] < grid_.lo[i] || x[i] > grid_.hi[i]) return false;
    }
    return true;
}

void SampleLedger::gridAdd(const State& x, GridEntry e) {
    if (!grid_.live) return;
    if (!inGridBox(x)) {
        grid_.live = false;
        return;
    }
    grid_.cells[cellOf(x)].push_back(e);
}

void SampleLedger::gridRemove(const State& x, GridEntry e) {
    if (!grid_.live) return;
    auto& bucket = grid_.cells[cellOf(x)];
    const auto it = std::find_if(bucket.begin(), bucket.end(), [&](const GridEntry& b) {
        return b.index == e.index && b.is_valid == e.is_valid;
    });
    bucket.erase(it);
}

void SampleLedger::ensureGrid() const {
    const std::size_t total = active_count_ + invalid_.size();
    if (grid_.live && total <= grid_.built_entries * 2 + 256) return;
    rebuildGrid();
}

void SampleLedger::rebuildGrid() const {
    Grid g;
    g.axes = std::min<Eigen::Index>(dim_, 6);
    const std::size_t total = active_count_ + invalid_.size();

    std::array<double, 6> mn;
    std::array<double, 6> mx;
    mn.fill(std::numeric_limits<double>::infinity());
    mx.fill(-std::numeric_limits<double>::infinity());
    auto absorb = [&](const State& x) {
        for (Eigen::Index i = 0; i < g.axes; ++i) {
            mn[static_cast<std::size_t>(i)] = std::min(mn[static_cast<std::size_t>(i)], x[i]);
            mx[static_cast<std::size_t>(i)] = std::max(mx[static_cast<std::size_t>(i)], x[i]);
        }
    };
    forEachValid([&](Id, const State& x) { absorb(x); });
    for (const State& x : invalid_) absorb(x);
    if (total == 0) {
        mn.fill(0.0);
        mx.fill(1.0);
    }

    int m_cap = 1;
    while (g.axes > 0) {
        std::size_t cells = 1;
        bool fits = true;
        for (Eigen::Index i = 0; i < g.axes && fits; ++i) {
            fits = cells <= kMaxCells / static_cast<std::size_t>(m_cap + 1);
            if (fits) cells *= static_cast<std::size_t>(m_cap + 1);
        }
        if (!fits) break;
        ++m_cap;
    }
    int m = 1;
    if (g.axes > 0) {
        const double per_axis = std::pow(
            static_cast<double>(std::max<std::size_t>(total, 1)) / kPerCellTarget,
            1.0 / static_cast<double>(g.axes));
        m = static_cast<int>(per_axis);
    }
    g.m = std::clamp(m, 1, m_cap);

    std::size_t n_cells = 1;
    for (Eigen::Index i = 0; i < g.axes; ++i) {
        const std::size_t si = static_cast<std::size_t>(i);
        const double extent = mx[si] - mn[si];
        const double margin = 0.05 * extent + 1e-9;
        g.lo[si] = mn[si] - margin;
        const double span = (mx[si] + margin) - g.lo[si];
        g.h[si] = std::max(span, 1e-12) / g.m;
        g.inv_h[si] = 1.0 / g.h[si];
        g.hi[si] = g.lo[si] + g.h[si] * g.m;
        g.stride[si] = n_cells;
        n_cells *= static_cast<std::size_t>(g.m);
    }
    g.cells.assign(n_cells, {});
    g.built_entries = total;
    g.live = true;

    grid_ = std::move(g);
    forEachValid([&](Id id, const State& x) { grid_.cells[cellOf(x)].push_back({id, 1}); });
    for (std::size_t i = 0; i < invalid_.size(); ++i) {
        grid_.cells[cellOf(invalid_[i])].push_back({static_cast<Id>(i), 0});
    }
}

BallCounts SampleLedger::countWithin(const State& center, double r) const {
    if (center.size() != dim_) {
        throw std::invalid_argument("SampleLedger::countWithin: dimension mismatch");
    }
    BallCounts out;
    const double r2 = r * r;
    auto consider = [&](bool is_valid, const State& x) {
        ++out.distance_evals;
        if ((x - center).squaredNorm() <= r2) {
            if (is_valid) {
                ++out.valid;
            } else {
                ++out.invalid;
            }
        }
    };

    if (!(r > 0.0) || !std::isfinite(r)) {
        if (r < 0.0) return out;
        for (Id id = 0; id < valid_.size(); ++id) {
            if (active_[id]) consider(true, valid_[id]);
        }
        for (const State& x : invalid_) consider(false, x);
        return out;
    }
    if (active_count_ + invalid_.size() == 0) return out;

    ensureGrid();
    const Grid& g = grid_;

    // Cell range covering the ball, padded one cell to absorb boundary
    // rounding; cells provably outside the ball are skipped, and every
    // candidate is verified exactly, so the result matches a linear scan.
    std::array<int, 6> a{};
    std::array<int, 6> b{};
    for (Eigen::Index i = 0; i < g.axes; ++i) {
        const std::size_t si = static_cast<std::size_t>(i);
        const double va = std::floor((center[i] - r - g.lo[si]) * g.inv_h[si]);
        const double vb = std::floor((center[i] + r - g.lo[si]) * g.inv_h[si]);
        a[si] = static_cast<int>(std::clamp(va - 1.0, 0.0, static_cast<double>(g.m - 1)));
        b[si] = static_cast<int>(std::clamp(vb + 1.0, 0.0, static_cast<double>(g.m - 1)));
    }

    std::array<int, 6> idx = a;
    while (true) {
        double min_d2 = 0.0;
        for (Eigen::Index i = 0; i < g.axes; ++i) {
            const std::size_t si = static_cast<std::size_t>(i);
            const double cell_lo = g.lo[si] + idx[si] * g.h[si];
            const double gap =
                std::max({0.0, cell_lo - center[i], center[i] - (cell_lo + g.h[si])});
            min_d2 += gap * gap;
        }
        if (min_d2 <= r2 * (1.0 + kBoundSlack)) {
            std::size_t flat = 0;
            for (Eigen::Index i = 0; i < g.axes; ++i) {
                const std::size_t si = static_cast<std::size_t>(i);
                flat += static_cast<std::size_t>(idx[si]) * g.stride[si];
            }
            for (const GridEntry& e : g.cells[flat]) {
                if (e.is_valid) {
                    if (active_[e.index]) consider(true, valid_[e.index]);
                } else {
                    consider(false, invalid_[e.index]);
                }
            }
        }
        Eigen::Index ax = 0;
        while (ax < g.axes && idx[static_cast<std::size_t>(ax)] == b[static_cast<std::size_t>(ax)]) {
            idx[static_cast<std::size_t>(ax)] = a[static_cast<std::size_t>(ax)];
            ++ax;
        }
        if (ax == g.axes) break;
        ++idx[static_cast<std::size_t>(ax)];
    }
    return out;
}

std::vector<std::pair<double, SampleLedger::Id>> SampleLedger::kNearestValid(
    Id center, int k, std::size_t* distance_evals) const {
    if (center >= valid_.size() || !active_[center]) {
        throw std::invalid_argument("SampleLedger::kNearestValid: center not active");
    }
    std::size_t evals = 0;
    std::vector<std::pair<double, Id>> result;
    const std::size_t want =
        std::min<std::size_t>(static_cast<std::size_t>(std::max(k, 0)), active_count_ - 1);
    if (want == 0) {
        if (distance_evals) *distance_evals = 0;
        return result;
    }

    ensureGrid();
    const Grid& g = grid_;
    const State& p = valid_[center];

    std::array<int, 6> c{};
    for (Eigen::Index i = 0; i < g.axes; ++i) {
        const std::size_t si = static_cast<std::size_t>(i);
        double v = (p[i] - g.lo[si]) * g.inv_h[si];
        v = std::max(v, 0.0);
        v = std::min(v, static_cast<double>(g.m - 1));
        c[si] = static_cast<int>(v);
    }

    std::priority_queue<std::pair<double, Id>> best;
    auto scanCell = [&](std::size_t flat) {
        for (const GridEntry& e : g.cells[flat]) {
            if (!e.is_valid || e.index == center) continue;
            if (!active_[e.index]) continue;
            ++evals;
            const std::pair<double, Id> cand{(valid_[e.index] - p).squaredNorm(), e.index};
            if (best.size() < want) {
                best.push(cand);
            } else if (cand < best.top()) {
                best.pop();
                best.push(cand);
            }
        }
    };

    // Scan cells in growing Chebyshev rings around the center cell. Ring L
    // cells hold only states at least ringLower(L) away, and that bound
    // grows with L, so once the k-th best distance beats it the remaining
    // rings cannot contribute (ties stay inside the slack margin).
    auto ringLower = [&](int L) {
        double lb = std::numeric_limits<double>::infinity();
        for (Eigen::Index i = 0; i < g.axes; ++i) {
            const std::size_t si = static_cast<std::size_t>(i);
            const double cell_lo = g.lo[si] + c[si] * g.h[si];
            const double base = (L - 1) * g.h[si];
            if (c[si] - L >= 0) lb = std::min(lb, base + std::max(0.0, p[i] - cell_lo));
            if (c[si] + L <= g.m - 1) {
                lb = std::min(lb, base + std::max(0.0, (cell_lo + g.h[si]) - p[i]));
            }
        }
        return lb;
    };

    int l_max = 0;
    for (Eigen::Index i = 0; i < g.axes; ++i) {
        const std::size_t si = static_cast<std::size_t>(i);
        l_max = std::max({l_max, c[si], g.m - 1 - c[si]});
    }

    for (int L = 0; L <= l_max; ++L) {
        if (best.size() == want && L > 0) {
            const double lb = ringLower(L);
            if (lb * lb > best.top().first * (1.0 + kBoundSlack)) break;
        }
        if (L == 0) {
            std::size_t flat = 0;
            for (Eigen::Index i = 0; i < g.axes; ++i) {
                const std::size_t si = static_cast<std::size_t>(i);
                flat += static_cast<std::size_t>(c[si]) * g.stride[si];
            }
            scanCell(flat);
            continue;
        }
        std::array<int, 6> lo_off{};
        std::array<int, 6> hi_off{};
        std::array<int, 6> off{};
        for (Eigen::Index i = 0; i < g.axes; ++i) {
            const std::size_t si = static_cast<std::size_t>(i);
            lo_off[si] = std::max(-L, -c[si]);
            hi_off[si] = std::min(L, g.m - 1 - c[si]);
            off[si] = lo_off[si];
        }
        while (true) {
            int cheb = 0;
            for (Eigen::Index i = 0; i < g.axes; ++i) {
                cheb = std::max(cheb, std::abs(off[static_cast<std::size_t>(i)]));
            }
            if (cheb == L) {
                std::size_t flat = 0;
                for (Eigen::Index i = 0; i < g.axes; ++i) {
                    const std::size_t si = static_cast<std::size_t>(i);
                    flat += static_cast<std::size_t>(c[si] + off[si]) * g.stride[si];
                }
                scanCell(flat);
            }
            Eigen::Index ax = 0;
            while (ax < g.axes &&
                   off[static_cast<std::size_t>(ax)] == hi_off[static_cast<std::size_t>(ax)]) {
                off[static_cast<std::size_t>(ax)] = lo_off[static_cast<std::size_t>(ax)];
                ++ax;
            }
            if (ax == g.axes) break;
            ++off[static_cast<std::size_t>(ax)];
        }
    }

    result.resize(best.size());
    for (std::size_t i = result.size(); i-- > 0;) {
        result[i] = best.top();
        best.pop();
    }
    if (distance_evals) *distance_evals = evals;
    return result;
}

}  // namespace litstar
