// SPDX-License-Identifier: Apache-2.0

#include "litstar/planner/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "litstar/encoder/ledger.hpp"
#include "litstar/encoder/observation.hpp"
#include "litstar/space/sampling.hpp"

namespace litstar {

int computeK(double psi, double eta, Eigen::Index n, std::size_t q) {
    if (q < 2) return 1;
    const double nd = static_cast<double>(n);
    const double raw = eta * M_E * psi * (1.0 + 1.0 / nd) * std::log(static_cast<double>(q));
    double k = std::ceil(raw);
    k = std::min(k, static_cast<double>(q - 1));
    k = std::max(k, 1.0);
    return static_cast<int>(k);
}

std::vector<std::pair<double, SampleLedger::Id>> kNearestValid(const SampleLedger& ledger,
                                                               SampleLedger::Id center, int k,
                                                               std::size_t* distance_evals) {
    return ledger.kNearestValid(center, k, distance_evals);
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class StateKind : std::uint8_t { Sample, Vertex, Pruned };

struct QueueEntry {
    double key;
    std::uint64_t seq;
    std::uint32_t a;
    std::uint32_t b;
};

struct QueueCmp {
    bool operator()(const QueueEntry& l, const QueueEntry& r) const {
        if (l.key != r.key) return l.key > r.key;
        return l.seq > r.seq;
    }
};

using MinHeap = std::priority_queue<QueueEntry, std::vector<QueueEntry>, QueueCmp>;

std::uint64_t edgeKey(std::uint32_t a, std::uint32_t b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::uint64_t cellHash(const std::int64_t* cells, Eigen::Index m) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (Eigen::Index i = 0; i < m; ++i) {
        h ^= static_cast<std::uint64_t>(cells[i]);
        h *= 0x100000001b3ULL;
        h ^= h >> 29;
    }
    return h;
}

class Worker {
public:
    Worker(const Environment& env, const PlannerConfig& config, RngStream& rng,
           ParameterPolicy& policy)
        : env_(env),
          config_(config),
          rng_(rng),
          policy_(policy),
          ledger_(env.dim),
          clock_(config.clock, config.clock_units_per_second) {
        reach_axes_ = std::min<Eigen::Index>(env.dim, 6);
        diag_ = std::max((env.bounds.hi - env.bounds.lo).norm(), 1e-12);
        class_max_ = std::max(std::ilogb(diag_) + 1, kClassMin);
    }

    PlanResult run();

private:
    using Id = SampleLedger::Id;

    // Setup and bookkeeping ------------------------------------------------
    Id registerValid(State x);
    void classifySample(State x);
    double heuristic(const State& x);
    [[nodiscard]] InformedSet informedSet() const;
    [[nodiscard]] DecisionContext context(double now) const;
    [[nodiscard]] MapObservation baseObservation() const;
    [[nodiscard]] std::vector<State> bestPathStates() const;

    // Search steps ---------------------------------------------------------
    std::optional<QueueEntry> nextProcessableEdge();
    std::optional<Id> nextExpandableVertex();
    void processEdge(Id a, Id b, double d);
    void expandVertex(Id v, int k);
    void rewire(Id b, Id new_parent, double g_new);
    void maybeRecordSolution();
    void prune();
    void drawBatch(int batch);
    void pairFreshSamples(Id first_new);

    // Vertex reach index ---------------------------------------------------
    [[nodiscard]] int reachClass(double r) const;
    [[nodiscard]] std::uint64_t reachCellKey(const State& x, double cell) const;
    void indexVertex(Id v, double reach);
    void unindexVertex(Id v);

    const Environment& env_;
    const PlannerConfig& config_;
    RngStream& rng_;
    ParameterPolicy& policy_;
    SampleLedger ledger_;
    PlannerClock clock_;

    std::vector<StateKind> kind_;
    std::vector<double> g_;
    std::vector<double> h_;
    std::vector<double> expanded_g_;
    std::vector<std::int64_t> parent_;
    std::vector<std::vector<Id>> children_;

    Id start_id_ = 0;
    std::vector<Id> goal_ids_;
    MinHeap equeue_;
    MinHeap vqueue_;
    std::uint64_t seq_ = 0;
    std::unordered_set<std::uint64_t> edges_valid_;
    std::unordered_set<std::uint64_t> edges_invalid_;

    double c_best_ = kInf;
    Id best_goal_ = 0;
    std::vector<Id> best_path_ids_;
    std::unordered_set<Id> on_best_path_;
    int n_update_ = 0;
    double t_last_update_ = 0.0;
    double update_gap_ = 0.0;
    bool solution_updated_ = false;

    State x_center_k_;
    int pending_batch_ = 0;
    std::vector<SolutionRecord> records_;
    PlanStats stats_;

    // Expanded vertices bucketed by reach class so fresh samples can find
    // every vertex whose neighbor radius covers them.
    static constexpr int kNoClass = std::numeric_limits<int>::min();
    static constexpr int kClassMin = -30;
    std::map<int, std::unordered_map<std::uint64_t, std::vector<Id>>> reach_index_;
    std::vector<double> reach_;
    std::vector<int> reach_class_;
    std::vector<std::uint32_t> pair_count_;
    std::vector<std::uint64_t> pair_epoch_;
    Eigen::Index reach_axes_ = 0;
    int class_max_ = 0;
    double diag_ = 1.0;
    double last_prune_cost_ = kInf;
};

Worker::Id Worker::registerValid(State x) {
    const double h = heuristic(x);
    const Id id = ledger_.addValid(std::move(x));
    kind_.push_back(StateKind::Sample);
    g_.push_back(kInf);
    h_.push_back(h);
    expanded_g_.push_back(kInf);
    parent_.push_back(-1);
    children_.emplace_back();
    reach_.push_back(0.0);
    reach_class_.push_back(kNoClass);
    pair_count_.push_back(0);
    pair_epoch_.push_back(0);
    return id;
}

int Worker::reachClass(double r) const {
    if (!(r > 0.0)) return kClassMin;
    return std::clamp(std::ilogb(r), kClassMin, class_max_);
}

std::uint64_t Worker::reachCellKey(const State& x, double cell) const {
    std::int64_t cells[6];
    for (Eigen::Index i = 0; i < reach_axes_; ++i) {
        cells[i] = static_cast<std::int64_t>(std::floor(x[i] / cell));
    }
    return cellHash(cells, reach_axes_);
}

void Worker::indexVertex(Id v, double reach) {
    unindexVertex(v);
    reach = std::min(reach, diag_);
    const int cls = reachClass(reach);
    reach_[v] = reach;
    reach_class_[v] = cls;
    reach_index_[cls][reachCellKey(ledger_.validState(v), std::ldexp(1.0, cls + 1))].push_back(v);
}

void Worker::unindexVertex(Id v) {
    const int cls = reach_class_[v];
    if (cls == kNoClass) return;
    auto& cells = reach_index_[cls];
    const auto it = cells.find(reachCellKey(ledger_.validState(v), std::ldexp(1.0, cls + 1)));
    auto& bucket = it->second;
    bucket.erase(std::find(bucket.begin(), bucket.end(), v));
    if (bucket.empty()) cells.erase(it);
    if (cells.empty()) reach_index_.erase(cls);
    reach_class_[v] = kNoClass;
    reach_[v] = 0.0;
}

double Worker::heuristic(const State& x) {
    double best = kInf;
    for (const State& goal : env_.goals) {
        best = std::min(best, (goal - x).norm());
    }
    clock_.addWork(env_.goals.size());
    return best;
}

void Worker::classifySample(State x) {
    clock_.addWork(1);
    if (isStateValid(env_, x)) {
        registerValid(std::move(x));
    } else {
        ledger_.addInvalid(std::move(x));
    }
}

InformedSet Worker::informedSet() const {
    if (!std::isfinite(c_best_)) return InformedSet(env_.start, env_.goals.front());
    // A fully straightened path can round a hair below the focal distance;
    // floor the cost at it so the spheroid stays well-formed.
    const State& focus = ledger_.validState(best_goal_);
    const double c_min = (focus - env_.start).norm();
    return InformedSet(env_.start, focus, std::max(c_best_, c_min));
}

DecisionContext Worker::context(double now) const {
    DecisionContext ctx;
    ctx.update_gap = n_update_ > 0 ? update_gap_ : now;
    ctx.seconds_since_update = now - t_last_update_;
    ctx.best_cost = c_best_;
    ctx.n_update = n_update_;
    ctx.path_len = best_path_ids_.size();
    ctx.has_solution = std::isfinite(c_best_);
    ctx.elapsed = now;
    return ctx;
}

MapObservation Worker::baseObservation() const {
    MapObservation obs;
    obs.rho_global = ratioCalc(ledger_.invalidCount(), ledger_.validCount());
    obs.lambda_norm = lambdaNorm(informedSet(), env_);
    obs.rho_local = 0.0;
    return obs;
}

std::vector<State> Worker::bestPathStates() const {
    std::vector<State> path;
    path.reserve(best_path_ids_.size());
    for (const Id id : best_path_ids_) path.push_back(ledger_.validState(id));
    return path;
}

std::optional<QueueEntry> Worker::nextProcessableEdge() {
    while (!equeue_.empty()) {
        QueueEntry e = equeue_.top();
        equeue_.pop();
        clock_.addWork(1);
        if (kind_[e.a] != StateKind::Vertex) continue;
        if (!ledger_.isActive(e.b)) continue;
        const double d = (ledger_.validState(e.a) - ledger_.validState(e.b)).norm();
        clock_.addWork(1);
        const double true_key = g_[e.a] + d + h_[e.b];
        if (true_key < e.key) {
            // The source's cost-to-come improved since this entry was
            // pushed; restore heap order before judging it.
            equeue_.push({true_key, seq_++, e.a, e.b});
            continue;
        }
        if (true_key >= c_best_) continue;
        e.key = d;  // repurposed: carries the edge length to processEdge
        return e;
    }
    return std::nullopt;
}

std::optional<Worker::Id> Worker::nextExpandableVertex() {
    while (!vqueue_.empty()) {
        const QueueEntry e = vqueue_.top();
        vqueue_.pop();
        clock_.addWork(1);
        const Id v = e.a;
        if (kind_[v] != StateKind::Vertex) continue;
        const double key = g_[v] + h_[v];
        if (key < e.key) {
            vqueue_.push({key, seq_++, v, 0});
            continue;
        }
        if (key >= c_best_) continue;
        if (expanded_g_[v] <= g_[v]) continue;  // nothing new since last expansion
        return v;
    }
    return std::nullopt;
}

void Worker::expandVertex(Id v, int k) {
    const State& xv = ledger_.validState(v);
    std::size_t evals = 0;
    const auto candidates = kNearestValid(ledger_, v, k, &evals);
    clock_.addWork(evals);

    for (const auto& [d2, u] : candidates) {
        if (parent_[v] >= 0 && static_cast<Id>(parent_[v]) == u) continue;
        const double d = std::sqrt(d2);
        const double key = g_[v] + d + h_[u];
        if (key >= c_best_) continue;
        if (kind_[u] == StateKind::Vertex && g_[v] + d >= g_[u]) continue;
        if (edges_invalid_.count(edgeKey(v, u)) != 0) continue;
        equeue_.push({key, seq_++, v, u});
    }

    // The Kth-neighbor distance becomes this vertex's reach: future samples
    // landing inside it are paired back to the vertex at batch time. A short
    // candidate list means everything currently ledgered is in reach.
    const double reach = candidates.size() < static_cast<std::size_t>(std::max(k, 1))
                             ? diag_
                             : std::sqrt(candidates.back().first);
    indexVertex(v, reach);
    expanded_g_[v] = g_[v];
    x_center_k_ = xv;
    ++stats_.expansions;
}

void Worker::rewire(Id b, Id new_parent, double g_new) {
    if (parent_[b] >= 0) {
        auto& siblings = children_[static_cast<std::size_t>(parent_[b])];
        siblings.erase(std::find(siblings.begin(), siblings.end(), b));
    }
    const double delta = g_[b] - g_new;
    parent_[b] = static_cast<std::int64_t>(new_parent);
    children_[new_parent].push_back(b);

    std::vector<Id> stack = {b};
    while (!stack.empty()) {
        const Id u = stack.back();
        stack.pop_back();
        g_[u] -= delta;
        vqueue_.push({g_[u] + h_[u], seq_++, u, 0});
        for (const Id c : children_[u]) stack.push_back(c);
    }
}

void Worker::processEdge(Id a, Id b, double d) {
    const double g_new = g_[a] + d;
    if (g_new >= g_[b]) return;

    const std::uint64_t ek = edgeKey(a, b);
    if (edges_invalid_.count(ek) != 0) return;
    if (edges_valid_.count(ek) == 0) {
        std::uint64_t checks = 0;
        const bool ok = isEdgeValidCounted(env_, ledger_.validState(a), ledger_.validState(b), checks);
        clock_.addWork(checks);
        if (!ok) {
            edges_invalid_.insert(ek);
            return;
        }
        edges_valid_.insert(ek);
    }

    if (kind_[b] == StateKind::Sample) {
        kind_[b] = StateKind::Vertex;
        parent_[b] = static_cast<std::int64_t>(a);
        children_[a].push_back(b);
        g_[b] = g_new;
        vqueue_.push({g_new + h_[b], seq_++, b, 0});
    } else {
        rewire(b, a, g_new);
    }
    ++stats_.edges_processed;
    maybeRecordSolution();
}

void Worker::maybeRecordSolution() {
    double best = kInf;
    Id arg = 0;
    for (const Id gid : goal_ids_) {
        if (kind_[gid] == StateKind::Vertex && g_[gid] < best) {
            best = g_[gid];
            arg = gid;
        }
    }
    if (!(best < c_best_)) return;

    c_best_ = best;
    best_goal_ = arg;
    best_path_ids_.clear();
    for (std::int64_t id = static_cast<std::int64_t>(arg); id >= 0; id = parent_[static_cast<std::size_t>(id)]) {
        best_path_ids_.push_back(static_cast<Id>(id));
    }
    std::reverse(best_path_ids_.begin(), best_path_ids_.end());
    on_best_path_.clear();
    on_best_path_.insert(best_path_ids_.begin(), best_path_ids_.end());

    const double now = clock_.elapsed();
    update_gap_ = now - t_last_update_;
    t_last_update_ = now;
    ++n_update_;
    solution_updated_ = true;

    SolutionRecord rec;
    rec.path = bestPathStates();
    rec.cost = c_best_;
    rec.time = now;
    rec.n_update = n_update_;
    records_.push_back(std::move(rec));
}

void Worker::prune() {
    if (!std::isfinite(c_best_)) return;
    const State& xs = env_.start;
    auto lowerBound = [&](Id id) {
        clock_.addWork(1);
        return (ledger_.validState(id) - xs).norm() + h_[id];
    };

    for (Id id = 0; id < ledger_.idEnd(); ++id) {
        if (!ledger_.isActive(id) || kind_[id] == StateKind::Pruned) continue;
        if (on_best_path_.count(id) != 0) continue;
        if (lowerBound(id) < c_best_) continue;

        if (kind_[id] == StateKind::Sample) {
            ledger_.removeValid(id);
            kind_[id] = StateKind::Pruned;
            continue;
        }

        // A dominated vertex takes its whole subtree off the tree: the
        // subtree loses its cost-to-come. Members on the best path never
        // occur here (their ancestors are on the path too, hence kept);
        // dominated members are dropped, the rest return to the sample
        // pool for later reconnection.
        std::vector<Id> subtree;
        std::vector<Id> stack = {id};
        while (!stack.empty()) {
            const Id u = stack.back();
            stack.pop_back();
            subtree.push_back(u);
            for (const Id c : children_[u]) stack.push_back(c);
        }
        if (parent_[id] >= 0) {
            auto& siblings = children_[static_cast<std::size_t>(parent_[id])];
            siblings.erase(std::find(siblings.begin(), siblings.end(), id));
        }
        for (const Id u : subtree) {
            parent_[u] = -1;
            children_[u].clear();
            g_[u] = kInf;
            expanded_g_[u] = kInf;
            unindexVertex(u);
            if (u != id && (on_best_path_.count(u) != 0 || lowerBound(u) < c_best_)) {
                kind_[u] = StateKind::Sample;
            } else {
                ledger_.removeValid(u);
                kind_[u] = StateKind::Pruned;
            }
        }
    }
}

void Worker::drawBatch(int batch) {
    const InformedSet inf = informedSet();
    const Id first_new = ledger_.idEnd();
    for (int i = 0; i < batch; ++i) {
        State x = std::isfinite(c_best_) ? sampleInformed(inf, env_, rng_)
                                         : sampleUniform(env_, rng_);
        classifySample(std::move(x));
    }
    ++stats_.batches;
    pairFreshSamples(first_new);
}

void Worker::pairFreshSamples(Id first_new) {
    // Fresh samples meet the tree through this reverse pass: each one is
    // tested against every indexed vertex whose reach can cover it, and
    // qualifying pairs enter the edge queue directly. Old vertices are never
    // re-expanded just because the batch advanced; a vertex pairing with far
    // more samples than its neighbor count warrants has a stale reach from a
    // sparser ledger and is sent back for a full expansion instead.
    if (first_new == ledger_.idEnd() || reach_index_.empty()) return;
    const int k_ref = computeK(3.0, config_.eta * config_.rewire_factor, env_.dim,
                               ledger_.classifiedCount());
    const std::size_t fresh = ledger_.idEnd() - first_new;
    const std::size_t refresh_at =
        std::max<std::size_t>(16, 8 * static_cast<std::size_t>(k_ref) * fresh /
                                      std::max<std::size_t>(ledger_.validCount(), 1));
    std::vector<Id> refresh;
    for (Id x = first_new; x < ledger_.idEnd(); ++x) {
        const State& sx = ledger_.validState(x);
        for (const auto& [cls, cells] : reach_index_) {
            const double cell = std::ldexp(1.0, cls + 1);
            std::int64_t base[6];
            for (Eigen::Index i = 0; i < reach_axes_; ++i) {
                base[i] = static_cast<std::int64_t>(std::floor(sx[i] / cell));
            }
            std::int64_t probe[6];
            int off[6] = {0, 0, 0, 0, 0, 0};
            for (Eigen::Index i = 0; i < reach_axes_; ++i) off[i] = -1;
            while (true) {
                for (Eigen::Index i = 0; i < reach_axes_; ++i) probe[i] = base[i] + off[i];
                if (const auto it = cells.find(cellHash(probe, reach_axes_)); it != cells.end()) {
                    for (const Id w : it->second) {
                        clock_.addWork(1);
                        const double d2 = (ledger_.validState(w) - sx).squaredNorm();
                        if (d2 > reach_[w] * reach_[w]) continue;
                        if (pair_epoch_[w] != stats_.batches) {
                            pair_epoch_[w] = stats_.batches;
                            pair_count_[w] = 0;
                        }
                        if (++pair_count_[w] > refresh_at) {
                            if (pair_count_[w] == refresh_at + 1) refresh.push_back(w);
                            continue;
                        }
                        const double d = std::sqrt(d2);
                        const double key = g_[w] + d + h_[x];
                        if (key >= c_best_) continue;
                        if (edges_invalid_.count(edgeKey(w, x)) != 0) continue;
                        equeue_.push({key, seq_++, w, x});
                    }
                }
                Eigen::Index carry = 0;
                while (carry < reach_axes_ && off[carry] == 1) {
                    off[carry] = -1;
                    ++carry;
                }
                if (carry == reach_axes_) break;
                ++off[carry];
            }
        }
    }
    for (const Id w : refresh) {
        if (kind_[w] != StateKind::Vertex) continue;
        unindexVertex(w);
        expanded_g_[w] = kInf;
        vqueue_.push({g_[w] + h_[w], seq_++, w, 0});
    }
}

PlanResult Worker::run() {
    env_.validate();

    start_id_ = registerValid(env_.start);
    kind_[start_id_] = StateKind::Vertex;
    g_[start_id_] = 0.0;
    for (const State& goal : env_.goals) {
        goal_ids_.push_back(registerValid(goal));
    }
    x_center_k_ = env_.start;
    pending_batch_ = config_.b_init;

    for (int i = 0; i < config_.b_init; ++i) classifySample(sampleUniform(env_, rng_));
    vqueue_.push({g_[start_id_] + h_[start_id_], seq_++, start_id_, 0});
    ++stats_.batches;

    while (clock_.elapsed() < config_.time_budget) {
        ++stats_.iterations;

        if (solution_updated_) {
            solution_updated_ = false;
            MapObservation obs = baseObservation();
            const std::size_t q = ledger_.classifiedCount();
            if (q >= 2) {
                const double free_measure = (1.0 - obs.rho_global) * env_.bounds.measure();
                const double r = localRadius(q, env_.dim, free_measure, config_.eta);
                std::size_t evals = 0;
                obs.rho_local = localRatioB(ledger_, bestPathStates(), r, &evals);
                clock_.addWork(evals);
            }
            const int b = policy_.batchSize(obs, context(clock_.elapsed()));
            pending_batch_ = std::clamp(b, 20, 200);
        }

        if (auto edge = nextProcessableEdge()) {
            processEdge(edge->a, edge->b, edge->key);
            continue;
        }

        if (auto v = nextExpandableVertex()) {
            MapObservation obs = baseObservation();
            const std::size_t q = ledger_.classifiedCount();
            if (q >= 2) {
                const double free_measure = (1.0 - obs.rho_global) * env_.bounds.measure();
                const double r = localRadius(q, env_.dim, free_measure, config_.eta);
                std::size_t evals = 0;
                obs.rho_local = localRatioK(ledger_, x_center_k_, r, &evals);
                clock_.addWork(evals);
            }
            double psi = policy_.neighborFactor(obs, context(clock_.elapsed()));
            psi = std::max(psi, 1e-9);
            const int k = computeK(psi, config_.eta * config_.rewire_factor, env_.dim,
                                   ledger_.classifiedCount());
            expandVertex(*v, k);
            continue;
        }

        if (c_best_ < last_prune_cost_) {
            prune();
            last_prune_cost_ = c_best_;
        }
        drawBatch(pending_batch_);
    }

    policy_.episodeEnd(context(clock_.elapsed()));

    stats_.work_units = clock_.workUnits();
    stats_.valid_states = ledger_.validCount();
    stats_.invalid_states = ledger_.invalidCount();
    stats_.elapsed = clock_.elapsed();

    PlanResult result;
    result.solutions = std::move(records_);
    result.stats = stats_;
    return result;
}

}  // namespace

PlanResult plan(const Environment& env, const PlannerConfig& config, RngStream& rng,
                ParameterPolicy& policy) {
    if (config.time_budget <= 0.0) {
        PlanResult empty;
        return empty;
    }
    Worker worker(env, config, rng, policy);
    return worker.run();
}

std::string planResultToJson(const PlanResult& result, const PlannerConfig& config,
                             std::uint64_t seed) {
    using nlohmann::json;
    json j;
    json sols = json::array();
    for (const SolutionRecord& rec : result.solutions) {
        json path = json::array();
        for (const State& x : rec.path) {
            json pt = json::array();
            for (Eigen::Index i = 0; i < x.size(); ++i) pt.push_back(x[i]);
            path.push_back(std::move(pt));
        }
        sols.push_back({{"cost", rec.cost},
                        {"time", rec.time},
                        {"n_update", rec.n_update},
                        {"path", std::move(path)}});
    }
    j["solutions"] = std::move(sols);
    const char* mode = config.mode == PlanMode::Fixed   ? "fixed"
                       : config.mode == PlanMode::Tensor ? "tensor"
                                                         : "online";
    j["config"] = {{"eta", config.eta},
                   {"rewire_factor", config.rewire_factor},
                   {"b_init", config.b_init},
                   {"mode", mode},
                   {"fixed_batch", config.fixed_batch},
                   {"fixed_psi", config.fixed_psi},
                   {"time_budget", config.time_budget},
                   {"goal_bias", config.goal_bias},
                   {"clock", config.clock == ClockMode::Virtual ? "virtual" : "wall"},
                   {"clock_units_per_second", config.clock_units_per_second}};
    j["seed"] = seed;
    j["stats"] = {{"iterations", result.stats.iterations},
                  {"batches", result.stats.batches},
                  {"expansions", result.stats.expansions},
                  {"edges_processed", result.stats.edges_processed},
                  {"work_units", result.stats.work_units},
                  {"valid_states", result.stats.valid_states},
                  {"invalid_states", result.stats.invalid_states},
                  {"elapsed", result.stats.elapsed}};
    return j.dump(2);
}

}  // namespace litstar
