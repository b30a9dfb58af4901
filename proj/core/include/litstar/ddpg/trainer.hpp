// SPDX-License-Identifier: Apache-2.0
// Actor-critic training over planner rollouts, one learner per parameter head.
#pragma once

#include <functional>
#include <optional>
#include <string>

#include "litstar/ddpg/replay.hpp"
#include "litstar/ddpg/reward.hpp"
#include "litstar/nn/optimizer.hpp"
#include "litstar/nn/serialize.hpp"
#include "litstar/planner/planner.hpp"

namespace litstar {

struct TrainerConfig {
    double gamma = 0.99;
    double tau = 0.005;
    std::size_t minibatch = 64;
    int episodes = 200;
    double noise_sigma = 0.3;
    double noise_decay = 0.995;
    double per_alpha = 0.6;
    double per_beta_start = 0.4;
    double per_beta_end = 1.0;
    std::size_t capacity = 100000;
    double actor_lr = 1e-3;
    double critic_lr = 1e-3;
    /// Gradient updates run every this many closed transitions.
    int update_every = 1;
    /// Reward scaling; the per-step fields are filled in at close time.
    RewardFactors reward;
};

/// One CSV-able log row per closed transition.
struct StepLog {
    int episode = 0;
    int step = 0;
    double rho_global = 0.0;
    double rho_local = 0.0;
    double lambda_norm = 0.0;
    double action_z = 0.0;
    double reward = 0.0;
    double critic_loss = 0.0;
    double actor_loss = 0.0;
};

/// Deterministic single-head learner. decide() closes the previous
/// transition with the reward implied by the new context, then acts with
/// exploration noise on the pre-logistic head outputs; episodeEnd()
/// closes the final transition as terminal and advances the schedules.
class TrainerCore {
public:
    TrainerCore(Head head, HeadWeights weights, MembershipParams fuzzy, TrainerConfig config,
                std::uint64_t seed);

    /// Returns the executable crisp action for this observation.
    double decide(const MapObservation& obs, const DecisionContext& ctx);
    void episodeEnd(const DecisionContext& ctx);
    /// Drops any half-open transition (failed episode), still advancing
    /// the episode schedules.
    void abortEpisode();

    [[nodiscard]] const HeadWeights& weights() const { return weights_; }
    [[nodiscard]] const ReplayBuffer& buffer() const { return buffer_; }
    [[nodiscard]] const std::vector<StepLog>& log() const { return log_; }
    [[nodiscard]] int episode() const { return episode_; }

private:
    struct Pending {
        std::array<double, 9> s;
        std::array<double, 3> a;
        double z;
        int n_update_at_open;
        MapObservation obs;
    };

    void closePending(const std::array<double, 9>& s_next, const DecisionContext& ctx, bool done);
    void maybeUpdate();
    void criticUpdate(const ReplayBuffer::SampleResult& batch);
    void actorUpdate(const ReplayBuffer::SampleResult& batch);
    [[nodiscard]] double currentBeta() const;
    [[nodiscard]] double criticValue(const Network& critic, const std::array<double, 9>& s, double z,
                                     ForwardCache* cache = nullptr) const;

    Head head_;
    HeadWeights weights_;
    Network actor_target_;
    Network critic_target_;
    MembershipParams fuzzy_;
    TrainerConfig config_;
    RngStream rng_;
    ReplayBuffer buffer_;
    AdamState actor_opt_;
    AdamState critic_opt_;

    std::optional<Pending> pending_;
    double sigma_;
    int episode_ = 0;
    int step_ = 0;
    std::uint64_t closes_ = 0;
    double last_critic_loss_ = 0.0;
    double last_actor_loss_ = 0.0;
    std::vector<StepLog> log_;
};

/// Policy adapter that routes planner decisions into the learners. A
/// missing learner falls back to the constant baseline value.
class OnlinePolicy final : public ParameterPolicy {
public:
    OnlinePolicy(TrainerCore* b, TrainerCore* k, int fallback_batch = 100,
                 double fallback_psi = 1.0)
        : b_(b), k_(k), fallback_batch_(fallback_batch), fallback_psi_(fallback_psi) {}

    int batchSize(const MapObservation& obs, const DecisionContext& ctx) override;
    double neighborFactor(const MapObservation& obs, const DecisionContext& ctx) override;
    void episodeEnd(const DecisionContext& ctx) override;

private:
    TrainerCore* b_;
    TrainerCore* k_;
    int fallback_batch_;
    double fallback_psi_;
};

/// Inference-only policy running the trained actors live (no noise, no
/// learning); the planner's online mode outside training.
class ActorPolicy final : public ParameterPolicy {
public:
    explicit ActorPolicy(WeightsBundle weights) : w_(std::move(weights)) {}

    int batchSize(const MapObservation& obs, const DecisionContext&) override;
    double neighborFactor(const MapObservation& obs, const DecisionContext&) override;

private:
    [[nodiscard]] double act(const Network& actor, const RuleConsequents& cons,
                             const MapObservation& obs) const;
    WeightsBundle w_;
};

/// Builds the episode's environment; episodes see different layouts
/// through the seed derived for each one.
using EnvFactory = std::function<Environment(int episode, std::uint64_t episode_seed)>;

struct TrainingOptions {
    TrainerConfig trainer;
    PlannerConfig planner;
    bool train_b = true;
    bool train_k = true;
    std::uint64_t seed = 0;
};

struct TrainingResult {
    WeightsBundle weights;
    std::string log_b_csv;
    std::string log_k_csv;
    int episodes_run = 0;
    int episodes_failed = 0;
};

/// Runs the episode loop: for each episode, build the environment, roll
/// out one plan invocation with the online policy (always on the virtual
/// clock), and let the learners update from every decision. Episodes
/// whose rollout throws are skipped and counted. Deterministic in seed.
TrainingResult train(const EnvFactory& factory, const TrainingOptions& options);

/// The per-transition log as CSV text.
std::string trainingLogCsv(const std::vector<StepLog>& log);

}  // namespace litstar
