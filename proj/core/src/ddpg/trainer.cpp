// SPDX-License-Identifier: Apache-2.0

#include "litstar/ddpg/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>

namespace litstar {

namespace {

double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

Eigen::VectorXd toVec(const std::array<double, 9>& s) {
    Eigen::VectorXd v(9);
    for (int i = 0; i < 9; ++i) v[i] = s[static_cast<std::size_t>(i)];
    return v;
}

Eigen::VectorXd criticInputVec(const std::array<double, 9>& s, double znorm) {
    Eigen::VectorXd v(10);
    for (int i = 0; i < 9; ++i) v[i] = s[static_cast<std::size_t>(i)];
    v[9] = znorm;
    return v;
}

GradientBundle zeroGrads(const Network& net) {
    GradientBundle g;
    for (std::size_t i = 0; i < 3; ++i) {
        g.conv[i].W = Eigen::MatrixXd::Zero(net.conv[i].W.rows(), net.conv[i].W.cols());
        g.conv[i].b = Eigen::VectorXd::Zero(net.conv[i].b.size());
    }
    g.dense.resize(net.dense.size());
    for (std::size_t i = 0; i < net.dense.size(); ++i) {
        g.dense[i].W = Eigen::MatrixXd::Zero(net.dense[i].W.rows(), net.dense[i].W.cols());
        g.dense[i].b = Eigen::VectorXd::Zero(net.dense[i].b.size());
    }
    g.input = Eigen::VectorXd::Zero(inputWidth(net.arch));
    return g;
}

void addGrads(GradientBundle& acc, const GradientBundle& g) {
    for (std::size_t i = 0; i < 3; ++i) {
        acc.conv[i].W += g.conv[i].W;
        acc.conv[i].b += g.conv[i].b;
    }
    for (std::size_t i = 0; i < acc.dense.size(); ++i) {
        acc.dense[i].W += g.dense[i].W;
        acc.dense[i].b += g.dense[i].b;
    }
    acc.input += g.input;
}

}  // namespace

TrainerCore::TrainerCore(Head head, HeadWeights weights, MembershipParams fuzzy,
                         TrainerConfig config, std::uint64_t seed)
    : head_(head),
      weights_(std::move(weights)),
      actor_target_(weights_.actor),
      critic_target_(weights_.critic),
      fuzzy_(std::move(fuzzy)),
      config_(std::move(config)),
      rng_(seed),
      buffer_(config_.capacity, config_.per_alpha),
      actor_opt_(makeAdam(weights_.actor, config_.actor_lr)),
      critic_opt_(makeAdam(weights_.critic, config_.critic_lr)),
      sigma_(config_.noise_sigma) {
    fuzzy_.validate();
    weights_.cons.validate();
    if (weights_.cons.head != head_) {
        throw std::invalid_argument("TrainerCore: consequents belong to the other head");
    }
    if (weights_.actor.arch != Arch::Actor || weights_.critic.arch != Arch::Critic) {
        throw std::invalid_argument("TrainerCore: network architectures swapped");
    }
    if (config_.minibatch == 0 || config_.capacity < config_.minibatch) {
        throw std::invalid_argument("TrainerCore: capacity must cover the minibatch");
    }
}

double TrainerCore::decide(const MapObservation& obs, const DecisionContext& ctx) {
    const FuzzyVector s = fuzzify(obs, fuzzy_);
    if (pending_) closePending(s, ctx, false);

    ForwardCache cache;
    forward(weights_.actor, toVec(s), &cache);
    const Eigen::VectorXd& pre = cache.pre.back();
    std::array<double, 3> a{};
    for (int j = 0; j < 3; ++j) {
        a[static_cast<std::size_t>(j)] = logistic(pre[j] + sigma_ * rng_.normal());
    }
    const double z = defuzzifyTsk(a, weights_.cons);
    pending_ = Pending{s, a, z, ctx.n_update, obs};
    return z;
}

void TrainerCore::episodeEnd(const DecisionContext& ctx) {
    if (pending_) closePending(pending_->s, ctx, true);
    ++episode_;
    step_ = 0;
    sigma_ *= config_.noise_decay;
}

void TrainerCore::abortEpisode() {
    pending_.reset();
    ++episode_;
    step_ = 0;
    sigma_ *= config_.noise_decay;
}

void TrainerCore::closePending(const std::array<double, 9>& s_next, const DecisionContext& ctx,
                               bool done) {
    RewardFactors f = config_.reward;
    f.t = std::max(ctx.update_gap, 1e-9);
    f.c = ctx.best_cost;
    f.n_update = ctx.n_update;
    f.path_len = ctx.path_len;
    f.solution_found = ctx.has_solution && ctx.n_update > pending_->n_update_at_open;
    const double r = head_ == Head::B ? rewardB(f) : rewardK(f);

    Transition t;
    t.s = pending_->s;
    t.a = pending_->a;
    t.z = pending_->z;
    t.r = r;
    t.s_next = s_next;
    t.done = done;
    buffer_.add(std::move(t));
    ++closes_;
    ++step_;
    maybeUpdate();

    StepLog row;
    row.episode = episode_;
    row.step = step_;
    row.rho_global = pending_->obs.rho_global;
    row.rho_local = pending_->obs.rho_local;
    row.lambda_norm = pending_->obs.lambda_norm;
    row.action_z = pending_->z;
    row.reward = r;
    row.critic_loss = last_critic_loss_;
    row.actor_loss = last_actor_loss_;
    log_.push_back(row);
    pending_.reset();
}

double TrainerCore::currentBeta() const {
    if (config_.episodes <= 1) return config_.per_beta_end;
    const double frac =
        std::min(1.0, static_cast<double>(episode_) / static_cast<double>(config_.episodes - 1));
    return config_.per_beta_start + (config_.per_beta_end - config_.per_beta_start) * frac;
}

void TrainerCore::maybeUpdate() {
    if (buffer_.size() <= config_.minibatch) return;
    if (config_.update_every > 1 &&
        closes_ % static_cast<std::uint64_t>(config_.update_every) != 0) {
        return;
    }
    const auto batch = buffer_.sample(config_.minibatch, currentBeta(), rng_);
    criticUpdate(batch);
    actorUpdate(batch);
    softUpdate(actor_target_, weights_.actor, config_.tau);
    softUpdate(critic_target_, weights_.critic, config_.tau);
}

double TrainerCore::criticValue(const Network& critic, const std::array<double, 9>& s, double z,
                                ForwardCache* cache) const {
    const double lo = weights_.cons.rangeLo();
    const double hi = weights_.cons.rangeHi();
    const double znorm = (z - lo) / (hi - lo);
    return forward(critic, criticInputVec(s, znorm), cache)[0];
}

void TrainerCore::criticUpdate(const ReplayBuffer::SampleResult& batch) {
    const double m = static_cast<double>(batch.indices.size());
    GradientBundle acc = zeroGrads(weights_.critic);
    std::vector<std::pair<std::size_t, double>> priorities;
    priorities.reserve(batch.indices.size());
    double loss = 0.0;

    for (std::size_t k = 0; k < batch.indices.size(); ++k) {
        const std::size_t idx = batch.indices[k];
        const double w = batch.weights[k];
        const Transition& tr = buffer_.at(idx);

        double y = tr.r;
        if (!tr.done) {
            const Eigen::VectorXd aout = forward(actor_target_, toVec(tr.s_next));
            const std::array<double, 3> a2{aout[0], aout[1], aout[2]};
            const double z2 = defuzzifyTsk(a2, weights_.cons);
            y += config_.gamma * criticValue(critic_target_, tr.s_next, z2);
        }

        ForwardCache cache;
        const double q = criticValue(weights_.critic, tr.s, tr.z, &cache);
        const double delta = y - q;
        loss += w * delta * delta / m;

        Eigen::VectorXd up(1);
        up[0] = -2.0 * w * delta / m;
        addGrads(acc, backward(weights_.critic, cache, up));
        priorities.emplace_back(idx, std::abs(delta) + 1e-6);
    }

    if (!std::isfinite(loss)) throw std::runtime_error("TrainerCore: non-finite critic loss");
    adamStep(critic_opt_, weights_.critic, acc);
    for (const auto& [idx, p] : priorities) buffer_.setPriority(idx, p);
    last_critic_loss_ = loss;
}

void TrainerCore::actorUpdate(const ReplayBuffer::SampleResult& batch) {
    const double lo = weights_.cons.rangeLo();
    const double hi = weights_.cons.rangeHi();
    const double scale = 1.0 / (hi - lo);
    const double m = static_cast<double>(batch.indices.size());
    GradientBundle acc = zeroGrads(weights_.actor);
    double qsum = 0.0;

    for (std::size_t k = 0; k < batch.indices.size(); ++k) {
        const Transition& tr = buffer_.at(batch.indices[k]);

        ForwardCache actor_cache;
        const Eigen::VectorXd aout = forward(weights_.actor, toVec(tr.s), &actor_cache);
        const std::array<double, 3> a{aout[0], aout[1], aout[2]};
        const double wsum = a[0] + a[1] + a[2];
        const double z = defuzzifySmooth(a, weights_.cons);
        const double znorm = (z - lo) * scale;

        ForwardCache critic_cache;
        const double q =
            forward(weights_.critic, criticInputVec(tr.s, znorm), &critic_cache)[0];
        qsum += q;

        Eigen::VectorXd up(1);
        up[0] = -1.0 / m;
        const GradientBundle cg = backward(weights_.critic, critic_cache, up);
        const double dLdz = cg.input[9] * scale;

        Eigen::VectorXd aup = Eigen::VectorXd::Zero(3);
        if (wsum > 0.0) {
            for (int j = 0; j < 3; ++j) {
                aup[j] = dLdz * (weights_.cons.f[static_cast<std::size_t>(j)] - z) / wsum;
            }
        }
        addGrads(acc, backward(weights_.actor, actor_cache, aup));
    }

    const double loss = -qsum / m;
    if (!std::isfinite(loss)) throw std::runtime_error("TrainerCore: non-finite actor loss");
    adamStep(actor_opt_, weights_.actor, acc);
    last_actor_loss_ = loss;
}

int OnlinePolicy::batchSize(const MapObservation& obs, const DecisionContext& ctx) {
    if (b_ == nullptr) return fallback_batch_;
    const double z = b_->decide(obs, ctx);
    return static_cast<int>(std::lround(std::clamp(z, 20.0, 200.0)));
}

double OnlinePolicy::neighborFactor(const MapObservation& obs, const DecisionContext& ctx) {
    if (k_ == nullptr) return fallback_psi_;
    return k_->decide(obs, ctx);
}

void OnlinePolicy::episodeEnd(const DecisionContext& ctx) {
    if (b_ != nullptr) b_->episodeEnd(ctx);
    if (k_ != nullptr) k_->episodeEnd(ctx);
}

double ActorPolicy::act(const Network& actor, const RuleConsequents& cons,
                        const MapObservation& obs) const {
    const FuzzyVector s = fuzzify(obs, w_.fuzzy);
    const Eigen::VectorXd out = forward(actor, toVec(s));
    return defuzzifyTsk({out[0], out[1], out[2]}, cons);
}

int ActorPolicy::batchSize(const MapObservation& obs, const DecisionContext&) {
    return static_cast<int>(std::lround(act(w_.b.actor, w_.b.cons, obs)));
}

double ActorPolicy::neighborFactor(const MapObservation& obs, const DecisionContext&) {
    return act(w_.k.actor, w_.k.cons, obs);
}

TrainingResult train(const EnvFactory& factory, const TrainingOptions& options) {
    if (!factory) throw std::invalid_argument("train: missing environment factory");
    if (!options.train_b && !options.train_k) {
        throw std::invalid_argument("train: at least one head must be selected");
    }

    RngStream root(options.seed);
    RngStream env_seeds = root.fork(0x656e76);
    RngStream plan_seeds = root.fork(0x706c616e);
    const WeightsBundle init = makeInitialWeights(options.seed);

    std::optional<TrainerCore> bcore;
    std::optional<TrainerCore> kcore;
    if (options.train_b) {
        bcore.emplace(Head::B, init.b, init.fuzzy, options.trainer, root.fork(0xb0).nextRaw());
    }
    if (options.train_k) {
        kcore.emplace(Head::K, init.k, init.fuzzy, options.trainer, root.fork(0xc0).nextRaw());
    }

    TrainingResult result;
    PlannerConfig pc = options.planner;
    pc.mode = PlanMode::Online;
    pc.clock = ClockMode::Virtual;

    for (int e = 0; e < options.trainer.episodes; ++e) {
        const std::uint64_t eseed = env_seeds.nextRaw();
        const std::uint64_t pseed = plan_seeds.nextRaw();
        OnlinePolicy policy(bcore ? &*bcore : nullptr, kcore ? &*kcore : nullptr, pc.fixed_batch,
                            pc.fixed_psi);
        try {
            const Environment env = factory(e, eseed);
            RngStream prng(pseed);
            plan(env, pc, prng, policy);
            ++result.episodes_run;
        } catch (const std::exception&) {
            ++result.episodes_failed;
            if (bcore) bcore->abortEpisode();
            if (kcore) kcore->abortEpisode();
        }
    }

    result.weights = init;
    if (bcore) result.weights.b = bcore->weights();
    if (kcore) result.weights.k = kcore->weights();
    if (bcore) result.log_b_csv = trainingLogCsv(bcore->log());
    if (kcore) result.log_k_csv = trainingLogCsv(kcore->log());
    return result;
}

std::string trainingLogCsv(const std::vector<StepLog>& log) {
    std::string out =
        "episode,step,rho_global,rho_local,lambda_norm,action_z,reward,critic_loss,actor_loss\n";
    char buf[320];
    for (const StepLog& row : log) {
        std::snprintf(buf, sizeof(buf), "%d,%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                      row.episode, row.step, row.rho_global, row.rho_local, row.lambda_norm,
                      row.action_z, row.reward, row.critic_loss, row.actor_loss);
        out += buf;
    }
    return out;
}

}  // namespace litstar
