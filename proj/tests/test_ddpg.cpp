// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "litstar/ddpg/trainer.hpp"
#include "litstar/space/worlds.hpp"

using namespace litstar;

namespace {

Transition makeTransition(double priority_hint) {
    Transition t;
    t.s.fill(0.5);
    t.a.fill(0.5);
    t.z = 100.0 + priority_hint;
    t.r = priority_hint;
    t.s_next.fill(0.5);
    return t;
}

bool sameParams(const Network& a, const Network& b) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (a.conv[i].W != b.conv[i].W || a.conv[i].b != b.conv[i].b) return false;
    }
    for (std::size_t i = 0; i < a.dense.size(); ++i) {
        if (a.dense[i].W != b.dense[i].W || a.dense[i].b != b.dense[i].b) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("ddpg.sumtree") {
    TEST_CASE("totals and prefix search") {
        SumTree tree(4);
        tree.set(0, 1.0);
        tree.set(1, 2.0);
        tree.set(2, 3.0);
        tree.set(3, 4.0);
        CHECK(tree.total() == doctest::Approx(10.0));
        CHECK(tree.get(2) == doctest::Approx(3.0));
        CHECK(tree.find(0.5) == 0);
        CHECK(tree.find(1.5) == 1);
        CHECK(tree.find(2.999) == 1);
        CHECK(tree.find(3.0) == 2);
        CHECK(tree.find(5.9) == 2);
        CHECK(tree.find(6.0) == 3);
        CHECK(tree.find(9.999) == 3);
    }

    TEST_CASE("updates propagate") {
        SumTree tree(3);
        tree.set(0, 5.0);
        tree.set(1, 1.0);
        tree.set(2, 1.0);
        CHECK(tree.total() == doctest::Approx(7.0));
        tree.set(0, 0.5);
        CHECK(tree.total() == doctest::Approx(2.5));
        CHECK(tree.find(0.4) == 0);
        CHECK(tree.find(0.6) == 1);
    }
}

TEST_SUITE("ddpg.replay") {
    TEST_CASE("ring wrap respects capacity") {
        ReplayBuffer buf(4, 0.6);
        for (int i = 0; i < 6; ++i) buf.add(makeTransition(i));
        CHECK(buf.size() == 4);
        CHECK(buf.capacity() == 4);
        // slots 0 and 1 were overwritten by transitions 4 and 5
        CHECK(buf.at(0).r == doctest::Approx(4.0));
        CHECK(buf.at(1).r == doctest::Approx(5.0));
        CHECK(buf.at(2).r == doctest::Approx(2.0));
    }

    TEST_CASE("new transitions enter at the maximum priority seen") {
        ReplayBuffer buf(8, 0.6);
        buf.add(makeTransition(0));
        CHECK(buf.priority(0) == doctest::Approx(1.0));
        buf.setPriority(0, 5.0);
        buf.add(makeTransition(1));
        CHECK(buf.priority(1) == doctest::Approx(5.0));
        buf.setPriority(0, 0.0);  // floored, and the max tracker keeps 5
        CHECK(buf.priority(0) == doctest::Approx(1e-6));
        buf.add(makeTransition(2));
        CHECK(buf.priority(2) == doctest::Approx(5.0));
    }

    TEST_CASE("alpha zero samples uniformly with unit weights") {
        ReplayBuffer buf(16, 0.0);
        for (int i = 0; i < 16; ++i) buf.add(makeTransition(i));
        buf.setPriority(3, 1e6);
        RngStream rng(55);
        std::array<int, 16> hits{};
        for (int round = 0; round < 2000; ++round) {
            const auto res = buf.sample(8, 0.7, rng);
            for (std::size_t k = 0; k < res.indices.size(); ++k) {
                ++hits[res.indices[k]];
                CHECK(res.weights[k] == doctest::Approx(1.0).epsilon(1e-12));
            }
        }
        const double expected = 2000.0 * 8 / 16;
        for (int h : hits) {
            CHECK(std::abs(h - expected) < 6.0 * std::sqrt(expected));
        }
    }

    TEST_CASE("a dominant priority dominates the draw") {
        ReplayBuffer buf(8, 1.0);
        for (int i = 0; i < 8; ++i) buf.add(makeTransition(i));
        for (int i = 0; i < 8; ++i) buf.setPriority(static_cast<std::size_t>(i), 1e-6);
        buf.setPriority(5, 1.0);
        RngStream rng(66);
        int hit5 = 0, draws = 0;
        for (int round = 0; round < 1000; ++round) {
            const auto res = buf.sample(4, 0.4, rng);
            for (std::size_t idx : res.indices) {
                ++draws;
                if (idx == 5) ++hit5;
            }
        }
        CHECK(static_cast<double>(hit5) / draws > 0.99);
    }

    TEST_CASE("importance weights follow the stated formula") {
        ReplayBuffer buf(4, 1.0);
        for (int i = 0; i < 4; ++i) buf.add(makeTransition(i));
        const double prios[4] = {1.0, 2.0, 3.0, 4.0};
        for (std::size_t i = 0; i < 4; ++i) buf.setPriority(i, prios[i]);
        const double beta = 0.5;
        double raw[4];
        for (int i = 0; i < 4; ++i) {
            const double p = prios[i] / 10.0;
            raw[i] = std::pow(4.0 * p, -beta);
        }
        RngStream rng(77);
        const auto res = buf.sample(4, beta, rng);
        // Weights are normalized by the largest raw weight in the drawn
        // batch, so recompute that max over the indices actually drawn.
        double raw_max = 0.0;
        for (const std::size_t idx : res.indices) raw_max = std::max(raw_max, raw[idx]);
        for (std::size_t k = 0; k < res.indices.size(); ++k) {
            CHECK(res.weights[k] ==
                  doctest::Approx(raw[res.indices[k]] / raw_max).epsilon(1e-12));
        }
    }

    TEST_CASE("too-small buffer refuses to sample") {
        ReplayBuffer buf(8, 0.6);
        buf.add(makeTransition(0));
        RngStream rng(1);
        CHECK_THROWS(buf.sample(2, 0.4, rng));
    }
}

TEST_SUITE("ddpg.reward") {
    TEST_CASE("decay goldens") {
        CHECK(decayKappa(0, 1.0, 0.2) == doctest::Approx(std::log2(6.8)).epsilon(1e-9));
        CHECK(decayKappa(6, 1.0, 0.2) == doctest::Approx(0.2).epsilon(1e-9));
        CHECK(decayKappa(100, 1.0, 0.2) == doctest::Approx(0.2));
        CHECK_THROWS(decayKappa(-1, 1.0, 0.2));
    }

    TEST_CASE("batch-head reward goldens") {
        RewardFactors f;
        f.t = 1.0;
        f.c = 1.0;
        f.n_update = 0;
        f.solution_found = true;
        f.gamma_b = 0.0;
        CHECK(rewardB(f) == doctest::Approx(2.0 * std::log2(6.8)).epsilon(1e-9));

        RewardFactors half = f;
        half.beta_b = 0.0;
        const double full = rewardB(half);
        half.t = 0.5;
        CHECK(rewardB(half) == doctest::Approx(2.0 * full).epsilon(1e-12));

        RewardFactors penalty;
        penalty.solution_found = false;
        penalty.gamma_b = 1.0;
        penalty.n_update = 3;
        CHECK(rewardB(penalty) == doctest::Approx(-3.0));
    }

    TEST_CASE("neighbor-head reward goldens") {
        RewardFactors f;
        f.solution_found = true;
        f.t = 1.0;
        f.c = 1.0;
        f.alpha_k = 0.0;
        f.beta_k = 0.0;
        f.gamma_k = -0.1;
        f.path_len = 10;
        CHECK(rewardK(f) == doctest::Approx(-1.0));

        RewardFactors g;
        g.solution_found = true;
        g.t = 0.5;
        g.c = 1.0;
        g.alpha_k = 1.0;
        g.beta_k = 0.0;
        g.gamma_k = 0.0;
        CHECK(rewardK(g) == doctest::Approx(2.0));

        RewardFactors shorter = f;
        shorter.path_len = 5;
        CHECK(rewardK(shorter) > rewardK(f));

        RewardFactors none;
        none.solution_found = false;
        CHECK(rewardK(none) == doctest::Approx(0.0));
    }
}

TEST_SUITE("ddpg.trainer") {
    TEST_CASE("decide records transitions with in-test reward oracle") {
        const WeightsBundle w = makeInitialWeights(3);
        TrainerConfig cfg;
        TrainerCore core(Head::B, w.b, w.fuzzy, cfg, 42);

        MapObservation o1;
        o1.rho_global = 0.2;
        o1.rho_local = 0.1;
        o1.lambda_norm = 1.0;
        DecisionContext c1;
        c1.n_update = 0;
        const double z1 = core.decide(o1, c1);
        CHECK(z1 >= 20.0);
        CHECK(z1 <= 200.0);
        CHECK(core.buffer().size() == 0);

        MapObservation o2;
        o2.rho_global = 0.3;
        o2.rho_local = 0.4;
        o2.lambda_norm = 0.6;
        DecisionContext c2;
        c2.n_update = 1;
        c2.update_gap = 0.25;
        c2.best_cost = 2.0;
        c2.path_len = 5;
        c2.has_solution = true;
        const double z2 = core.decide(o2, c2);
        CHECK(z2 >= 20.0);
        REQUIRE(core.buffer().size() == 1);

        const Transition& t = core.buffer().at(0);
        const FuzzyVector s1 = fuzzify(o1, w.fuzzy);
        const FuzzyVector s2 = fuzzify(o2, w.fuzzy);
        CHECK(t.s == s1);
        CHECK(t.s_next == s2);
        CHECK(t.z == doctest::Approx(z1));
        CHECK_FALSE(t.done);
        for (double a : t.a) {
            CHECK(a > 0.0);
            CHECK(a < 1.0);
        }
        RewardFactors f = cfg.reward;
        f.t = c2.update_gap;
        f.c = c2.best_cost;
        f.n_update = c2.n_update;
        f.path_len = c2.path_len;
        f.solution_found = true;
        CHECK(t.r == doctest::Approx(rewardB(f)).epsilon(1e-12));

        DecisionContext c3 = c2;
        core.episodeEnd(c3);
        REQUIRE(core.buffer().size() == 2);
        CHECK(core.buffer().at(1).done);
        CHECK(core.episode() == 1);
        REQUIRE(core.log().size() == 2);
        CHECK(core.log()[0].episode == 0);
        CHECK(core.log()[0].step == 1);
        CHECK(core.log()[0].action_z == doctest::Approx(z1));
        CHECK(core.log()[0].rho_global == doctest::Approx(o1.rho_global));
    }

    TEST_CASE("no gradient updates below the minibatch threshold") {
        const WeightsBundle w = makeInitialWeights(9);
        TrainerConfig cfg;
        cfg.minibatch = 64;
        TrainerCore core(Head::K, w.k, w.fuzzy, cfg, 5);
        MapObservation obs;
        DecisionContext ctx;
        for (int i = 0; i < 10; ++i) core.decide(obs, ctx);
        core.episodeEnd(ctx);
        CHECK(sameParams(core.weights().actor, w.k.actor));
        CHECK(sameParams(core.weights().critic, w.k.critic));
    }

    TEST_CASE("updates engage once the buffer exceeds the minibatch") {
        const WeightsBundle w = makeInitialWeights(11);
        TrainerConfig cfg;
        cfg.minibatch = 8;
        TrainerCore core(Head::K, w.k, w.fuzzy, cfg, 6);
        RngStream rng(7);
        DecisionContext ctx;
        ctx.has_solution = true;
        ctx.best_cost = 1.5;
        ctx.update_gap = 0.1;
        ctx.path_len = 4;
        for (int i = 0; i < 12; ++i) {
            MapObservation obs;
            obs.rho_global = rng.uniform01();
            obs.rho_local = rng.uniform01();
            obs.lambda_norm = rng.uniform01();
            ctx.n_update = i;
            core.decide(obs, ctx);
        }
        core.episodeEnd(ctx);
        CHECK_FALSE(sameParams(core.weights().actor, w.k.actor));
        CHECK_FALSE(sameParams(core.weights().critic, w.k.critic));
        CHECK(core.log().back().critic_loss != 0.0);
    }

    TEST_CASE("identical seeds give identical decisions") {
        const WeightsBundle w = makeInitialWeights(13);
        TrainerConfig cfg;
        TrainerCore a(Head::B, w.b, w.fuzzy, cfg, 99);
        TrainerCore b(Head::B, w.b, w.fuzzy, cfg, 99);
        RngStream rng(3);
        for (int i = 0; i < 20; ++i) {
            MapObservation obs;
            obs.rho_global = rng.uniform01();
            obs.rho_local = rng.uniform01();
            obs.lambda_norm = rng.uniform01();
            DecisionContext ctx;
            ctx.n_update = i / 4;
            CHECK(a.decide(obs, ctx) == b.decide(obs, ctx));
        }
    }

    TEST_CASE("head-consequent mismatch is rejected") {
        const WeightsBundle w = makeInitialWeights(17);
        CHECK_THROWS(TrainerCore(Head::K, w.b, w.fuzzy, TrainerConfig{}, 1));
    }
}

TEST_SUITE("ddpg.policies") {
    TEST_CASE("online policy falls back for missing heads") {
        const WeightsBundle w = makeInitialWeights(19);
        TrainerConfig cfg;
        TrainerCore kcore(Head::K, w.k, w.fuzzy, cfg, 21);
        OnlinePolicy policy(nullptr, &kcore, 77, 1.5);
        MapObservation obs;
        DecisionContext ctx;
        CHECK(policy.batchSize(obs, ctx) == 77);
        const double psi = policy.neighborFactor(obs, ctx);
        CHECK(psi >= 3.0);
        CHECK(psi <= 15.0);
    }

    TEST_CASE("actor policy stays in range and is deterministic") {
        const WeightsBundle w = makeInitialWeights(23);
        ActorPolicy p1(w), p2(w);
        RngStream rng(4);
        for (int i = 0; i < 50; ++i) {
            MapObservation obs;
            obs.rho_global = rng.uniform01();
            obs.rho_local = rng.uniform01();
            obs.lambda_norm = rng.uniform01();
            DecisionContext ctx;
            const int b = p1.batchSize(obs, ctx);
            CHECK(b >= 20);
            CHECK(b <= 200);
            CHECK(b == p2.batchSize(obs, ctx));
            const double k = p1.neighborFactor(obs, ctx);
            CHECK(k >= 3.0);
            CHECK(k <= 15.0);
            CHECK(k == p2.neighborFactor(obs, ctx));
        }
    }
}

TEST_SUITE("ddpg.train") {
    TEST_CASE("short training session runs deterministically") {
        TrainingOptions opts;
        opts.seed = 101;
        opts.trainer.episodes = 2;
        opts.trainer.minibatch = 8;
        opts.planner.time_budget = 0.02;
        opts.planner.b_init = 40;

        const EnvFactory factory = [](int, std::uint64_t seed) {
            return makeRandomRectangles(2, 4, 0.3, seed);
        };
        const TrainingResult r1 = train(factory, opts);
        const TrainingResult r2 = train(factory, opts);
        CHECK(r1.episodes_run == 2);
        CHECK(r1.episodes_failed == 0);
        CHECK(r1.log_b_csv == r2.log_b_csv);
        CHECK(r1.log_k_csv == r2.log_k_csv);
        CHECK(sameParams(r1.weights.b.actor, r2.weights.b.actor));
        CHECK(sameParams(r1.weights.k.actor, r2.weights.k.actor));
        CHECK(r1.log_k_csv.find("episode,step,") == 0);
    }

    TEST_CASE("head selection trains only the chosen learner") {
        TrainingOptions opts;
        opts.seed = 103;
        opts.trainer.episodes = 1;
        opts.trainer.minibatch = 4;
        opts.planner.time_budget = 0.02;
        opts.planner.b_init = 40;
        opts.train_b = false;

        const EnvFactory factory = [](int, std::uint64_t seed) {
            return makeRandomRectangles(2, 3, 0.3, seed);
        };
        const TrainingResult r = train(factory, opts);
        const WeightsBundle init = makeInitialWeights(opts.seed);
        CHECK(sameParams(r.weights.b.actor, init.b.actor));
        CHECK(r.log_b_csv.empty());
        CHECK_FALSE(r.log_k_csv.empty());
    }
}
