// SPDX-License-Identifier: Apache-2.0
// Microbenchmarks for the planner's hot paths.

#include <benchmark/benchmark.h>

#include "litstar/ddpg/replay.hpp"
#include "litstar/nn/serialize.hpp"
#include "litstar/planner/planner.hpp"
#include "litstar/policy/tensor.hpp"
#include "litstar/space/worlds.hpp"

namespace {

using namespace litstar;

Environment rectangleWorld(Eigen::Index dim) { return makeRandomRectangles(dim, 10, 0.3, 42); }

void BM_StateValidity(benchmark::State& state) {
    const Environment env = rectangleWorld(state.range(0));
    RngStream rng(1);
    State x = sampleUniform(env, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(isStateValid(env, x));
    }
}
BENCHMARK(BM_StateValidity)->Arg(4)->Arg(8);

void BM_EdgeValidity(benchmark::State& state) {
    const Environment env = rectangleWorld(state.range(0));
    RngStream rng(2);
    const State a = sampleUniform(env, rng);
    const State b = sampleUniform(env, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(isEdgeValid(env, a, b));
    }
}
BENCHMARK(BM_EdgeValidity)->Arg(4)->Arg(8);

void BM_SampleInformed(benchmark::State& state) {
    const Environment env = rectangleWorld(state.range(0));
    const InformedSet inf(env.start, env.goals[0], 1.4 * (env.goals[0] - env.start).norm());
    RngStream rng(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sampleInformed(inf, env, rng));
    }
}
BENCHMARK(BM_SampleInformed)->Arg(4)->Arg(8);

void BM_ActorDecision(benchmark::State& state) {
    const WeightsBundle w = makeInitialWeights(7);
    RngStream rng(4);
    for (auto _ : state) {
        MapObservation obs;
        obs.rho_global = rng.uniform01();
        obs.rho_local = rng.uniform01();
        obs.lambda_norm = rng.uniform01();
        const FuzzyVector mu = fuzzify(obs, w.fuzzy);
        Eigen::VectorXd in(9);
        for (int i = 0; i < 9; ++i) in[i] = mu[static_cast<std::size_t>(i)];
        const Eigen::VectorXd out = forward(w.b.actor, in);
        benchmark::DoNotOptimize(defuzzifyTsk({out[0], out[1], out[2]}, w.b.cons));
    }
}
BENCHMARK(BM_ActorDecision);

void BM_TensorLookup(benchmark::State& state) {
    const WeightsBundle w = makeInitialWeights(7);
    const PolicyTensor tensor = bake(w.b.actor, w.fuzzy, w.b.cons);
    RngStream rng(5);
    for (auto _ : state) {
        MapObservation obs;
        obs.rho_global = rng.uniform01();
        obs.rho_local = rng.uniform01();
        obs.lambda_norm = rng.uniform01();
        benchmark::DoNotOptimize(lookup(tensor, obs));
    }
}
BENCHMARK(BM_TensorLookup);

void BM_ReplaySample(benchmark::State& state) {
    ReplayBuffer buffer(100000, 0.6);
    RngStream rng(6);
    for (int i = 0; i < 100000; ++i) {
        buffer.add(Transition{});
        buffer.setPriority(static_cast<std::size_t>(i), rng.uniform(0.1, 10.0));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(buffer.sample(64, 0.7, rng));
    }
}
BENCHMARK(BM_ReplaySample);

void BM_LedgerCountWithin(benchmark::State& state) {
    const Eigen::Index dim = 4;
    SampleLedger ledger(dim);
    RngStream rng(8);
    for (int i = 0; i < state.range(0); ++i) {
        State x(dim);
        for (Eigen::Index d = 0; d < dim; ++d) x[d] = rng.uniform01();
        if (i % 4 == 0) {
            ledger.addInvalid(x);
        } else {
            ledger.addValid(x);
        }
    }
    const State center = State::Constant(dim, 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ledger.countWithin(center, 0.2));
    }
}
BENCHMARK(BM_LedgerCountWithin)->Arg(1000)->Arg(10000);

void BM_KNearest(benchmark::State& state) {
    const Eigen::Index dim = 4;
    SampleLedger ledger(dim);
    RngStream rng(9);
    for (int i = 0; i < state.range(0); ++i) {
        State x(dim);
        for (Eigen::Index d = 0; d < dim; ++d) x[d] = rng.uniform01();
        ledger.addValid(x);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(kNearestValid(ledger, 0, 30));
    }
}
BENCHMARK(BM_KNearest)->Arg(1000)->Arg(10000);

void BM_PlanNarrowPassage(benchmark::State& state) {
    const Environment env = makeNarrowPassage(4, 0.1);
    for (auto _ : state) {
        PlannerConfig cfg;
        cfg.clock = ClockMode::Virtual;
        cfg.time_budget = 0.05;
        FixedPolicy policy(100, 1.0);
        RngStream rng(11);
        benchmark::DoNotOptimize(plan(env, cfg, rng, policy));
    }
}
BENCHMARK(BM_PlanNarrowPassage)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
