// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "litstar/nn/optimizer.hpp"
#include "litstar/nn/serialize.hpp"
#include "litstar/space/rng.hpp"

using namespace litstar;

namespace {

double lossOf(const Network& net, const Eigen::VectorXd& input, const Eigen::VectorXd& coeff) {
    return coeff.dot(forward(net, input));
}

/// Central-difference derivative of the scalar loss with respect to one
/// parameter slot. The slot must point into this network; the parameter
/// is restored exactly afterwards.
double fdParam(Network& net, const Eigen::VectorXd& input, const Eigen::VectorXd& coeff,
               double* slot, double h) {
    const double saved = *slot;
    *slot = saved + h;
    const double up = lossOf(net, input, coeff);
    *slot = saved - h;
    const double down = lossOf(net, input, coeff);
    *slot = saved;
    return (up - down) / (2.0 * h);
}

/// Central differences are only trustworthy where the network is locally
/// smooth: a hidden unit sitting within `margin` of its ReLU kink would
/// flip sign under the probe and poison every upstream slot.
bool smoothOperatingPoint(const Network& net, const ForwardCache& cache, double margin) {
    for (std::size_t l = 0; l < net.dense.size(); ++l) {
        if (net.dense[l].act != Activation::ReLU) continue;
        for (Eigen::Index i = 0; i < cache.pre[l].size(); ++i) {
            if (std::abs(cache.pre[l][i]) < margin) return false;
        }
    }
    return true;
}

double relErr(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

/// Spot-checks analytic gradients against central differences: all conv
/// parameters, all biases, a seeded subset of dense weights, and the
/// input gradient. Returns the worst relative error seen.
double gradientCheck(Arch arch, std::uint64_t seed, int dense_samples_per_layer) {
    Network net = makeNetwork(arch, seed);
    RngStream rng(seed ^ 0x5eedu);
    const Eigen::Index in_w = inputWidth(arch);
    Eigen::VectorXd coeff(outputWidth(arch));
    for (Eigen::Index i = 0; i < coeff.size(); ++i) coeff[i] = rng.uniform(-1.0, 1.0);

    Eigen::VectorXd input(in_w);
    ForwardCache cache;
    for (int attempt = 0; attempt < 200; ++attempt) {
        for (Eigen::Index i = 0; i < in_w; ++i) input[i] = rng.uniform(-1.0, 1.0);
        forward(net, input, &cache);
        if (smoothOperatingPoint(net, cache, 1e-3)) break;
    }
    const GradientBundle g = backward(net, cache, coeff);

    const double h = 1e-5;
    double worst = 0.0;
    for (std::size_t c = 0; c < 3; ++c) {
        for (Eigen::Index i = 0; i < net.conv[c].W.size(); ++i) {
            const double fd = fdParam(net, input, coeff, net.conv[c].W.data() + i, h);
            worst = std::max(worst, relErr(fd, g.conv[c].W(i)));
        }
        for (Eigen::Index i = 0; i < net.conv[c].b.size(); ++i) {
            const double fd = fdParam(net, input, coeff, net.conv[c].b.data() + i, h);
            worst = std::max(worst, relErr(fd, g.conv[c].b(i)));
        }
    }
    for (std::size_t l = 0; l < net.dense.size(); ++l) {
        for (int s = 0; s < dense_samples_per_layer; ++s) {
            const Eigen::Index i =
                static_cast<Eigen::Index>(rng.uniformInt(static_cast<std::uint64_t>(net.dense[l].W.size())));
            const double fd = fdParam(net, input, coeff, net.dense[l].W.data() + i, h);
            worst = std::max(worst, relErr(fd, g.dense[l].W(i)));
        }
        for (Eigen::Index i = 0; i < net.dense[l].b.size(); ++i) {
            const double fd = fdParam(net, input, coeff, net.dense[l].b.data() + i, h);
            worst = std::max(worst, relErr(fd, g.dense[l].b(i)));
        }
    }
    for (Eigen::Index i = 0; i < in_w; ++i) {
        Eigen::VectorXd shifted = input;
        shifted[i] = input[i] + h;
        const double up = lossOf(net, shifted, coeff);
        shifted[i] = input[i] - h;
        const double down = lossOf(net, shifted, coeff);
        worst = std::max(worst, relErr((up - down) / (2.0 * h), g.input[i]));
    }
    return worst;
}

void zeroParams(Network& net) {
    for (auto& c : net.conv) {
        c.W.setZero();
        c.b.setZero();
    }
    for (auto& d : net.dense) {
        d.W.setZero();
        d.b.setZero();
    }
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

TEST_SUITE("nn.forward") {
    TEST_CASE("architecture widths") {
        CHECK(inputWidth(Arch::Actor) == 9);
        CHECK(outputWidth(Arch::Actor) == 3);
        CHECK(inputWidth(Arch::Critic) == 10);
        CHECK(outputWidth(Arch::Critic) == 1);
        const Network actor = makeNetwork(Arch::Actor, 1);
        CHECK(actor.dense.front().W.cols() == 81);
        const Network critic = makeNetwork(Arch::Critic, 1);
        CHECK(critic.dense.front().W.cols() == 90);
    }

    TEST_CASE("zeroed actor outputs one half per head unit") {
        Network net = makeNetwork(Arch::Actor, 5);
        zeroParams(net);
        const Eigen::VectorXd out = forward(net, Eigen::VectorXd::Ones(9));
        REQUIRE(out.size() == 3);
        for (Eigen::Index i = 0; i < 3; ++i) CHECK(out[i] == doctest::Approx(0.5));
    }

    TEST_CASE("deterministic in seed, pure in parameters") {
        const Network a = makeNetwork(Arch::Actor, 123);
        const Network b = makeNetwork(Arch::Actor, 123);
        CHECK(sameParams(a, b));
        Eigen::VectorXd in = Eigen::VectorXd::Constant(9, 0.3);
        const std::uint64_t v = a.version;
        CHECK(forward(a, in) == forward(b, in));
        CHECK(a.version == v);
    }

    TEST_CASE("actor outputs stay in (0,1)") {
        RngStream rng(8);
        const Network net = makeNetwork(Arch::Actor, 21);
        for (int t = 0; t < 100; ++t) {
            Eigen::VectorXd in(9);
            for (int i = 0; i < 9; ++i) in[i] = rng.uniform01();
            const Eigen::VectorXd out = forward(net, in);
            for (Eigen::Index i = 0; i < 3; ++i) {
                CHECK(out[i] > 0.0);
                CHECK(out[i] < 1.0);
            }
        }
    }

    TEST_CASE("input width mismatch throws") {
        const Network net = makeNetwork(Arch::Actor, 2);
        CHECK_THROWS(forward(net, Eigen::VectorXd::Zero(10)));
    }
}

TEST_SUITE("nn.backward") {
    TEST_CASE("finite differences agree on both architectures") {
        CHECK(gradientCheck(Arch::Actor, 1001, 40) < 1e-4);
        CHECK(gradientCheck(Arch::Critic, 1002, 40) < 1e-4);
    }

    TEST_CASE("zero upstream gives zero gradients") {
        const Network net = makeNetwork(Arch::Critic, 3);
        ForwardCache cache;
        forward(net, Eigen::VectorXd::Constant(10, 0.2), &cache);
        const GradientBundle g = backward(net, cache, Eigen::VectorXd::Zero(1));
        CHECK(g.input.isZero(0.0));
        for (const auto& d : g.dense) {
            CHECK(d.W.isZero(0.0));
            CHECK(d.b.isZero(0.0));
        }
        for (const auto& c : g.conv) CHECK(c.W.isZero(0.0));
    }

    TEST_CASE("stale cache is rejected") {
        Network net = makeNetwork(Arch::Actor, 4);
        ForwardCache cache;
        forward(net, Eigen::VectorXd::Constant(9, 0.1), &cache);
        AdamState opt = makeAdam(net);
        GradientBundle g = backward(net, cache, Eigen::VectorXd::Ones(3));
        adamStep(opt, net, g);
        CHECK_THROWS(backward(net, cache, Eigen::VectorXd::Ones(3)));
    }
}

TEST_SUITE("nn.optimizer") {
    TEST_CASE("zero gradient leaves parameters fixed") {
        Network net = makeNetwork(Arch::Actor, 6);
        const Network before = net;
        AdamState opt = makeAdam(net);
        ForwardCache cache;
        forward(net, Eigen::VectorXd::Constant(9, 0.5), &cache);
        const GradientBundle zero = backward(net, cache, Eigen::VectorXd::Zero(3));
        adamStep(opt, net, zero);
        CHECK(sameParams(net, before));
        CHECK(opt.step == 1);
    }

    TEST_CASE("constant gradient moves parameter against its sign") {
        Network net = makeNetwork(Arch::Actor, 7);
        const double start = net.conv[0].W(0, 0);
        AdamState opt = makeAdam(net, 1e-2);
        for (int i = 0; i < 20; ++i) {
            ForwardCache cache;
            forward(net, Eigen::VectorXd::Constant(9, 0.5), &cache);
            GradientBundle g = backward(net, cache, Eigen::VectorXd::Zero(3));
            g.conv[0].W(0, 0) = 1.0;
            adamStep(opt, net, g);
        }
        CHECK(net.conv[0].W(0, 0) < start);
    }

    TEST_CASE("non-finite gradient halts") {
        Network net = makeNetwork(Arch::Actor, 8);
        AdamState opt = makeAdam(net);
        ForwardCache cache;
        forward(net, Eigen::VectorXd::Constant(9, 0.5), &cache);
        GradientBundle g = backward(net, cache, Eigen::VectorXd::Zero(3));
        g.dense[0].W(0, 0) = std::nan("");
        CHECK_THROWS(adamStep(opt, net, g));
    }

    TEST_CASE("soft update endpoints and contraction") {
        Network online = makeNetwork(Arch::Actor, 9);
        Network target = makeNetwork(Arch::Actor, 10);

        SUBCASE("tau one copies exactly") {
            softUpdate(target, online, 1.0);
            CHECK(sameParams(target, online));
        }

        SUBCASE("tau small interpolates elementwise") {
            const double w_t = target.dense[0].W(0, 0);
            const double w_o = online.dense[0].W(0, 0);
            softUpdate(target, online, 0.005);
            CHECK(target.dense[0].W(0, 0) ==
                  doctest::Approx(0.005 * w_o + 0.995 * w_t).epsilon(1e-15));
        }

        SUBCASE("repeated updates contract geometrically") {
            double prev = std::abs(target.dense[1].W(2, 3) - online.dense[1].W(2, 3));
            for (int i = 0; i < 5; ++i) {
                softUpdate(target, online, 0.1);
                const double gap = std::abs(target.dense[1].W(2, 3) - online.dense[1].W(2, 3));
                CHECK(gap == doctest::Approx(0.9 * prev).epsilon(1e-12));
                prev = gap;
            }
        }

        SUBCASE("architecture mismatch throws") {
            Network critic = makeNetwork(Arch::Critic, 11);
            CHECK_THROWS(softUpdate(critic, online, 0.005));
        }
    }

    TEST_CASE("copyParams equals tau-one endpoint") {
        Network online = makeNetwork(Arch::Critic, 12);
        Network target = makeNetwork(Arch::Critic, 13);
        copyParams(target, online);
        CHECK(sameParams(target, online));
    }
}

TEST_SUITE("nn.serialize") {
    TEST_CASE("weights bundle round-trips bit-exactly") {
        const WeightsBundle w = makeInitialWeights(31415);
        const WeightsBundle back = weightsFromJson(weightsToJson(w));
        CHECK(sameParams(back.b.actor, w.b.actor));
        CHECK(sameParams(back.b.critic, w.b.critic));
        CHECK(sameParams(back.k.actor, w.k.actor));
        CHECK(sameParams(back.k.critic, w.k.critic));
        CHECK(back.b.cons.f == w.b.cons.f);
        CHECK(back.k.cons.f == w.k.cons.f);
        CHECK(back.fuzzy.centers == w.fuzzy.centers);
        CHECK(back.fuzzy.widths == w.fuzzy.widths);
        CHECK(back.b.cons.head == Head::B);
        CHECK(back.k.cons.head == Head::K);
    }

    TEST_CASE("initial bundle heads are wired correctly") {
        const WeightsBundle w = makeInitialWeights(7);
        CHECK(w.b.actor.arch == Arch::Actor);
        CHECK(w.b.critic.arch == Arch::Critic);
        CHECK(w.k.actor.arch == Arch::Actor);
        CHECK_FALSE(sameParams(w.b.actor, w.k.actor));
    }

    TEST_CASE("malformed documents are rejected") {
        CHECK_THROWS(weightsFromJson("{}"));
        CHECK_THROWS(weightsFromJson("not json"));
    }
}
