// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "litstar/encoder/observation.hpp"
#include "litstar/space/rng.hpp"

using namespace litstar;

namespace {

State vec2(double x, double y) {
    State s(2);
    s << x, y;
    return s;
}

}  // namespace

TEST_SUITE("encoder.ledger") {
    TEST_CASE("counts and removal") {
        SampleLedger ledger(2);
        const auto a = ledger.addValid(vec2(0.1, 0.1));
        ledger.addValid(vec2(0.2, 0.2));
        ledger.addInvalid(vec2(0.9, 0.9));
        CHECK(ledger.validCount() == 2);
        CHECK(ledger.invalidCount() == 1);
        CHECK(ledger.classifiedCount() == 3);
        ledger.removeValid(a);
        CHECK(ledger.validCount() == 1);
        CHECK(ledger.classifiedCount() == 2);
        CHECK_FALSE(ledger.isActive(a));
    }

    TEST_CASE("radius counts match a linear-scan oracle") {
        RngStream rng(41);
        SampleLedger ledger(3);
        std::vector<State> valid, invalid;
        for (int i = 0; i < 400; ++i) {
            State s(3);
            s << rng.uniform01(), rng.uniform01(), rng.uniform01();
            if (rng.uniform01() < 0.3) {
                ledger.addInvalid(s);
                invalid.push_back(s);
            } else {
                ledger.addValid(s);
                valid.push_back(s);
            }
        }
        for (int trial = 0; trial < 40; ++trial) {
            State c(3);
            c << rng.uniform01(), rng.uniform01(), rng.uniform01();
            const double r = rng.uniform(0.01, 0.6);
            std::size_t want_valid = 0, want_invalid = 0;
            for (const State& s : valid) {
                if ((s - c).squaredNorm() <= r * r) ++want_valid;
            }
            for (const State& s : invalid) {
                if ((s - c).squaredNorm() <= r * r) ++want_invalid;
            }
            const BallCounts got = ledger.countWithin(c, r);
            CHECK(got.valid == want_valid);
            CHECK(got.invalid == want_invalid);
        }
    }

    TEST_CASE("removed states leave radius counts") {
        SampleLedger ledger(2);
        const auto id = ledger.addValid(vec2(0.5, 0.5));
        ledger.addValid(vec2(0.52, 0.5));
        CHECK(ledger.countWithin(vec2(0.5, 0.5), 0.1).valid == 2);
        ledger.removeValid(id);
        CHECK(ledger.countWithin(vec2(0.5, 0.5), 0.1).valid == 1);
    }

    TEST_CASE("nearest neighbors match a full-scan oracle under churn") {
        // Clustered points, duplicates, and interleaved removals across
        // dimensions, including ones past the indexed-axis cutoff.
        for (const Eigen::Index dim : {2, 3, 4, 6, 7, 8}) {
            RngStream rng(900 + static_cast<std::uint64_t>(dim));
            SampleLedger ledger(dim);
            std::vector<SampleLedger::Id> ids;
            auto draw = [&]() {
                State s(dim);
                const double mode = rng.uniform01();
                for (Eigen::Index i = 0; i < dim; ++i) {
                    if (mode < 0.4) {
                        s[i] = 0.5 + 0.01 * (rng.uniform01() - 0.5);
                    } else if (mode < 0.5 && i > 0) {
                        s[i] = 0.25;
                    } else {
                        s[i] = rng.uniform(-1.0, 2.0);
                    }
                }
                return s;
            };
            for (int i = 0; i < 500; ++i) {
                State s = draw();
                ids.push_back(ledger.addValid(s));
                if (i % 7 == 0) ledger.addValid(s);
                if (i % 5 == 0) ledger.addInvalid(draw());
                if (i % 3 == 0 && ids.size() > 4) {
                    const auto pick = ids[rng.uniformInt(ids.size())];
                    if (ledger.isActive(pick)) ledger.removeValid(pick);
                }
            }
            for (int trial = 0; trial < 30; ++trial) {
                SampleLedger::Id center = 0;
                do {
                    center = static_cast<SampleLedger::Id>(rng.uniformInt(ledger.idEnd()));
                } while (!ledger.isActive(center));
                const int k = 1 + static_cast<int>(rng.uniformInt(ledger.validCount() + 8));

                std::vector<std::pair<double, SampleLedger::Id>> oracle;
                const State& xc = ledger.validState(center);
                ledger.forEachValid([&](SampleLedger::Id u, const State& xu) {
                    if (u != center) oracle.emplace_back((xu - xc).squaredNorm(), u);
                });
                std::sort(oracle.begin(), oracle.end());
                if (oracle.size() > static_cast<std::size_t>(k)) {
                    oracle.resize(static_cast<std::size_t>(k));
                }

                std::size_t evals = 0;
                const auto got = ledger.kNearestValid(center, k, &evals);
                REQUIRE(got.size() == oracle.size());
                for (std::size_t i = 0; i < got.size(); ++i) {
                    CHECK(got[i].first == oracle[i].first);
                    CHECK(got[i].second == oracle[i].second);
                }
                CHECK(evals <= ledger.validCount());
            }
        }
    }

    TEST_CASE("nearest-neighbor argument handling") {
        SampleLedger ledger(2);
        const auto a = ledger.addValid(vec2(0.0, 0.0));
        CHECK(ledger.kNearestValid(a, 5).empty());
        CHECK(ledger.kNearestValid(a, 0).empty());
        const auto b = ledger.addValid(vec2(1.0, 0.0));
        ledger.removeValid(b);
        CHECK(ledger.kNearestValid(a, 3).empty());
        CHECK_THROWS_AS((void)ledger.kNearestValid(b, 1), std::invalid_argument);
    }
}

TEST_SUITE("encoder.ratios") {
    TEST_CASE("invalid ratio formula") {
        CHECK(ratioCalc(5, 15) == doctest::Approx(0.25));
        CHECK(ratioCalc(0, 7) == doctest::Approx(0.0));
        CHECK(ratioCalc(0, 0) == doctest::Approx(0.0));
        CHECK(ratioCalc(4, 0) == doctest::Approx(1.0));
    }

    TEST_CASE("complement ratios sum to one") {
        RngStream rng(6);
        for (int i = 0; i < 100; ++i) {
            const auto a = static_cast<std::size_t>(rng.uniformInt(50));
            const auto b = static_cast<std::size_t>(rng.uniformInt(50));
            if (a + b == 0) continue;
            CHECK(ratioCalc(a, b) + ratioCalc(b, a) == doctest::Approx(1.0));
        }
    }

    TEST_CASE("connectivity radius formula") {
        // n=2, eta=1, free measure pi, q=3: r = sqrt(2 * 1.5 * (pi/pi) * ln3/3)
        const double expected = std::sqrt(2.0 * 1.5 * std::log(3.0) / 3.0);
        CHECK(localRadius(3, 2, std::numbers::pi, 1.0) == doctest::Approx(expected).epsilon(1e-12));
        CHECK_THROWS(localRadius(1, 2, 1.0, 1.0));
    }

    TEST_CASE("radius monotone in q, homogeneous in measure") {
        double prev = localRadius(3, 2, 1.0, 1.0);
        for (std::size_t q = 4; q < 40; ++q) {
            const double r = localRadius(q, 2, 1.0, 1.0);
            CHECK(r < prev);
            prev = r;
        }
        const double r1 = localRadius(10, 3, 1.0, 1.0);
        const double r2 = localRadius(10, 3, 2.0, 1.0);
        CHECK(r2 / r1 == doctest::Approx(std::pow(2.0, 1.0 / 3.0)).epsilon(1e-12));
    }

    TEST_CASE("local ratios over explicit balls") {
        SampleLedger ledger(2);
        // ball at origin: 2 invalid, 2 valid
        ledger.addValid(vec2(0.01, 0.0));
        ledger.addValid(vec2(-0.01, 0.0));
        ledger.addInvalid(vec2(0.0, 0.01));
        ledger.addInvalid(vec2(0.0, -0.01));
        // far cluster: 3 invalid, 1 valid
        ledger.addInvalid(vec2(5.0, 5.0));
        ledger.addInvalid(vec2(5.01, 5.0));
        ledger.addInvalid(vec2(5.0, 5.01));
        ledger.addValid(vec2(5.01, 5.01));

        CHECK(localRatioK(ledger, vec2(0.0, 0.0), 0.1) == doctest::Approx(0.5));
        CHECK(localRatioK(ledger, vec2(5.0, 5.0), 0.1) == doctest::Approx(0.75));
        CHECK(localRatioK(ledger, vec2(-3.0, -3.0), 0.1) == doctest::Approx(0.0));

        const std::vector<State> path{vec2(0.0, 0.0), vec2(5.0, 5.0)};
        CHECK(localRatioB(ledger, path, 0.1) == doctest::Approx(0.625));
        CHECK(localRatioB(ledger, {}, 0.1) == doctest::Approx(0.0));

        const std::vector<State> single{vec2(0.0, 0.0)};
        CHECK(localRatioB(ledger, single, 0.1) ==
              doctest::Approx(localRatioK(ledger, vec2(0.0, 0.0), 0.1)));
    }
}

TEST_SUITE("encoder.observe") {
    TEST_CASE("conventions for fresh and degenerate searches") {
        Environment env;
        env.dim = 2;
        env.bounds = AxisBox(State::Zero(2), State::Ones(2));
        env.start = vec2(0.1, 0.5);
        env.goals = {vec2(0.9, 0.5)};
        env.delta = defaultDelta(env.bounds);

        SampleLedger ledger(2);
        InformedSet open_set(env.start, env.goals[0]);

        SUBCASE("empty ledger yields (0, 0, 1)") {
            const ObservationPair obs =
                observe(ledger, open_set, env, {}, env.start, 1.0);
            CHECK(obs.batch.rho_global == doctest::Approx(0.0));
            CHECK(obs.batch.rho_local == doctest::Approx(0.0));
            CHECK(obs.batch.lambda_norm == doctest::Approx(1.0));
            CHECK(obs.neighbor.lambda_norm == doctest::Approx(1.0));
            CHECK(obs.radius == doctest::Approx(0.0));
        }

        SUBCASE("degenerate spheroid yields lambda 0") {
            InformedSet tight(env.start, env.goals[0], 0.8);
            CHECK(lambdaNorm(tight, env) == doctest::Approx(0.0));
        }

        SUBCASE("components stay within [0,1]") {
            RngStream rng(13);
            for (int i = 0; i < 300; ++i) {
                State s(2);
                s << rng.uniform01(), rng.uniform01();
                if (rng.uniform01() < 0.4) {
                    ledger.addInvalid(s);
                } else {
                    ledger.addValid(s);
                }
            }
            InformedSet inf(env.start, env.goals[0], 1.2);
            const std::vector<State> path{env.start, vec2(0.5, 0.5), env.goals[0]};
            const ObservationPair obs = observe(ledger, inf, env, path, vec2(0.5, 0.5), 1.1);
            for (const MapObservation& o : {obs.batch, obs.neighbor}) {
                CHECK(o.rho_global >= 0.0);
                CHECK(o.rho_global <= 1.0);
                CHECK(o.rho_local >= 0.0);
                CHECK(o.rho_local <= 1.0);
                CHECK(o.lambda_norm >= 0.0);
                CHECK(o.lambda_norm <= 1.0);
            }
            CHECK(obs.radius > 0.0);
            CHECK(obs.batch.rho_global == doctest::Approx(obs.neighbor.rho_global));
        }
    }
}
