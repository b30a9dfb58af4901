// SPDX-License-Identifier: Apache-2.0

#include "litstar/space/environment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace litstar {

using nlohmann::json;

double defaultDelta(const AxisBox& bounds) {
    double shortest = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < bounds.dim(); ++i) {
        shortest = std::min(shortest, bounds.hi[i] - bounds.lo[i]);
    }
    return 0.01 * shortest;
}

void Environment::validate() const {
    if (dim < 1) throw std::invalid_argument("Environment: dim must be >= 1");
    if (bounds.dim() != dim) throw std::invalid_argument("Environment: bounds dimension mismatch");
    if (!(delta > 0.0)) throw std::invalid_argument("Environment: delta must be > 0");
    if (!isStateValid(*this, start)) throw std::invalid_argument("Environment: start state is invalid");
    if (goals.empty()) throw std::invalid_argument("Environment: at least one goal required");
    for (const State& g : goals) {
        if (!isStateValid(*this, g)) throw std::invalid_argument("Environment: goal state is invalid");
    }
}

bool isStateValid(const Environment& env, const State& x) {
    if (x.size() != env.dim) throw std::invalid_argument("isStateValid: dimension mismatch");
    if (!x.allFinite()) return false;
    if (!env.bounds.contains(x)) return false;
    for (const AxisBox& obs : env.obstacles) {
        if (obs.contains(x)) return false;
    }
    return true;
}

namespace {

// Visit segment interpolation indices 0..k in bit-reversal-ish order so that
// mid-segment collisions are found early. The visited index set is exactly
// {0, 1, ..., k}.
bool checkSegment(const Environment& env, const State& a, const State& b, std::uint64_t* work) {
    const double len = (b - a).norm();
    const auto k = static_cast<long>(std::ceil(len / env.delta));
    if (k <= 0) {  // zero-length edge
        if (work) ++*work;
        return isStateValid(env, a);
    }
    // Endpoints first, then recursively bisect index ranges.
    if (work) *work += 2;
    if (!isStateValid(env, a) || !isStateValid(env, b)) return false;
    std::vector<std::pair<long, long>> stack;
    stack.emplace_back(0, k);
    State x(a.size());
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        if (hi - lo < 2) continue;
        const long mid = lo + (hi - lo) / 2;
        const double t = static_cast<double>(mid) / static_cast<double>(k);
        x = a + t * (b - a);
        if (work) ++*work;
        if (!isStateValid(env, x)) return false;
        stack.emplace_back(lo, mid);
        stack.emplace_back(mid, hi);
    }
    return true;
}

}  // namespace

bool isEdgeValid(const Environment& env, const State& a, const State& b) {
    if (a.size() != env.dim || b.size() != env.dim) {
        throw std::invalid_argument("isEdgeValid: dimension mismatch");
    }
    // Canonical endpoint order makes the check exactly symmetric.
    const State* p = &a;
    const State* q = &b;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) break;
        if (a[i] > b[i]) {
            p = &b;
            q = &a;
            break;
        }
    }
    return checkSegment(env, *p, *q, nullptr);
}

bool isEdgeValidCounted(const Environment& env, const State& a, const State& b, std::uint64_t& work) {
    if (a.size() != env.dim || b.size() != env.dim) {
        throw std::invalid_argument("isEdgeValid: dimension mismatch");
    }
    const State* p = &a;
    const State* q = &b;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) break;
        if (a[i] > b[i]) {
            p = &b;
            q = &a;
            break;
        }
    }
    return checkSegment(env, *p, *q, &work);
}

namespace {

json vecToJson(const State& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

State vecFromJson(const json& arr) {
    State v(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) v[static_cast<Eigen::Index>(i)] = arr[i].get<double>();
    return v;
}

}  // namespace

std::string environmentToJson(const Environment& env) {
    json j;
    j["dim"] = env.dim;
    j["bounds"] = {{"lo", vecToJson(env.bounds.lo)}, {"hi", vecToJson(env.bounds.hi)}};
    json obs = json::array();
    for (const AxisBox& o : env.obstacles) {
        obs.push_back({{"lo", vecToJson(o.lo)}, {"hi", vecToJson(o.hi)}});
    }
    j["obstacles"] = obs;
    j["start"] = vecToJson(env.start);
    json goals = json::array();
    for (const State& g : env.goals) goals.push_back(vecToJson(g));
    j["goals"] = goals;
    j["delta"] = env.delta;
    return j.dump(2);
}

Environment environmentFromJson(const std::string& text) {
    const json j = json::parse(text);
    Environment env;
    env.dim = j.at("dim").get<Eigen::Index>();
    env.bounds = AxisBox(vecFromJson(j.at("bounds").at("lo")), vecFromJson(j.at("bounds").at("hi")));
    for (const json& o : j.at("obstacles")) {
        env.obstacles.emplace_back(vecFromJson(o.at("lo")), vecFromJson(o.at("hi")));
    }
    env.start = vecFromJson(j.at("start"));
    for (const json& g : j.at("goals")) env.goals.push_back(vecFromJson(g));
    env.delta = j.at("delta").get<double>();
    env.validate();
    return env;
}

void saveEnvironment(const Environment& env, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << environmentToJson(env) << "\n";
}

Environment loadEnvironment(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return environmentFromJson(ss.str());
}

}  // namespace litstar
