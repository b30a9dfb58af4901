// SPDX-License-Identifier: Apache-2.0

#include "litstar/policy/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "litstar/fuzzy/inference.hpp"

namespace litstar {

using nlohmann::json;

std::array<AxisSpec, 3> defaultAxes() {
    return {AxisSpec{"rho_global", 0.0, 1.0, 21}, AxisSpec{"rho_local", 0.0, 1.0, 21},
            AxisSpec{"lambda", 0.0, 1.0, 21}};
}

namespace {

int axisIndex(double v, const AxisSpec& ax) {
    v = std::clamp(v, ax.min, ax.max);
    const double t = (v - ax.min) / (ax.max - ax.min);
    const int idx = static_cast<int>(std::floor(t * ax.bins));
    return std::min(idx, ax.bins - 1);
}

std::size_t flatten(const std::array<int, 3>& idx, const std::array<AxisSpec, 3>& axes) {
    return (static_cast<std::size_t>(idx[0]) * axes[1].bins + idx[1]) * axes[2].bins + idx[2];
}

double binCenter(int i, const AxisSpec& ax) {
    return ax.min + (static_cast<double>(i) + 0.5) * (ax.max - ax.min) / ax.bins;
}

}  // namespace

std::array<int, 3> toIndex(const MapObservation& obs, const std::array<AxisSpec, 3>& axes) {
    return {axisIndex(obs.rho_global, axes[0]), axisIndex(obs.rho_local, axes[1]),
            axisIndex(obs.lambda_norm, axes[2])};
}

PolicyTensor bake(const Network& actor, const MembershipParams& fuzzy, const RuleConsequents& cons,
                  const std::array<AxisSpec, 3>& axes) {
    if (actor.arch != Arch::Actor) throw std::invalid_argument("bake: network is not an actor");
    cons.validate();
    for (const AxisSpec& ax : axes) {
        if (!(ax.min < ax.max) || ax.bins < 2) throw std::invalid_argument("bake: bad axis spec");
    }

    PolicyTensor t;
    t.axes = axes;
    t.head = cons.head;
    t.range_lo = cons.rangeLo();
    t.range_hi = cons.rangeHi();
    t.values.resize(static_cast<std::size_t>(axes[0].bins) * axes[1].bins * axes[2].bins);

    for (int x = 0; x < axes[0].bins; ++x) {
        for (int y = 0; y < axes[1].bins; ++y) {
            for (int z = 0; z < axes[2].bins; ++z) {
                MapObservation obs;
                obs.rho_global = binCenter(x, axes[0]);
                obs.rho_local = binCenter(y, axes[1]);
                obs.lambda_norm = binCenter(z, axes[2]);
                const FuzzyVector mu = fuzzify(obs, fuzzy);
                Eigen::VectorXd in(9);
                for (int i = 0; i < 9; ++i) in[i] = mu[static_cast<std::size_t>(i)];
                const Eigen::VectorXd out = forward(actor, in);
                const std::array<double, 3> w = {out[0], out[1], out[2]};
                t.values[flatten({x, y, z}, axes)] = defuzzifyTsk(w, cons);
            }
        }
    }
    return t;
}

double lookup(const PolicyTensor& tensor, const MapObservation& obs) {
    return tensor.values[flatten(toIndex(obs, tensor.axes), tensor.axes)];
}

std::string tensorToJson(const PolicyTensor& tensor) {
    json j;
    j["head"] = tensor.head == Head::B ? "b" : "k";
    json axes = json::array();
    for (const AxisSpec& ax : tensor.axes) {
        axes.push_back({{"name", ax.name}, {"min", ax.min}, {"max", ax.max}, {"bins", ax.bins}});
    }
    j["axes"] = std::move(axes);
    j["value_range"] = {tensor.range_lo, tensor.range_hi};
    j["values"] = tensor.values;
    return j.dump();
}

PolicyTensor tensorFromJson(const std::string& text) {
    const json j = json::parse(text);
    PolicyTensor t;
    const std::string head = j.at("head").get<std::string>();
    if (head == "b") {
        t.head = Head::B;
    } else if (head == "k") {
        t.head = Head::K;
    } else {
        throw std::runtime_error("tensor file: unknown head " + head);
    }
    const json& axes = j.at("axes");
    if (axes.size() != 3) throw std::runtime_error("tensor file: need exactly 3 axes");
    for (std::size_t i = 0; i < 3; ++i) {
        AxisSpec& ax = t.axes[i];
        ax.name = axes[i].at("name").get<std::string>();
        ax.min = axes[i].at("min").get<double>();
        ax.max = axes[i].at("max").get<double>();
        ax.bins = axes[i].at("bins").get<int>();
        if (!(ax.min < ax.max) || ax.bins < 2) throw std::runtime_error("tensor file: bad axis");
    }
    t.range_lo = j.at("value_range").at(0).get<double>();
    t.range_hi = j.at("value_range").at(1).get<double>();
    t.values = j.at("values").get<std::vector<double>>();
    const std::size_t expect =
        static_cast<std::size_t>(t.axes[0].bins) * t.axes[1].bins * t.axes[2].bins;
    if (t.values.size() != expect) throw std::runtime_error("tensor file: value count mismatch");
    for (const double v : t.values) {
        if (!(v >= t.range_lo && v <= t.range_hi)) {
            throw std::runtime_error("tensor file: value outside declared range");
        }
    }
    return t;
}

void saveTensor(const PolicyTensor& tensor, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << tensorToJson(tensor) << "\n";
}

PolicyTensor loadTensor(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return tensorFromJson(ss.str());
}

TensorPolicy::TensorPolicy(PolicyTensor tensor_b, PolicyTensor tensor_k)
    : b_(std::move(tensor_b)), k_(std::move(tensor_k)) {
    if (b_.head != Head::B || k_.head != Head::K) {
        throw std::invalid_argument("TensorPolicy: tensors must be a B head and a K head");
    }
}

int TensorPolicy::batchSize(const MapObservation& obs, const DecisionContext&) {
    return static_cast<int>(std::lround(lookup(b_, obs)));
}

double TensorPolicy::neighborFactor(const MapObservation& obs, const DecisionContext&) {
    return lookup(k_, obs);
}

}  // namespace litstar
