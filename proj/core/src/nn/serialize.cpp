// SPDX-License-Identifier: Apache-2.0

#include "litstar/nn/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace litstar {

using nlohmann::json;

WeightsBundle makeInitialWeights(std::uint64_t seed) {
    WeightsBundle w;
    w.b.actor = makeNetwork(Arch::Actor, seed);
    w.b.critic = makeNetwork(Arch::Critic, seed + 1);
    w.b.cons = RuleConsequents::defaultsB();
    w.k.actor = makeNetwork(Arch::Actor, seed + 2);
    w.k.critic = makeNetwork(Arch::Critic, seed + 3);
    w.k.cons = RuleConsequents::defaultsK();
    return w;
}

namespace {

json matrixToJson(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

Eigen::MatrixXd matrixFromJson(const json& rows) {
    const auto nr = static_cast<Eigen::Index>(rows.size());
    const auto nc = nr > 0 ? static_cast<Eigen::Index>(rows[0].size()) : 0;
    Eigen::MatrixXd m(nr, nc);
    for (Eigen::Index r = 0; r < nr; ++r) {
        const json& row = rows[static_cast<std::size_t>(r)];
        if (static_cast<Eigen::Index>(row.size()) != nc) {
            throw std::runtime_error("weights file: ragged matrix");
        }
        for (Eigen::Index c = 0; c < nc; ++c) m(r, c) = row[static_cast<std::size_t>(c)].get<double>();
    }
    return m;
}

json vectorToJson(const Eigen::VectorXd& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

Eigen::VectorXd vectorFromJson(const json& arr) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(arr.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = arr[static_cast<std::size_t>(i)].get<double>();
    return v;
}

std::string actName(Activation a) {
    switch (a) {
        case Activation::ReLU:
            return "relu";
        case Activation::Logistic:
            return "logistic";
        case Activation::Linear:
            return "linear";
    }
    return "linear";
}

Activation actFromName(const std::string& s) {
    if (s == "relu") return Activation::ReLU;
    if (s == "logistic") return Activation::Logistic;
    if (s == "linear") return Activation::Linear;
    throw std::runtime_error("weights file: unknown activation " + s);
}

json networkToJson(const Network& net) {
    json j;
    j["architecture"] = net.arch == Arch::Actor ? "actor" : "critic";
    json layers = json::array();
    for (const Conv1D& c : net.conv) {
        layers.push_back({{"kind", "conv"},
                          {"kernel", c.kernel},
                          {"shape", {c.W.rows(), c.W.cols()}},
                          {"weights", matrixToJson(c.W)},
                          {"bias", vectorToJson(c.b)}});
    }
    for (const Dense& d : net.dense) {
        layers.push_back({{"kind", "dense"},
                          {"activation", actName(d.act)},
                          {"shape", {d.W.rows(), d.W.cols()}},
                          {"weights", matrixToJson(d.W)},
                          {"bias", vectorToJson(d.b)}});
    }
    j["layers"] = std::move(layers);
    return j;
}

Network networkFromJson(const json& j) {
    Network net;
    const std::string arch = j.at("architecture").get<std::string>();
    if (arch == "actor") {
        net.arch = Arch::Actor;
    } else if (arch == "critic") {
        net.arch = Arch::Critic;
    } else {
        throw std::runtime_error("weights file: unknown architecture " + arch);
    }
    std::size_t conv_seen = 0;
    for (const json& layer : j.at("layers")) {
        const std::string kind = layer.at("kind").get<std::string>();
        if (kind == "conv") {
            if (conv_seen >= net.conv.size()) throw std::runtime_error("weights file: too many conv layers");
            Conv1D c;
            c.kernel = layer.at("kernel").get<int>();
            c.W = matrixFromJson(layer.at("weights"));
            c.b = vectorFromJson(layer.at("bias"));
            if (c.W.cols() != c.kernel) throw std::runtime_error("weights file: conv shape mismatch");
            net.conv[conv_seen++] = std::move(c);
        } else if (kind == "dense") {
            Dense d;
            d.act = actFromName(layer.at("activation").get<std::string>());
            d.W = matrixFromJson(layer.at("weights"));
            d.b = vectorFromJson(layer.at("bias"));
            if (d.b.size() != d.W.rows()) throw std::runtime_error("weights file: dense shape mismatch");
            net.dense.push_back(std::move(d));
        } else {
            throw std::runtime_error("weights file: unknown layer kind " + kind);
        }
    }
    if (conv_seen != net.conv.size() || net.dense.empty()) {
        throw std::runtime_error("weights file: incomplete network");
    }
    return net;
}

json fuzzyToJson(const MembershipParams& p) {
    json j;
    j["centers"] = p.centers;
    j["widths"] = p.widths;
    return j;
}

MembershipParams fuzzyFromJson(const json& j) {
    MembershipParams p;
    p.centers = j.at("centers").get<std::array<std::array<double, 3>, 3>>();
    p.widths = j.at("widths").get<std::array<std::array<double, 3>, 3>>();
    p.validate();
    return p;
}

json headToJson(const HeadWeights& h) {
    json j;
    j["actor"] = networkToJson(h.actor);
    j["critic"] = networkToJson(h.critic);
    j["consequents"] = h.cons.f;
    return j;
}

HeadWeights headFromJson(const json& j, Head head) {
    HeadWeights h;
    h.actor = networkFromJson(j.at("actor"));
    h.critic = networkFromJson(j.at("critic"));
    h.cons.f = j.at("consequents").get<std::array<double, 3>>();
    h.cons.head = head;
    h.cons.validate();
    return h;
}

}  // namespace

std::string weightsToJson(const WeightsBundle& w) {
    json j;
    j["format"] = "litstar-weights";
    j["heads"] = {{"b", headToJson(w.b)}, {"k", headToJson(w.k)}};
    j["fuzzy"] = fuzzyToJson(w.fuzzy);
    return j.dump();
}

WeightsBundle weightsFromJson(const std::string& text) {
    const json j = json::parse(text);
    if (j.value("format", "") != std::string("litstar-weights")) {
        throw std::runtime_error("weights file: unrecognized format");
    }
    WeightsBundle w;
    w.b = headFromJson(j.at("heads").at("b"), Head::B);
    w.k = headFromJson(j.at("heads").at("k"), Head::K);
    w.fuzzy = fuzzyFromJson(j.at("fuzzy"));
    return w;
}

void saveWeights(const WeightsBundle& w, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << weightsToJson(w) << "\n";
}

WeightsBundle loadWeights(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return weightsFromJson(ss.str());
}

}  // namespace litstar
