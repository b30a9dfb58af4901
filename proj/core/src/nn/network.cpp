// SPDX-License-Identifier: Apache-2.0

#include "litstar/nn/network.hpp"

#include <cmath>
#include <stdexcept>

#include "litstar/space/rng.hpp"

namespace litstar {

namespace {

constexpr int kBankChannels = 3;
constexpr std::array<int, 3> kKernels = {3, 5, 7};
constexpr std::array<Eigen::Index, 5> kTrunk = {64, 128, 128, 64, 32};

Eigen::MatrixXd uniformInit(Eigen::Index rows, Eigen::Index cols, Eigen::Index fan_in, RngStream& rng) {
    const double bound = 1.0 / std::sqrt(static_cast<double>(fan_in));
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = rng.uniform(-bound, bound);
    }
    return m;
}

double applyAct(Activation act, double x) {
    switch (act) {
        case Activation::ReLU:
            return x > 0.0 ? x : 0.0;
        case Activation::Logistic:
            return 1.0 / (1.0 + std::exp(-x));
        case Activation::Linear:
            return x;
    }
    return x;
}

// Derivative of the activation at pre-activation p with activation value y.
double actGrad(Activation act, double p, double y) {
    switch (act) {
        case Activation::ReLU:
            return p > 0.0 ? 1.0 : 0.0;
        case Activation::Logistic:
            return y * (1.0 - y);
        case Activation::Linear:
            return 1.0;
    }
    return 1.0;
}

}  // namespace

Eigen::Index inputWidth(Arch arch) { return arch == Arch::Actor ? 9 : 10; }
Eigen::Index outputWidth(Arch arch) { return arch == Arch::Actor ? 3 : 1; }

Network makeNetwork(Arch arch, std::uint64_t seed) {
    RngStream rng(seed);
    Network net;
    net.arch = arch;
    const Eigen::Index in_len = inputWidth(arch);

    for (int bank = 0; bank < 3; ++bank) {
        Conv1D& c = net.conv[static_cast<std::size_t>(bank)];
        c.kernel = kKernels[static_cast<std::size_t>(bank)];
        c.W = uniformInit(kBankChannels, c.kernel, c.kernel, rng);
        c.b = Eigen::VectorXd::Zero(kBankChannels);
    }

    Eigen::Index width = 3 * kBankChannels * in_len;  // flattened conv features
    for (const Eigen::Index out : kTrunk) {
        Dense d;
        d.W = uniformInit(out, width, width, rng);
        d.b = Eigen::VectorXd::Zero(out);
        d.act = Activation::ReLU;
        net.dense.push_back(std::move(d));
        width = out;
    }
    Dense head;
    head.W = uniformInit(outputWidth(arch), width, width, rng);
    head.b = Eigen::VectorXd::Zero(outputWidth(arch));
    head.act = arch == Arch::Actor ? Activation::Logistic : Activation::Linear;
    net.dense.push_back(std::move(head));
    return net;
}

Eigen::VectorXd forward(const Network& net, const Eigen::VectorXd& input, ForwardCache* cache) {
    const Eigen::Index L = inputWidth(net.arch);
    if (input.size() != L) throw std::invalid_argument("forward: input width mismatch");

    // Conv bank: each bank maps the length-L sequence to kBankChannels
    // sequences of the same length; the flat feature vector is laid out
    // bank-major, channel-major, position-minor.
    Eigen::VectorXd flat(3 * kBankChannels * L);
    Eigen::Index offset = 0;
    for (const Conv1D& c : net.conv) {
        const int pad = (c.kernel - 1) / 2;
        for (Eigen::Index ch = 0; ch < kBankChannels; ++ch) {
            for (Eigen::Index t = 0; t < L; ++t) {
                double acc = c.b[ch];
                for (int dt = 0; dt < c.kernel; ++dt) {
                    const Eigen::Index src = t + dt - pad;
                    if (src >= 0 && src < L) acc += c.W(ch, dt) * input[src];
                }
                flat[offset + ch * L + t] = acc;
            }
        }
        offset += kBankChannels * L;
    }

    if (cache) {
        cache->version = net.version;
        cache->input = input;
        cache->flat = flat;
        cache->pre.clear();
        cache->post.clear();
    }

    Eigen::VectorXd x = flat;
    for (const Dense& d : net.dense) {
        if (d.W.cols() != x.size()) throw std::invalid_argument("forward: layer shape mismatch");
        Eigen::VectorXd pre = d.W * x + d.b;
        Eigen::VectorXd post(pre.size());
        for (Eigen::Index i = 0; i < pre.size(); ++i) post[i] = applyAct(d.act, pre[i]);
        if (cache) {
            cache->pre.push_back(pre);
            cache->post.push_back(post);
        }
        x = std::move(post);
    }
    return x;
}

GradientBundle backward(const Network& net, const ForwardCache& cache, const Eigen::VectorXd& upstream) {
    if (cache.version != net.version) {
        throw std::runtime_error("backward: cache is stale (parameters changed since forward)");
    }
    const std::size_t n_dense = net.dense.size();
    if (cache.pre.size() != n_dense || upstream.size() != net.dense.back().W.rows()) {
        throw std::invalid_argument("backward: cache/upstream shape mismatch");
    }

    GradientBundle g;
    g.dense.resize(n_dense);

    Eigen::VectorXd delta = upstream;
    for (std::size_t li = n_dense; li-- > 0;) {
        const Dense& d = net.dense[li];
        const Eigen::VectorXd& pre = cache.pre[li];
        const Eigen::VectorXd& post = cache.post[li];
        for (Eigen::Index i = 0; i < delta.size(); ++i) {
            delta[i] *= actGrad(d.act, pre[i], post[i]);
        }
        const Eigen::VectorXd& below = li == 0 ? cache.flat : cache.post[li - 1];
        g.dense[li].W = delta * below.transpose();
        g.dense[li].b = delta;
        delta = d.W.transpose() * delta;
    }

    // delta now holds d loss / d flat; push it through the conv bank.
    const Eigen::Index L = inputWidth(net.arch);
    g.input = Eigen::VectorXd::Zero(L);
    Eigen::Index offset = 0;
    for (std::size_t bank = 0; bank < 3; ++bank) {
        const Conv1D& c = net.conv[bank];
        const int pad = (c.kernel - 1) / 2;
        g.conv[bank].W = Eigen::MatrixXd::Zero(kBankChannels, c.kernel);
        g.conv[bank].b = Eigen::VectorXd::Zero(kBankChannels);
        for (Eigen::Index ch = 0; ch < kBankChannels; ++ch) {
            for (Eigen::Index t = 0; t < L; ++t) {
                const double dout = delta[offset + ch * L + t];
                g.conv[bank].b[ch] += dout;
                for (int dt = 0; dt < c.kernel; ++dt) {
                    const Eigen::Index src = t + dt - pad;
                    if (src >= 0 && src < L) {
                        g.conv[bank].W(ch, dt) += dout * cache.input[src];
                        g.input[src] += dout * c.W(ch, dt);
                    }
                }
            }
        }
        offset += kBankChannels * L;
    }
    return g;
}

}  // namespace litstar
