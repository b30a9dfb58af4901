// SPDX-License-Identifier: Apache-2.0

#include "litstar/fuzzy/inference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace litstar {

void MembershipParams::validate() const {
    for (int i = 0; i < 3; ++i) {
        if (!(centers[i][0] < centers[i][1] && centers[i][1] < centers[i][2])) {
            throw std::invalid_argument("MembershipParams: centers must ascend per input");
        }
        for (int j = 0; j < 3; ++j) {
            if (!(widths[i][j] > 0.0)) {
                throw std::invalid_argument("MembershipParams: widths must be > 0");
            }
        }
    }
}

MembershipParams MembershipParams::defaults() {
    MembershipParams p;
    for (int i = 0; i < 3; ++i) {
        p.centers[i] = {0.0, 0.5, 1.0};
        p.widths[i] = {0.2, 0.2, 0.2};
    }
    return p;
}

void RuleConsequents::validate() const {
    if (!(f[0] < f[1] && f[1] < f[2])) {
        throw std::invalid_argument("RuleConsequents: consequents must ascend");
    }
}

RuleConsequents RuleConsequents::defaultsB() { return {{20.0, 110.0, 200.0}, Head::B}; }
RuleConsequents RuleConsequents::defaultsK() { return {{3.0, 9.0, 15.0}, Head::K}; }

FuzzyVector fuzzify(const MapObservation& obs, const MembershipParams& params) {
    const std::array<double, 3> x = {obs.rho_global, obs.rho_local, obs.lambda_norm};
    FuzzyVector mu;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double d = x[i] - params.centers[i][j];
            const double s = params.widths[i][j];
            mu[3 * i + j] = std::exp(-(d * d) / (2.0 * s * s));
        }
    }
    return mu;
}

double defuzzifySmooth(const std::array<double, 3>& w, const RuleConsequents& cons) {
    double num = 0.0;
    double den = 0.0;
    for (int i = 0; i < 3; ++i) {
        if (w[i] < 0.0) throw std::invalid_argument("defuzzify: weights must be >= 0");
        num += w[i] * cons.f[i];
        den += w[i];
    }
    if (den == 0.0) return 0.5 * (cons.rangeLo() + cons.rangeHi());
    return num / den;
}

double defuzzifyTsk(const std::array<double, 3>& w, const RuleConsequents& cons) {
    double z = defuzzifySmooth(w, cons);
    if (cons.head == Head::B) z = std::round(z);
    return std::clamp(z, cons.rangeLo(), cons.rangeHi());
}

}  // namespace litstar
