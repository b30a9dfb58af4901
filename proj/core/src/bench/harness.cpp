// SPDX-License-Identifier: Apache-2.0

#include "litstar/bench/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace litstar {

namespace {

std::string fmtReal(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

nlohmann::json jsonReal(double v) {
    if (std::isfinite(v)) return v;
    return "inf";
}

nlohmann::json jsonStat(const SummaryStat& s) {
    return {{"median", jsonReal(s.median)}, {"lo", jsonReal(s.lo)}, {"hi", jsonReal(s.hi)}};
}

TrialResult runTrial(const Environment& env, const NamedPlanner& planner,
                     const PlannerConfig& config, std::uint64_t seed) {
    TrialResult trial;
    trial.planner = planner.name;
    trial.seed = seed;
    auto policy = planner.make();
    if (!policy) throw std::runtime_error("runBench: planner factory returned null");
    RngStream rng(seed);
    PlanResult result = plan(env, config, rng, *policy);
    if (result.solved()) {
        trial.t_init = result.solutions.front().time;
        trial.c_init = result.solutions.front().cost;
        trial.c_final = result.best().cost;
        trial.success = true;
    }
    trial.trace = std::move(result.solutions);
    return trial;
}

/// Cost of the cheapest solution known at time t (a step function of the
/// anytime trace), infinite before the first solution.
double costAt(const std::vector<SolutionRecord>& trace, double t) {
    double c = std::numeric_limits<double>::infinity();
    for (const SolutionRecord& rec : trace) {
        if (rec.time <= t) c = rec.cost;
    }
    return c;
}

}  // namespace

std::vector<TrialResult> runBench(const Environment& env,
                                  const std::vector<NamedPlanner>& planners,
                                  const BenchOptions& options) {
    if (options.runs < 1) throw std::invalid_argument("runBench: runs must be >= 1");
    if (planners.empty()) throw std::invalid_argument("runBench: no planners given");
    env.validate();

    const std::size_t total = planners.size() * static_cast<std::size_t>(options.runs);
    std::vector<TrialResult> results(total);
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;

    auto worker = [&]() {
        for (;;) {
            const std::size_t job = next.fetch_add(1);
            if (job >= total) return;
            const std::size_t pi = job / static_cast<std::size_t>(options.runs);
            const std::size_t ri = job % static_cast<std::size_t>(options.runs);
            try {
                results[job] = runTrial(env, planners[pi], options.planner,
                                        options.base_seed + ri);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(total)));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    std::sort(results.begin(), results.end(), [](const TrialResult& a, const TrialResult& b) {
        if (a.planner != b.planner) return a.planner < b.planner;
        return a.seed < b.seed;
    });
    return results;
}

std::vector<PlannerSummary> summarize(const std::vector<TrialResult>& results,
                                      double confidence) {
    std::vector<PlannerSummary> out;
    std::vector<std::string> order;
    for (const TrialResult& r : results) {
        if (std::find(order.begin(), order.end(), r.planner) == order.end()) {
            order.push_back(r.planner);
        }
    }
    for (const std::string& name : order) {
        std::vector<double> t_init, c_init, c_final;
        int successes = 0;
        int runs = 0;
        for (const TrialResult& r : results) {
            if (r.planner != name) continue;
            ++runs;
            t_init.push_back(r.t_init);
            c_init.push_back(r.c_init);
            c_final.push_back(r.c_final);
            if (r.success) ++successes;
        }
        PlannerSummary s;
        s.planner = name;
        s.runs = runs;
        s.success_rate = runs > 0 ? static_cast<double>(successes) / runs : 0.0;
        s.t_init = medianCi(t_init, confidence);
        s.c_init = medianCi(c_init, confidence);
        s.c_final = medianCi(c_final, confidence);
        out.push_back(std::move(s));
    }
    return out;
}

std::string benchCsv(const std::vector<TrialResult>& results) {
    std::string out = "planner,seed,t_init,c_init,c_final,success\n";
    for (const TrialResult& r : results) {
        out += r.planner;
        out += ',';
        out += std::to_string(r.seed);
        out += ',';
        out += fmtReal(r.t_init);
        out += ',';
        out += fmtReal(r.c_init);
        out += ',';
        out += fmtReal(r.c_final);
        out += ',';
        out += r.success ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::string summaryJson(const std::vector<PlannerSummary>& summaries) {
    nlohmann::json j;
    j["summaries"] = nlohmann::json::array();
    for (const PlannerSummary& s : summaries) {
        j["summaries"].push_back({{"planner", s.planner},
                                  {"runs", s.runs},
                                  {"success_rate", s.success_rate},
                                  {"t_init", jsonStat(s.t_init)},
                                  {"c_init", jsonStat(s.c_init)},
                                  {"c_final", jsonStat(s.c_final)}});
    }
    return j.dump(2) + "\n";
}

std::string benchSvg(const std::vector<TrialResult>& results, double time_budget,
                     double confidence) {
    if (!(time_budget > 0.0)) throw std::invalid_argument("benchSvg: budget must be > 0");
    constexpr double kWidth = 720.0, kHeight = 480.0;
    constexpr double kLeft = 70.0, kRight = 24.0, kTop = 24.0, kBottom = 52.0;
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    constexpr int kGrid = 96;
    const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
    constexpr std::size_t kColorCount = sizeof(kColors) / sizeof(kColors[0]);

    std::vector<std::string> names;
    for (const TrialResult& r : results) {
        if (std::find(names.begin(), names.end(), r.planner) == names.end()) {
            names.push_back(r.planner);
        }
    }

    double t_lo = time_budget;
    double c_max = 0.0, c_min = std::numeric_limits<double>::infinity();
    for (const TrialResult& r : results) {
        for (const SolutionRecord& rec : r.trace) {
            if (rec.time > 0.0) t_lo = std::min(t_lo, rec.time);
            if (std::isfinite(rec.cost)) {
                c_max = std::max(c_max, rec.cost);
                c_min = std::min(c_min, rec.cost);
            }
        }
    }
    t_lo = std::max(t_lo * 0.8, time_budget * 1e-4);
    if (!std::isfinite(c_min)) {
        c_min = 0.0;
        c_max = 1.0;
    }
    const double y_lo = c_min * 0.95;
    const double y_hi = std::max(c_max * 1.05, y_lo + 1e-12);
    const double lx_lo = std::log10(t_lo), lx_hi = std::log10(time_budget);

    auto xOf = [&](double t) {
        const double lt = std::log10(std::max(t, t_lo));
        return kLeft + (lt - lx_lo) / (lx_hi - lx_lo) * plot_w;
    };
    auto yOf = [&](double c) {
        if (!std::isfinite(c)) return kTop;
        const double f = (c - y_lo) / (y_hi - y_lo);
        return kTop + (1.0 - std::clamp(f, 0.0, 1.0)) * plot_h;
    };
    auto num = [](double v) {
        char buf[48];
        std::snprintf(buf, sizeof(buf), "%.6g", v);
        return std::string(buf);
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
           num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
    svg += "<rect width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
           "\" fill=\"#ffffff\"/>\n";
    svg += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" + num(plot_w) +
           "\" height=\"" + num(plot_h) +
           "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1\"/>\n";

    for (int d = static_cast<int>(std::ceil(lx_lo)); d <= static_cast<int>(std::floor(lx_hi));
         ++d) {
        const double t = std::pow(10.0, d);
        const double x = xOf(t);
        svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(x) +
               "\" y2=\"" + num(kTop + plot_h) +
               "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + num(x) + "\" y=\"" + num(kTop + plot_h + 18.0) +
               "\" font-size=\"11\" text-anchor=\"middle\" fill=\"#333333\">" + num(t) +
               "</text>\n";
    }
    for (int i = 0; i <= 5; ++i) {
        const double c = y_lo + (y_hi - y_lo) * i / 5.0;
        const double y = yOf(c);
        svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(y) + "\" x2=\"" +
               num(kLeft + plot_w) + "\" y2=\"" + num(y) +
               "\" stroke=\"#eeeeee\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + num(kLeft - 6.0) + "\" y=\"" + num(y + 4.0) +
               "\" font-size=\"11\" text-anchor=\"end\" fill=\"#333333\">" + num(c) +
               "</text>\n";
    }
    svg += "<text x=\"" + num(kLeft + plot_w / 2.0) + "\" y=\"" + num(kHeight - 14.0) +
           "\" font-size=\"13\" text-anchor=\"middle\" fill=\"#111111\">time (s, log)</text>\n";
    svg += "<text x=\"16\" y=\"" + num(kTop + plot_h / 2.0) +
           "\" font-size=\"13\" text-anchor=\"middle\" fill=\"#111111\" transform=\"rotate(-90 16 " +
           num(kTop + plot_h / 2.0) + ")\">solution cost</text>\n";

    for (std::size_t pi = 0; pi < names.size(); ++pi) {
        const std::string& name = names[pi];
        const char* color = kColors[pi % kColorCount];
        std::vector<const TrialResult*> trials;
        for (const TrialResult& r : results) {
            if (r.planner == name) trials.push_back(&r);
        }

        std::vector<double> med(kGrid), lo(kGrid), hi(kGrid), xs(kGrid);
        for (int i = 0; i < kGrid; ++i) {
            const double lt = lx_lo + (lx_hi - lx_lo) * i / (kGrid - 1.0);
            const double t = std::pow(10.0, lt);
            xs[static_cast<std::size_t>(i)] = xOf(t);
            std::vector<double> costs;
            costs.reserve(trials.size());
            for (const TrialResult* r : trials) costs.push_back(costAt(r->trace, t));
            const SummaryStat s = medianCi(costs, confidence);
            med[static_cast<std::size_t>(i)] = s.median;
            lo[static_cast<std::size_t>(i)] = s.lo;
            hi[static_cast<std::size_t>(i)] = s.hi;
        }

        std::string band = "<polygon fill=\"" + std::string(color) +
                           "\" fill-opacity=\"0.15\" stroke=\"none\" points=\"";
        for (int i = 0; i < kGrid; ++i) {
            band += num(xs[static_cast<std::size_t>(i)]) + "," +
                    num(yOf(hi[static_cast<std::size_t>(i)])) + " ";
        }
        for (int i = kGrid - 1; i >= 0; --i) {
            band += num(xs[static_cast<std::size_t>(i)]) + "," +
                    num(yOf(lo[static_cast<std::size_t>(i)])) + " ";
        }
        band += "\"/>\n";
        svg += band;

        std::string line = "<polyline fill=\"none\" stroke=\"" + std::string(color) +
                           "\" stroke-width=\"2\" points=\"";
        for (int i = 0; i < kGrid; ++i) {
            if (i > 0) {
                line += num(xs[static_cast<std::size_t>(i)]) + "," +
                        num(yOf(med[static_cast<std::size_t>(i - 1)])) + " ";
            }
            line += num(xs[static_cast<std::size_t>(i)]) + "," +
                    num(yOf(med[static_cast<std::size_t>(i)])) + " ";
        }
        line += "\"/>\n";
        svg += line;

        const double ly = kTop + 16.0 + 18.0 * static_cast<double>(pi);
        svg += "<line x1=\"" + num(kLeft + plot_w - 150.0) + "\" y1=\"" + num(ly) + "\" x2=\"" +
               num(kLeft + plot_w - 126.0) + "\" y2=\"" + num(ly) + "\" stroke=\"" + color +
               "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + num(kLeft + plot_w - 120.0) + "\" y=\"" + num(ly + 4.0) +
               "\" font-size=\"12\" fill=\"#111111\">" + name + "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace litstar
