// SPDX-License-Identifier: Apache-2.0
// Command-line front end: plan one query, train the parameter policies,
// bake policy tensors, or run the benchmark harness.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "litstar/bench/harness.hpp"
#include "litstar/ddpg/trainer.hpp"
#include "litstar/policy/tensor.hpp"
#include "litstar/space/worlds.hpp"

namespace {

using namespace litstar;

struct Options {
    std::string env_kind = "np";
    int dim = 4;
    double time = 1.0;
    std::uint64_t seed = 0;
    int runs = 100;
    std::string tensor_b;
    std::string tensor_k;
    std::string mode = "fixed";
    std::string out;
    std::string config;
    double gap = 0.1;
    int count = 10;
    double max_side = 0.3;
    std::string clock;  // empty picks the subcommand default
    double rate = 1e6;
    int episodes = 200;
    std::string head = "both";
    std::string weights;
    int fixed_b = 100;
    double fixed_psi = 1.0;
    int b_init = 0;  // 0 = follow --fixed-b
    double eta = 1.1;
    double rewire = 1.001;
    int jobs = 1;
    std::string planners;
    std::string svg;
    std::string summary;
};

void applyConfigFile(Options& o, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    if (!j.is_object()) throw std::runtime_error("config file must hold a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (key == "env") o.env_kind = value.get<std::string>();
        else if (key == "dim") o.dim = value.get<int>();
        else if (key == "time") o.time = value.get<double>();
        else if (key == "seed") o.seed = value.get<std::uint64_t>();
        else if (key == "runs") o.runs = value.get<int>();
        else if (key == "tensor-b") o.tensor_b = value.get<std::string>();
        else if (key == "tensor-k") o.tensor_k = value.get<std::string>();
        else if (key == "mode") o.mode = value.get<std::string>();
        else if (key == "out") o.out = value.get<std::string>();
        else if (key == "gap") o.gap = value.get<double>();
        else if (key == "count") o.count = value.get<int>();
        else if (key == "max-side") o.max_side = value.get<double>();
        else if (key == "clock") o.clock = value.get<std::string>();
        else if (key == "rate") o.rate = value.get<double>();
        else if (key == "episodes") o.episodes = value.get<int>();
        else if (key == "head") o.head = value.get<std::string>();
        else if (key == "weights") o.weights = value.get<std::string>();
        else if (key == "fixed-b") o.fixed_b = value.get<int>();
        else if (key == "fixed-psi") o.fixed_psi = value.get<double>();
        else if (key == "b-init") o.b_init = value.get<int>();
        else if (key == "eta") o.eta = value.get<double>();
        else if (key == "rewire") o.rewire = value.get<double>();
        else if (key == "jobs") o.jobs = value.get<int>();
        else if (key == "planners") o.planners = value.get<std::string>();
        else if (key == "svg") o.svg = value.get<std::string>();
        else if (key == "summary") o.summary = value.get<std::string>();
        else throw std::runtime_error("unknown config key: " + key);
    }
}

void applySeedEnv(Options& o) {
    const char* v = std::getenv("LIT_SEED");
    if (v == nullptr || *v == '\0') return;
    o.seed = std::stoull(v);
}

ClockMode parseClock(const std::string& s, ClockMode fallback) {
    if (s.empty()) return fallback;
    if (s == "wall") return ClockMode::Wall;
    if (s == "virtual") return ClockMode::Virtual;
    throw std::runtime_error("unknown clock mode: " + s + " (expected wall or virtual)");
}

Environment buildEnv(const Options& o, std::uint64_t seed) {
    if (o.env_kind == "np") return makeNarrowPassage(o.dim, o.gap, seed);
    if (o.env_kind == "rr") return makeRandomRectangles(o.dim, o.count, o.max_side, seed);
    throw std::runtime_error("unknown environment: " + o.env_kind + " (expected np or rr)");
}

PlannerConfig plannerConfig(const Options& o, ClockMode default_clock) {
    PlannerConfig c;
    c.eta = o.eta;
    c.rewire_factor = o.rewire;
    c.b_init = o.b_init > 0 ? o.b_init : o.fixed_b;
    c.fixed_batch = o.fixed_b;
    c.fixed_psi = o.fixed_psi;
    c.time_budget = o.time;
    c.clock = parseClock(o.clock, default_clock);
    c.clock_units_per_second = o.rate;
    return c;
}

void writeFile(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

int cmdPlan(const Options& o) {
    PlannerConfig cfg = plannerConfig(o, ClockMode::Wall);
    std::unique_ptr<ParameterPolicy> policy;
    if (o.mode == "fixed") {
        cfg.mode = PlanMode::Fixed;
        policy = std::make_unique<FixedPolicy>(o.fixed_b, o.fixed_psi);
    } else if (o.mode == "tensor") {
        cfg.mode = PlanMode::Tensor;
        if (o.tensor_b.empty() || o.tensor_k.empty()) {
            throw std::runtime_error("mode tensor needs --tensor-b and --tensor-k");
        }
        policy = std::make_unique<TensorPolicy>(loadTensor(o.tensor_b), loadTensor(o.tensor_k));
    } else if (o.mode == "online") {
        cfg.mode = PlanMode::Online;
        if (o.weights.empty()) throw std::runtime_error("mode online needs --weights");
        policy = std::make_unique<ActorPolicy>(loadWeights(o.weights));
    } else {
        throw std::runtime_error("unknown mode: " + o.mode + " (expected fixed, tensor, online)");
    }

    const Environment env = buildEnv(o, o.seed);
    RngStream rng(o.seed);
    const PlanResult result = plan(env, cfg, rng, *policy);
    const std::string json = planResultToJson(result, cfg, o.seed);
    if (o.out.empty()) {
        std::cout << json << "\n";
    } else {
        writeFile(o.out, json + "\n");
        if (result.solved()) {
            std::cout << "wrote " << o.out << " (" << result.solutions.size()
                      << " solutions, best cost " << result.best().cost << ")\n";
        } else {
            std::cout << "wrote " << o.out << " (no solution)\n";
        }
    }
    return result.solved() ? 0 : 2;
}

int cmdTrain(const Options& o) {
    TrainingOptions topt;
    topt.seed = o.seed;
    topt.trainer.episodes = o.episodes;
    topt.planner = plannerConfig(o, ClockMode::Virtual);
    if (o.head == "b") {
        topt.train_k = false;
    } else if (o.head == "k") {
        topt.train_b = false;
    } else if (o.head != "both") {
        throw std::runtime_error("unknown head: " + o.head + " (expected b, k, both)");
    }

    const Options env_opts = o;
    EnvFactory factory = [env_opts](int /*episode*/, std::uint64_t episode_seed) {
        return buildEnv(env_opts, episode_seed);
    };

    const TrainingResult result = train(factory, topt);
    const std::string out = o.out.empty() ? "weights.json" : o.out;
    saveWeights(result.weights, out);

    const std::filesystem::path base(out);
    const std::string stem = (base.parent_path() / base.stem()).string();
    if (topt.train_b) writeFile(stem + ".train_b.csv", result.log_b_csv);
    if (topt.train_k) writeFile(stem + ".train_k.csv", result.log_k_csv);

    std::cout << "trained " << result.episodes_run << " episodes (" << result.episodes_failed
              << " failed), weights in " << out << "\n";
    return 0;
}

int cmdBake(const Options& o) {
    if (o.weights.empty()) throw std::runtime_error("bake needs --weights");
    const WeightsBundle w = loadWeights(o.weights);
    const std::string out_b = o.tensor_b.empty() ? "tensor_b.json" : o.tensor_b;
    const std::string out_k = o.tensor_k.empty() ? "tensor_k.json" : o.tensor_k;
    saveTensor(bake(w.b.actor, w.fuzzy, w.b.cons), out_b);
    saveTensor(bake(w.k.actor, w.fuzzy, w.k.cons), out_k);
    std::cout << "baked " << out_b << " and " << out_k << "\n";
    return 0;
}

int cmdBench(const Options& o, bool mode_given) {
    std::string list = o.planners;
    if (list.empty()) {
        if (mode_given) {
            if (o.mode == "fixed") list = "lit-fixed";
            else if (o.mode == "tensor") list = "lit";
            else if (o.mode == "online") list = "lit-online";
            else throw std::runtime_error("unknown mode: " + o.mode);
        } else if (!o.tensor_b.empty() && !o.tensor_k.empty()) {
            list = "lit,lit-fixed";
        } else {
            list = "lit-fixed";
        }
    }

    std::optional<PolicyTensor> tb, tk;
    std::optional<WeightsBundle> wb;
    std::vector<NamedPlanner> planners;
    std::string item;
    for (std::size_t i = 0; i <= list.size(); ++i) {
        if (i < list.size() && list[i] != ',') {
            item += list[i];
            continue;
        }
        if (item.empty()) continue;
        if (item == "lit") {
            if (o.tensor_b.empty() || o.tensor_k.empty()) {
                throw std::runtime_error("planner lit needs --tensor-b and --tensor-k");
            }
            if (!tb) tb = loadTensor(o.tensor_b);
            if (!tk) tk = loadTensor(o.tensor_k);
            planners.push_back({"lit", [tb, tk]() -> std::unique_ptr<ParameterPolicy> {
                                    return std::make_unique<TensorPolicy>(*tb, *tk);
                                }});
        } else if (item == "lit-fixed") {
            const int fb = o.fixed_b;
            const double fp = o.fixed_psi;
            planners.push_back({"lit-fixed", [fb, fp]() -> std::unique_ptr<ParameterPolicy> {
                                    return std::make_unique<FixedPolicy>(fb, fp);
                                }});
        } else if (item == "lit-online") {
            if (o.weights.empty()) throw std::runtime_error("planner lit-online needs --weights");
            if (!wb) wb = loadWeights(o.weights);
            planners.push_back({"lit-online", [wb]() -> std::unique_ptr<ParameterPolicy> {
                                    return std::make_unique<ActorPolicy>(*wb);
                                }});
        } else {
            throw std::runtime_error("unknown planner: " + item);
        }
        item.clear();
    }

    BenchOptions bopt;
    bopt.planner = plannerConfig(o, ClockMode::Virtual);
    bopt.planner.mode = tb ? PlanMode::Tensor : PlanMode::Fixed;
    bopt.base_seed = o.seed;
    bopt.runs = o.runs;
    bopt.jobs = o.jobs;

    const Environment env = buildEnv(o, o.seed);
    const std::vector<TrialResult> results = runBench(env, planners, bopt);
    const std::string csv = benchCsv(results);
    if (o.out.empty()) {
        std::cout << csv;
    } else {
        writeFile(o.out, csv);
        std::cout << "wrote " << o.out << " (" << results.size() << " trials)\n";
    }
    if (!o.summary.empty()) writeFile(o.summary, summaryJson(summarize(results)));
    if (!o.svg.empty()) writeFile(o.svg, benchSvg(results, o.time));
    return 0;
}

void addCommonFlags(CLI::App* cmd, Options& o) {
    cmd->add_option("--env", o.env_kind, "world kind: np or rr");
    cmd->add_option("--dim", o.dim, "state-space dimension");
    cmd->add_option("--time", o.time, "time budget in seconds");
    cmd->add_option("--seed", o.seed, "base random seed (LIT_SEED overrides)");
    cmd->add_option("--config", o.config, "JSON file overriding defaults");
    cmd->add_option("--gap", o.gap, "np: passage gap width");
    cmd->add_option("--count", o.count, "rr: obstacle count");
    cmd->add_option("--max-side", o.max_side, "rr: maximum obstacle side");
    cmd->add_option("--rate", o.rate, "virtual clock work units per second");
    cmd->add_option("--eta", o.eta, "connectivity scale factor");
    cmd->add_option("--rewire", o.rewire, "rewire factor (slightly above 1)");
    cmd->add_option("--b-init", o.b_init, "first batch size (default: --fixed-b)");
    cmd->add_option("--fixed-b", o.fixed_b, "fixed-mode batch size");
    cmd->add_option("--fixed-psi", o.fixed_psi, "fixed-mode neighbor factor");
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    try {
        for (int i = 1; i < argc; ++i) {
            const std::string arg = argv[i];
            if (arg == "--config" && i + 1 < argc) {
                applyConfigFile(o, argv[i + 1]);
            } else if (arg.rfind("--config=", 0) == 0) {
                applyConfigFile(o, arg.substr(9));
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "lit: " << e.what() << "\n";
        return 1;
    }

    CLI::App app{"anytime batch-informed planner with learned runtime parameters"};
    app.require_subcommand(1);

    CLI::App* plan_cmd = app.add_subcommand("plan", "solve one planning query");
    addCommonFlags(plan_cmd, o);
    plan_cmd->add_option("--mode", o.mode, "fixed, tensor, or online");
    plan_cmd->add_option("--tensor-b", o.tensor_b, "baked batch-size tensor (input)");
    plan_cmd->add_option("--tensor-k", o.tensor_k, "baked neighbor-factor tensor (input)");
    plan_cmd->add_option("--weights", o.weights, "trained weights bundle (input)");
    plan_cmd->add_option("--out", o.out, "result JSON path (default stdout)");
    plan_cmd->add_option("--clock", o.clock, "wall or virtual (default wall)");

    CLI::App* train_cmd = app.add_subcommand("train", "train the parameter policies");
    addCommonFlags(train_cmd, o);
    train_cmd->add_option("--episodes", o.episodes, "training episodes");
    train_cmd->add_option("--head", o.head, "which policy to train: b, k, both");
    train_cmd->add_option("--out", o.out, "weights output path (default weights.json)");

    CLI::App* bake_cmd = app.add_subcommand("bake", "precompute policy tensors from weights");
    bake_cmd->add_option("--config", o.config, "JSON file overriding defaults");
    bake_cmd->add_option("--weights", o.weights, "trained weights bundle (input)");
    bake_cmd->add_option("--tensor-b", o.tensor_b, "batch-size tensor path (output)");
    bake_cmd->add_option("--tensor-k", o.tensor_k, "neighbor-factor tensor path (output)");

    CLI::App* bench_cmd = app.add_subcommand("bench", "run repeated seeded trials");
    addCommonFlags(bench_cmd, o);
    bench_cmd->add_option("--runs", o.runs, "trials per planner");
    bench_cmd->add_option("--jobs", o.jobs, "worker threads");
    bench_cmd->add_option("--planners", o.planners,
                          "comma list from: lit, lit-fixed, lit-online");
    CLI::Option* mode_opt =
        bench_cmd->add_option("--mode", o.mode, "shorthand for a single-planner list");
    bench_cmd->add_option("--tensor-b", o.tensor_b, "baked batch-size tensor (input)");
    bench_cmd->add_option("--tensor-k", o.tensor_k, "baked neighbor-factor tensor (input)");
    bench_cmd->add_option("--weights", o.weights, "trained weights bundle (input)");
    bench_cmd->add_option("--out", o.out, "CSV path (default stdout)");
    bench_cmd->add_option("--svg", o.svg, "cost-vs-time plot path");
    bench_cmd->add_option("--summary", o.summary, "summary JSON path");
    bench_cmd->add_option("--clock", o.clock, "wall or virtual (default virtual)");

    CLI11_PARSE(app, argc, argv);

    try {
        applySeedEnv(o);
        if (plan_cmd->parsed()) return cmdPlan(o);
        if (train_cmd->parsed()) return cmdTrain(o);
        if (bake_cmd->parsed()) return cmdBake(o);
        if (bench_cmd->parsed()) return cmdBench(o, mode_opt->count() > 0);
    } catch (const std::exception& e) {
        std::cerr << "lit: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
