#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include "swarmpath/env_io.hpp"
#include "swarmpath/oracle.hpp"
#include "swarmpath/planner.hpp"
#include "swarmpath/report.hpp"

namespace {

using namespace swarmpath;

struct CommonOptions {
    std::string env_path;
    int bundled_id = 0;
    std::uint64_t seed = 0;
    PsoConfig pso;
    int waypoints = 100;
    bool strict_segments = true;
    std::string penalty_mode = "soft";
    bool compare_oracle = false;
    std::string out_csv;
    std::string out_svg;
    std::string out_json;
};

void add_common_options(CLI::App& cmd, CommonOptions& opt) {
    auto* env = cmd.add_option("--env", opt.env_path, "Environment JSON file");
    auto* bundled =
        cmd.add_option("--bundled", opt.bundled_id, "Bundled environment id (1-4)")
            ->check(CLI::Range(1, 4));
    env->excludes(bundled);
    bundled->excludes(env);
    cmd.add_option("--seed", opt.seed, "Base RNG seed")->capture_default_str();
    cmd.add_option("--particles", opt.pso.swarm_size, "Swarm size N")
        ->capture_default_str();
    cmd.add_option("--iterations", opt.pso.max_iterations, "Max PSO iterations")
        ->capture_default_str();
    cmd.add_option("--waypoints", opt.waypoints, "Number of grid waypoints n")
        ->capture_default_str();
    cmd.add_option("--omega-max", opt.pso.omega_max, "Initial inertia weight")
        ->capture_default_str();
    cmd.add_option("--omega-min", opt.pso.omega_min, "Final inertia weight")
        ->capture_default_str();
    cmd.add_option("--c1", opt.pso.c1, "Individual learning rate")->capture_default_str();
    cmd.add_option("--c2", opt.pso.c2, "Group learning rate")->capture_default_str();
    cmd.add_option("--vmax", opt.pso.v_max, "Velocity component cap")
        ->capture_default_str();
    cmd.add_option("--strict-segments", opt.strict_segments,
                   "Also keep connecting segments clear of obstacles")
        ->capture_default_str();
    cmd.add_option("--penalty-mode", opt.penalty_mode, "Invalid-point handling")
        ->check(CLI::IsMember({"soft", "hard"}))
        ->capture_default_str();
    cmd.add_flag("--compare-oracle", opt.compare_oracle,
                 "Also compute the visibility-graph shortest path");
    cmd.add_option("--out", opt.out_csv, "Write the path as CSV");
    cmd.add_option("--svg", opt.out_svg, "Render the scene as SVG");
    cmd.add_option("--json", opt.out_json, "Write the report as JSON");
}

Workspace load_from_options(const CommonOptions& opt, std::string& label) {
    if (opt.bundled_id > 0) {
        label = "bundled:" + std::to_string(opt.bundled_id);
        return bundled_environment(opt.bundled_id);
    }
    if (opt.env_path.empty())
        throw std::runtime_error("one of --env or --bundled is required");
    label = opt.env_path;
    std::ifstream in(opt.env_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open environment file: " + opt.env_path);
    std::ostringstream text;
    text << in.rdbuf();
    return load_environment(text.str());
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

struct RunOutcome {
    RunReport report;
    PlanResult result;
};

RunOutcome execute_run(const Workspace& ws, const CommonOptions& opt, std::uint64_t seed,
                       const std::optional<OraclePath>& oracle) {
    PsoConfig cfg = opt.pso;
    cfg.rng_seed = seed;
    const PenaltyMode mode =
        opt.penalty_mode == "hard" ? PenaltyMode::Hard : PenaltyMode::Soft;

    const auto t0 = std::chrono::steady_clock::now();
    PlanResult result = plan(ws, cfg, opt.waypoints, opt.strict_segments, mode);
    const auto t1 = std::chrono::steady_clock::now();

    RunReport report;
    report.seed = seed;
    report.pso = cfg;
    report.waypoints = opt.waypoints;
    report.strict_segments = opt.strict_segments;
    report.penalty_mode = mode;
    report.feasible = result.feasible;
    report.path_length = result.total_length;
    report.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    report.iterations_per_waypoint = result.iterations_per_waypoint;
    if (oracle) {
        report.oracle_length = oracle->length;
        report.length_ratio = result.total_length / oracle->length;
    }
    return {std::move(report), std::move(result)};
}

void print_report(const RunReport& report) {
    std::printf("environment:  %s\n", report.environment.c_str());
    std::printf("seed:         %llu\n", static_cast<unsigned long long>(report.seed));
    std::printf("pso:          N=%d it_max=%d omega=%.3g..%.3g c1=%.3g c2=%.3g vmax=%.3g\n",
                report.pso.swarm_size, report.pso.max_iterations, report.pso.omega_max,
                report.pso.omega_min, report.pso.c1, report.pso.c2, report.pso.v_max);
    std::printf("waypoints:    %d (strict_segments=%s, penalty=%s)\n", report.waypoints,
                report.strict_segments ? "true" : "false",
                report.penalty_mode == PenaltyMode::Soft ? "soft" : "hard");
    std::printf("feasible:     %s\n", report.feasible ? "yes" : "no");
    std::printf("path length:  %.6f\n", report.path_length);
    if (report.oracle_length) {
        std::printf("oracle:       %.6f (ratio %.4f)\n", *report.oracle_length,
                    *report.length_ratio);
    }
    const auto& iters = report.iterations_per_waypoint;
    if (!iters.empty()) {
        const auto [lo, hi] = std::minmax_element(iters.begin(), iters.end());
        const double mean =
            std::accumulate(iters.begin(), iters.end(), 0.0) / iters.size();
        std::printf("pso iters:    min=%d mean=%.1f max=%d per waypoint\n", *lo, mean, *hi);
    }
    std::printf("wall ms:      %.2f\n", report.wall_ms);
}

int run_plan(const CommonOptions& opt) {
    std::string label;
    const Workspace ws = load_from_options(opt, label);
    std::optional<OraclePath> oracle;
    if (opt.compare_oracle) oracle = shortest_path(ws);

    RunOutcome outcome = execute_run(ws, opt, opt.seed, oracle);
    outcome.report.environment = label;
    print_report(outcome.report);

    if (!opt.out_csv.empty()) write_file(opt.out_csv, path_to_csv(outcome.result.path));
    if (!opt.out_svg.empty()) {
        const std::vector<Point2>* oracle_points = oracle ? &oracle->points : nullptr;
        write_file(opt.out_svg, render_svg(ws, &outcome.result.path, oracle_points));
    }
    if (!opt.out_json.empty()) write_file(opt.out_json, report_to_json(outcome.report));
    return outcome.report.feasible ? 0 : 2;
}

int run_sweep(const CommonOptions& opt, int seeds) {
    std::string label;
    const Workspace ws = load_from_options(opt, label);
    std::optional<OraclePath> oracle;
    if (opt.compare_oracle) oracle = shortest_path(ws);

    std::vector<RunReport> reports(seeds);
    // Seeded runs are independent; reports land in seed order regardless of
    // scheduling.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < seeds; ++i) {
        reports[i] =
            execute_run(ws, opt, opt.seed + static_cast<std::uint64_t>(i), oracle).report;
        reports[i].environment = label;
    }

    const SweepReport sweep = aggregate_sweep(std::move(reports));
    std::printf("environment:  %s\n", label.c_str());
    std::printf("seeds:        %d (base %llu)\n", seeds,
                static_cast<unsigned long long>(opt.seed));
    std::printf("success rate: %.3f\n", sweep.success_rate);
    std::printf("length:       min=%.6f mean=%.6f max=%.6f\n", sweep.length_min,
                sweep.length_mean, sweep.length_max);
    if (opt.compare_oracle && oracle)
        std::printf("oracle:       %.6f\n", oracle->length);
    std::printf("mean wall ms: %.2f\n", sweep.mean_wall_ms);

    if (!opt.out_json.empty()) write_file(opt.out_json, sweep_to_json(sweep));
    const bool all_feasible = sweep.success_rate == 1.0;
    return all_feasible ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"PSO grid-line path planner for circular robots among convex obstacles"};
    app.require_subcommand(1);

    CommonOptions plan_opt;
    CLI::App* plan_cmd = app.add_subcommand("plan", "Plan a path on one seed");
    add_common_options(*plan_cmd, plan_opt);

    CommonOptions sweep_opt;
    int sweep_seeds = 1;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "Plan across consecutive seeds and aggregate");
    add_common_options(*sweep_cmd, sweep_opt);
    sweep_cmd->add_option("--seeds", sweep_seeds, "Number of consecutive seeds")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (plan_cmd->parsed()) return run_plan(plan_opt);
        return run_sweep(sweep_opt, sweep_seeds);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
