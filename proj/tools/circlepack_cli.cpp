// Command-line front door: solve a single seeded run, run the full
// experiment matrix, certify an instance with the brute-force oracle, or
// render an instance to SVG.

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "circlepack/bench.hpp"
#include "circlepack/instance_io.hpp"
#include "circlepack/oracle.hpp"
#include "circlepack/run.hpp"
#include "circlepack/svg.hpp"

namespace {

using namespace circlepack;

// Atomic write: temp file in the target directory, then rename.
void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open output file: " + tmp.string());
        out << content;
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, target);
}

Algorithm parse_algorithm(const std::string& name) {
    const auto algo = algorithm_from_name(name);
    if (!algo) throw std::runtime_error("unknown algorithm: " + name +
                                        " (expected PSO|PSOd|CPSO|GWO|RWGWO|FA|ApFA|BA)");
    return *algo;
}

int cmd_solve(const std::string& instance, const std::string& algo_name, int pop, int iters,
              std::uint64_t seed, const std::string& trace_out) {
    const PackingInstance inst = load_instance(instance);
    RunConfig config;
    config.algorithm = parse_algorithm(algo_name);
    config.population = pop;
    config.max_iterations = iters;
    config.seed = seed;

    std::printf("config: command=solve algo=%s instance=%s pop=%d iters=%d seed=%" PRIu64 "\n",
                algorithm_name(config.algorithm), instance.c_str(), pop, iters, seed);

    const Objective objective = make_packing_objective(inst);
    const RunResult result = run_optimizer(objective, config);

    std::printf("result: center=(%.6f, %.6f) radius=%.6f\n", result.best_position[0],
                result.best_position[1], result.best_fitness);
    std::printf("exact: cx=%.17g cy=%.17g radius=%.17g evals=%" PRId64 " wall=%.3fs\n",
                result.best_position[0], result.best_position[1], result.best_fitness,
                result.evaluations, result.wall_time);

    if (!trace_out.empty()) {
        std::string csv = "iteration,best_so_far\n";
        for (std::size_t t = 0; t < result.trace.size(); ++t)
            csv += std::to_string(t) + "," + format_sig6(result.trace[t]) + "\n";
        write_file_atomic(trace_out, csv);
        std::printf("trace written to %s\n", trace_out.c_str());
    }
    return 0;
}

int cmd_bench(const std::string& instance, std::uint64_t master_seed, int n_seeds,
              const std::vector<std::string>& algo_names, int only_iters, int only_pop,
              const std::string& out_path, bool serial) {
    const PackingInstance inst = load_instance(instance);
    ExperimentSpec spec;
    spec.master_seed = master_seed;
    spec.n_seeds = n_seeds;
    if (!algo_names.empty()) {
        spec.algorithms.clear();
        for (const auto& name : algo_names) spec.algorithms.push_back(parse_algorithm(name));
    }
    if (only_iters > 0 && only_pop > 0) spec.combos = {{only_iters, only_pop}};

    std::printf("config: command=bench instance=%s master_seed=%" PRIu64
                " seeds=%d combos=%zu algorithms=%zu\n",
                instance.c_str(), master_seed, n_seeds, spec.combos.size(),
                spec.algorithms.size());

    const OracleResult oracle = solve_oracle(inst);
    std::printf("oracle: optimum radius=%.6f at (%.6f, %.6f), efficacy tol=%g\n",
                oracle.best_radius, oracle.best_center.x, oracle.best_center.y,
                spec.efficacy_tol);

    const Objective objective = make_packing_objective(inst);
    const ExperimentTable table = run_experiment(spec, objective, oracle.best_radius, !serial);

    std::printf("%-6s %5s %5s %9s %9s %9s %9s %10s %9s\n", "algo", "iters", "pop", "best",
                "worst", "mean", "median", "std", "efficacy");
    for (const CellResult& cell : table.cells)
        std::printf("%-6s %5d %5d %9.4f %9.4f %9.4f %9.4f %10.6f %9d\n",
                    algorithm_name(cell.algorithm), cell.combo.max_iterations,
                    cell.combo.population, cell.stats.best, cell.stats.worst, cell.stats.mean,
                    cell.stats.median, cell.stats.std_dev, cell.stats.efficacy);

    for (const ComboRanking& r : rank_algorithms(table))
        std::printf("ranking: iters=%d pop=%d best=%s second=%s worst=%s\n",
                    r.combo.max_iterations, r.combo.population, algorithm_name(r.best),
                    algorithm_name(r.second), algorithm_name(r.worst));

    if (!out_path.empty()) {
        write_file_atomic(out_path, results_to_csv(table));
        std::printf("results written to %s\n", out_path.c_str());
    }
    return 0;
}

int cmd_oracle(const std::string& instance, int resolution, double tol, double merge_radius) {
    const PackingInstance inst = load_instance(instance);
    std::printf("config: command=oracle instance=%s resolution=%d tol=%g merge_radius=%g\n",
                instance.c_str(), resolution, tol, merge_radius);
    const OracleResult result = solve_oracle(inst, resolution, tol, merge_radius);
    const bool certified = verify_packing(inst, result.best_center, result.best_radius, 1e-9);
    std::printf("best: center=(%.17g, %.17g) radius=%.17g certified=%s\n", result.best_center.x,
                result.best_center.y, result.best_radius, certified ? "yes" : "no");
    for (std::size_t i = 0; i < result.local_optima.size(); ++i)
        std::printf("local[%zu]: center=(%.6f, %.6f) radius=%.6f\n", i,
                    result.local_optima[i].center.x, result.local_optima[i].center.y,
                    result.local_optima[i].radius);
    return 0;
}

int cmd_render(const std::string& instance, const std::string& out_path, double cx, double cy,
               double r, bool with_solution) {
    const PackingInstance inst = load_instance(instance);
    std::printf("config: command=render instance=%s out=%s\n", instance.c_str(),
                out_path.c_str());
    std::optional<std::pair<Point2, double>> solution;
    if (with_solution) solution = {{cx, cy}, r};
    write_file_atomic(out_path, render_svg(inst, solution));
    std::printf("svg written to %s\n", out_path.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circle packing metaheuristics: solve, bench, oracle, render"};
    app.require_subcommand(1);

    std::string instance = "table9";
    std::string algo = "PSO";
    int pop = 50;
    int iters = 100;
    std::uint64_t seed = 0;
    std::string trace_out;
    auto* solve = app.add_subcommand("solve", "run one seeded optimization");
    solve->add_option("--instance", instance, "instance JSON path or 'table9'");
    solve->add_option("--algo", algo, "PSO|PSOd|CPSO|GWO|RWGWO|FA|ApFA|BA");
    solve->add_option("--pop", pop, "population size");
    solve->add_option("--iters", iters, "iteration count");
    solve->add_option("--seed", seed, "run seed");
    solve->add_option("--trace-out", trace_out, "write per-iteration best-so-far CSV here");

    std::string bench_instance = "table9";
    std::uint64_t master_seed = 0;
    int n_seeds = 100;
    std::vector<std::string> bench_algos;
    int bench_iters = 0;
    int bench_pop = 0;
    std::string bench_out;
    bool bench_serial = false;
    auto* bench = app.add_subcommand("bench", "run the experiment matrix over shared seeds");
    bench->add_option("--instance", bench_instance, "instance JSON path or 'table9'");
    bench->add_option("--master-seed", master_seed, "master seed for the shared seed list");
    bench->add_option("--seeds", n_seeds, "number of seeds per cell");
    bench->add_option("--algo", bench_algos, "restrict to these algorithms (repeatable)");
    bench->add_option("--iters", bench_iters, "restrict to one combo: iterations");
    bench->add_option("--pop", bench_pop, "restrict to one combo: particles");
    bench->add_option("--out", bench_out, "write results CSV here");
    bench->add_flag("--serial", bench_serial, "disable per-seed parallelism");

    std::string oracle_instance = "table9";
    int resolution = 2001;
    double tol = 1e-7;
    double merge_radius = 1.0;
    auto* oracle = app.add_subcommand("oracle", "certify the optimum by brute force");
    oracle->add_option("--instance", oracle_instance, "instance JSON path or 'table9'");
    oracle->add_option("--resolution", resolution, "grid points per axis");
    oracle->add_option("--tol", tol, "refinement stencil tolerance");
    oracle->add_option("--merge-radius", merge_radius, "cluster radius for local optima");

    std::string render_instance = "table9";
    std::string render_out = "instance.svg";
    double cx = 0.0;
    double cy = 0.0;
    double r = 0.0;
    auto* render = app.add_subcommand("render", "emit an SVG drawing of an instance");
    render->add_option("--instance", render_instance, "instance JSON path or 'table9'");
    render->add_option("--out", render_out, "output SVG path");
    auto* opt_cx = render->add_option("--cx", cx, "solution center x");
    auto* opt_cy = render->add_option("--cy", cy, "solution center y");
    auto* opt_r = render->add_option("--r", r, "solution radius");
    opt_cx->needs(opt_cy, opt_r);
    opt_cy->needs(opt_cx, opt_r);
    opt_r->needs(opt_cx, opt_cy);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(instance, algo, pop, iters, seed, trace_out);
        if (bench->parsed())
            return cmd_bench(bench_instance, master_seed, n_seeds, bench_algos, bench_iters,
                             bench_pop, bench_out, bench_serial);
        if (oracle->parsed()) return cmd_oracle(oracle_instance, resolution, tol, merge_radius);
        if (render->parsed())
            return cmd_render(render_instance, render_out, cx, cy, r, opt_r->count() > 0);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
