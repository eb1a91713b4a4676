#include "circlepack/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "circlepack/rng.hpp"

namespace circlepack {

std::vector<std::uint64_t> generate_seeds(std::uint64_t master_seed, int n) {
    if (n < 1) throw std::invalid_argument("generate_seeds: n must be >= 1");
    std::vector<std::uint64_t> seeds(static_cast<std::size_t>(n));
    std::uint64_t state = master_seed;
    for (auto& s : seeds) s = splitmix64_next(state);
    return seeds;
}

StatsSummary summarize(std::span<const double> values, double optimum, double tol) {
    if (values.empty()) throw std::invalid_argument("summarize: empty value list");
    if (tol < 0.0) throw std::invalid_argument("summarize: tol must be >= 0");

    StatsSummary s;
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    s.worst = sorted.front();
    s.best = sorted.back();
    s.median = (n % 2 == 1) ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);

    double sum = 0.0;
    for (double v : sorted) sum += v;
    s.mean = sum / static_cast<double>(n);

    if (n > 1) {
        double sq = 0.0;
        for (double v : sorted) sq += (v - s.mean) * (v - s.mean);
        s.std_dev = std::sqrt(sq / static_cast<double>(n - 1));
    }

    for (double v : values)
        if (v >= optimum - tol) ++s.efficacy;
    return s;
}

ExperimentTable run_experiment(const ExperimentSpec& spec, const Objective& objective,
                               double optimum, bool parallel) {
    if (spec.combos.empty()) throw std::invalid_argument("run_experiment: no combos");
    if (spec.algorithms.empty()) throw std::invalid_argument("run_experiment: no algorithms");

    ExperimentTable table;
    table.seeds = generate_seeds(spec.master_seed, spec.n_seeds);
    table.optimum = optimum;
    table.efficacy_tol = spec.efficacy_tol;

    const int n_cells = static_cast<int>(spec.combos.size() * spec.algorithms.size());
    const int n_seeds = spec.n_seeds;
    table.cells.resize(static_cast<std::size_t>(n_cells));
    for (std::size_t ci = 0; ci < spec.combos.size(); ++ci) {
        for (std::size_t ai = 0; ai < spec.algorithms.size(); ++ai) {
            CellResult& cell = table.cells[ci * spec.algorithms.size() + ai];
            cell.algorithm = spec.algorithms[ai];
            cell.combo = spec.combos[ci];
            cell.best_values.resize(static_cast<std::size_t>(n_seeds));
        }
    }

    // Flattened task grid; every (cell, seed) run is independent. Results
    // land in preassigned slots, so scheduling cannot change the table.
#pragma omp parallel for collapse(2) schedule(dynamic) if (parallel)
    for (int cell_idx = 0; cell_idx < n_cells; ++cell_idx) {
        for (int seed_idx = 0; seed_idx < n_seeds; ++seed_idx) {
            CellResult& cell = table.cells[static_cast<std::size_t>(cell_idx)];
            RunConfig config;
            config.algorithm = cell.algorithm;
            config.population = cell.combo.population;
            config.max_iterations = cell.combo.max_iterations;
            config.seed = table.seeds[static_cast<std::size_t>(seed_idx)];
            const RunResult run = run_optimizer(objective, config);
            cell.best_values[static_cast<std::size_t>(seed_idx)] = run.best_fitness;
        }
    }

    for (CellResult& cell : table.cells)
        cell.stats = summarize(cell.best_values, optimum, spec.efficacy_tol);
    return table;
}

std::string format_sig6(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 6);
    return std::string(buf, res.ptr);
}

std::string results_to_csv(const ExperimentTable& table) {
    std::string out = "algorithm,iterations,particles,best,worst,mean,median,std,efficacy\n";
    for (const CellResult& cell : table.cells) {
        out += algorithm_name(cell.algorithm);
        out += ',';
        out += std::to_string(cell.combo.max_iterations);
        out += ',';
        out += std::to_string(cell.combo.population);
        out += ',';
        out += format_sig6(cell.stats.best);
        out += ',';
        out += format_sig6(cell.stats.worst);
        out += ',';
        out += format_sig6(cell.stats.mean);
        out += ',';
        out += format_sig6(cell.stats.median);
        out += ',';
        out += format_sig6(cell.stats.std_dev);
        out += ',';
        out += std::to_string(cell.stats.efficacy);
        out += '\n';
    }
    return out;
}

std::vector<ComboRanking> rank_algorithms(const ExperimentTable& table) {
    if (table.cells.empty()) throw std::invalid_argument("rank_algorithms: empty table");

    // Group cells per combo, preserving combo order of first appearance.
    std::vector<std::pair<ComboSpec, std::vector<const CellResult*>>> groups;
    for (const CellResult& cell : table.cells) {
        auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) {
            return g.first.max_iterations == cell.combo.max_iterations &&
                   g.first.population == cell.combo.population;
        });
        if (it == groups.end()) {
            groups.push_back({cell.combo, {}});
            it = groups.end() - 1;
        }
        it->second.push_back(&cell);
    }

    std::vector<ComboRanking> rankings;
    for (auto& [combo, cells] : groups) {
        std::sort(cells.begin(), cells.end(), [](const CellResult* a, const CellResult* b) {
            if (a->stats.mean != b->stats.mean) return a->stats.mean > b->stats.mean;
            if (a->stats.std_dev != b->stats.std_dev) return a->stats.std_dev < b->stats.std_dev;
            return std::string_view(algorithm_name(a->algorithm)) <
                   std::string_view(algorithm_name(b->algorithm));
        });
        ComboRanking r;
        r.combo = combo;
        r.best = cells.front()->algorithm;
        r.second = cells.size() > 1 ? cells[1]->algorithm : cells.front()->algorithm;
        r.worst = cells.back()->algorithm;
        rankings.push_back(r);
    }
    return rankings;
}

}  // namespace circlepack
