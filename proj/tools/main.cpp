// nodeshift CLI: solve one instance, run benchmark campaigns, tune GA
// parameters, print NN tours, trace the node-shift decoder and export MTZ
// models for external MIP solvers.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nodeshift/bench.hpp"
#include "nodeshift/exact.hpp"
#include "nodeshift/ga.hpp"
#include "nodeshift/heuristics.hpp"
#include "nodeshift/tsplib.hpp"

using namespace nodeshift;

namespace {

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> values;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) values.push_back(std::stoi(item));
    }
    return values;
}

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> values;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) values.push_back(std::stod(item));
    }
    return values;
}

Encoding parse_encoding(const std::string& name) {
    if (name == "nse") return Encoding::nse;
    if (name == "dc") return Encoding::dc;
    if (name == "pr") return Encoding::pr;
    throw CLI::ValidationError("--encoding must be nse, pr or dc");
}

Seeding parse_seeding(const std::string& name) {
    if (name == "rand") return Seeding::rand;
    if (name == "nn") return Seeding::nn;
    throw CLI::ValidationError("--seeding must be rand or nn");
}

struct GaFlags {
    int population = 100;
    int iterations = 500;
    double mutation = 0.03;
    int elitism = 1;
    int tournament = 2;
    std::uint64_t seed = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--population", population, "population size");
        cmd->add_option("--iterations", iterations, "number of generations");
        cmd->add_option("--mutation", mutation, "per-gene mutation chance");
        cmd->add_option("--elitism", elitism, "individuals carried unchanged");
        cmd->add_option("--tournament", tournament, "tournament size");
        cmd->add_option("--seed", seed, "rng seed");
    }

    GaConfig config(Seeding seeding) const {
        GaConfig c;
        c.population_size = population;
        c.iterations = iterations;
        c.mutation_chance = mutation;
        c.elitism_count = elitism;
        c.tournament_size = tournament;
        c.seeding = seeding;
        c.rng_seed = seed;
        return c;
    }
};

int cmd_solve(const std::string& path, const std::string& encoding_name,
              const std::string& seeding_name, const GaFlags& flags, int dc_guide_length) {
    const Variant variant{parse_encoding(encoding_name), parse_seeding(seeding_name)};
    const TspInstance inst = read_tsplib_file(path, &std::cerr);
    const CostMatrix matrix = build_cost_matrix(inst);
    const EncodingAdapter adapter = make_variant_adapter(variant, matrix, dc_guide_length);
    const GaConfig config = flags.config(variant.seeding);

    const RunRecord record = evolve(matrix, adapter, config);
    std::cout << "instance : " << inst.name << " (n=" << inst.dimension << ")\n";
    std::cout << "variant  : " << variant_name(variant) << "\n";
    std::cout << "config   : population=" << config.population_size
              << " iterations=" << config.iterations
              << " mutation=" << config.mutation_chance
              << " elitism=" << config.elitism_count
              << " tournament=" << config.tournament_size << " seed=" << config.rng_seed
              << "\n";
    std::cout << "best cost: " << record.final_best_cost << "\n";
    std::cout << "best tour: " << format_tour(record.final_best_tour) << "\n";
    std::cout << "wall time: " << record.wall_clock_ms << " ms\n";
    return 0;
}

int cmd_bench(const std::string& config_path, const std::string& output_dir_flag) {
    Campaign campaign = load_campaign_file(config_path);
    if (!output_dir_flag.empty()) {
        campaign.output_dir = output_dir_flag;
    } else if (campaign.output_dir.empty()) {
        if (const char* env = std::getenv("NODESHIFT_OUT_DIR")) campaign.output_dir = env;
    }

    const CampaignResult result = run_campaign(campaign);
    int failed = 0;
    for (const auto& run : result.runs) {
        if (run.failed) {
            ++failed;
            std::cerr << "run failed: " << run.instance << " "
                      << variant_name(run.variant) << " #" << run.run_index << ": "
                      << run.failure << "\n";
        }
    }

    std::cout << "instance,variant,best,mean,mean_ms\n";
    for (const auto& row : result.summary) {
        std::cout << row.instance << "," << row.variant << "," << row.best_cost << ","
                  << row.mean_cost << "," << row.mean_wall_ms << "\n";
    }
    std::cout << "wrote "
              << (campaign.output_dir.empty() ? std::string(".") : campaign.output_dir)
              << "/{runs,summary,runtime}.csv and per-instance SVG plots\n";
    return failed == 0 ? 0 : 1;
}

int cmd_tune(const std::string& path, const std::string& encoding_name,
             const std::string& seeding_name, const std::string& grid_population,
             const std::string& grid_iterations, const std::string& grid_mutation,
             int dc_guide_length) {
    const Variant variant{parse_encoding(encoding_name), parse_seeding(seeding_name)};
    const CostMatrix matrix = build_cost_matrix(read_tsplib_file(path, &std::cerr));

    ParameterGrid grid;
    if (!grid_population.empty()) grid.populations = parse_int_list(grid_population);
    if (!grid_iterations.empty()) grid.iterations = parse_int_list(grid_iterations);
    if (!grid_mutation.empty()) grid.mutation_chances = parse_double_list(grid_mutation);

    std::cout << "scanning " << grid.combination_count() << " combinations for "
              << variant_name(variant) << " ...\n";
    const GaConfig best = tune_parameters(matrix, variant, grid, GaConfig{},
                                          dc_guide_length);
    const EncodingAdapter adapter = make_variant_adapter(variant, matrix, dc_guide_length);
    const RunRecord record = evolve(matrix, adapter, best);
    std::cout << "best combination: population=" << best.population_size
              << " iterations=" << best.iterations << " mutation=" << best.mutation_chance
              << " (best cost " << record.final_best_cost << ")\n";
    return 0;
}

int cmd_nn(const std::string& path) {
    const TspInstance inst = read_tsplib_file(path, &std::cerr);
    const CostMatrix matrix = build_cost_matrix(inst);
    const Tour tour = best_nn_tour(matrix);
    std::cout << "instance : " << inst.name << " (n=" << inst.dimension << ")\n";
    std::cout << "nn start : " << tour.order[0] + 1 << "\n";
    std::cout << "nn cost  : " << tour_cost(matrix, tour) << "\n";
    std::cout << "nn tour  : " << format_tour(tour) << "\n";
    return 0;
}

int cmd_decode(const std::string& reference_csv, const std::string& shifts_csv) {
    const Tour reference = tour_from_one_based(parse_int_list(reference_csv));
    std::vector<int> shifts = parse_int_list(shifts_csv);

    // External chromosomes may carry raw shift counts; fold them into range.
    const int n = reference.size();
    for (int& shift : shifts) {
        if (shift >= n) {
            const int reduced = nse_reduce(shift, n);
            std::cout << "note: shift " << shift << " reduced to " << reduced << " (mod "
                      << n - 1 << ")\n";
            shift = reduced;
        }
    }

    std::cout << "reference : " << format_tour(reference) << "\n";
    std::vector<Tour> states;
    const Tour decoded = nse_decode_traced(reference, shifts, states);
    for (std::size_t i = 0; i < states.size(); ++i) {
        std::cout << "gene " << i + 1 << " (city " << reference.order[i + 1] + 1
                  << " shifts " << shifts[i] << ") : " << format_tour(states[i]) << "\n";
    }
    std::cout << "decoded   : " << format_tour(decoded) << "\n";
    return 0;
}

int cmd_export_lp(const std::string& path, const std::string& out_path) {
    const TspInstance inst = read_tsplib_file(path, &std::cerr);
    const CostMatrix matrix = build_cost_matrix(inst);
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << export_mtz(inst, matrix);

    const MtzModel model{matrix.n};
    std::cout << "wrote " << out_path << " (" << model.binary_variable_count()
              << " binary vars, " << model.order_variable_count() << " order vars, "
              << model.degree_row_count() << " degree rows, " << model.subtour_row_count()
              << " subtour rows)\n";
    std::cout << "solve with e.g.: glpsol --lp " << out_path << " -o solution.txt\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"TSP toolkit: node-shift / path / double-chromosome GA encodings, "
                 "NN seeding, exact references and a benchmark harness"};
    app.require_subcommand(1);

    // solve
    std::string instance_path, encoding_name = "nse", seeding_name = "rand";
    int dc_guide_length = 0;
    GaFlags flags;
    CLI::App* solve = app.add_subcommand("solve", "run one GA on one instance");
    solve->add_option("instance", instance_path, "TSPLIB instance file")->required();
    solve->add_option("--encoding", encoding_name, "nse | pr | dc");
    solve->add_option("--seeding", seeding_name, "rand | nn");
    solve->add_option("--dc-guide-length", dc_guide_length,
                      "guide length for DC (0 = n rounded down to even)");
    flags.attach(solve);

    // bench
    std::string campaign_path, output_dir_flag;
    CLI::App* bench = app.add_subcommand("bench", "run a benchmark campaign from a config");
    bench->add_option("config", campaign_path, "campaign config file")->required();
    bench->add_option("--output-dir", output_dir_flag,
                      "overrides the config and NODESHIFT_OUT_DIR");

    // tune
    std::string tune_path, grid_population, grid_iterations, grid_mutation;
    std::string tune_encoding = "nse", tune_seeding = "rand";
    int tune_guide_length = 0;
    CLI::App* tune = app.add_subcommand("tune", "grid-search GA parameters on an instance");
    tune->add_option("instance", tune_path, "TSPLIB instance file")->required();
    tune->add_option("--encoding", tune_encoding, "nse | pr | dc");
    tune->add_option("--seeding", tune_seeding, "rand | nn");
    tune->add_option("--grid-population", grid_population, "comma list, e.g. 50,100");
    tune->add_option("--grid-iterations", grid_iterations, "comma list");
    tune->add_option("--grid-mutation", grid_mutation, "comma list, e.g. 0.01,0.1");
    tune->add_option("--dc-guide-length", tune_guide_length, "guide length for DC");

    // nn
    std::string nn_path;
    CLI::App* nn = app.add_subcommand("nn", "best nearest-neighbour tour over all starts");
    nn->add_option("instance", nn_path, "TSPLIB instance file")->required();

    // decode
    std::string reference_csv, shifts_csv;
    CLI::App* decode =
        app.add_subcommand("decode", "trace the node-shift decoding of a chromosome");
    decode->add_option("--reference", reference_csv, "reference tour, 1-based, e.g. 1,4,3,5,2")
        ->required();
    decode->add_option("--shifts", shifts_csv, "shift chromosome, e.g. 2,1,2,1")->required();

    // export-lp
    std::string lp_instance, lp_out;
    CLI::App* export_lp =
        app.add_subcommand("export-lp", "write the MTZ integer program as an LP file");
    export_lp->add_option("instance", lp_instance, "TSPLIB instance file")->required();
    export_lp->add_option("output", lp_out, "output .lp path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            return cmd_solve(instance_path, encoding_name, seeding_name, flags,
                             dc_guide_length);
        }
        if (bench->parsed()) return cmd_bench(campaign_path, output_dir_flag);
        if (tune->parsed()) {
            return cmd_tune(tune_path, tune_encoding, tune_seeding, grid_population,
                            grid_iterations, grid_mutation, tune_guide_length);
        }
        if (nn->parsed()) return cmd_nn(nn_path);
        if (decode->parsed()) return cmd_decode(reference_csv, shifts_csv);
        if (export_lp->parsed()) return cmd_export_lp(lp_instance, lp_out);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
