#include "nodeshift/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "nodeshift/heuristics.hpp"

namespace nodeshift {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return s;
}

/// Shortest representation that parses back to the same double.
std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) return "0";
    return std::string(buf, ptr);
}

double parse_double(const std::string& s) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::runtime_error("not a number: \"" + s + "\"");
    }
    return v;
}

std::int64_t parse_int(const std::string& s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::runtime_error("not an integer: \"" + s + "\"");
    }
    return v;
}

}  // namespace

std::string variant_name(Variant variant) {
    return std::string(to_string(variant.encoding)) + "-" + to_string(variant.seeding);
}

Variant parse_variant(const std::string& name) {
    const std::string canon = upper(trim(name));
    for (Encoding encoding : {Encoding::nse, Encoding::dc, Encoding::pr}) {
        for (Seeding seeding : {Seeding::rand, Seeding::nn}) {
            if (canon == variant_name({encoding, seeding})) return {encoding, seeding};
        }
    }
    throw std::invalid_argument("unknown variant \"" + name +
                                "\" (expected NSE|PR|DC - RAND|NN, e.g. NSE-RAND)");
}

EncodingAdapter make_variant_adapter(Variant variant, const CostMatrix& matrix,
                                     int dc_guide_length) {
    Tour reference = variant.seeding == Seeding::nn ? best_nn_tour(matrix)
                                                    : canonical_tour(matrix.n);
    switch (variant.encoding) {
        case Encoding::nse: return EncodingAdapter::nse(std::move(reference));
        case Encoding::dc: return EncodingAdapter::dc(std::move(reference), dc_guide_length);
        case Encoding::pr: return EncodingAdapter::pr(matrix.n);
    }
    throw std::logic_error("unknown encoding");
}

GaConfig tune_parameters(const CostMatrix& matrix, Variant variant,
                         const ParameterGrid& grid, const GaConfig& base,
                         int dc_guide_length, std::uint64_t tuning_seed) {
    if (grid.populations.empty() || grid.iterations.empty() ||
        grid.mutation_chances.empty()) {
        throw std::invalid_argument("tune_parameters: empty grid axis");
    }

    // Ascending axes make the scan's first strict winner the tie-break
    // winner: smaller population, then fewer iterations, then lower mutation.
    ParameterGrid sorted = grid;
    std::sort(sorted.populations.begin(), sorted.populations.end());
    std::sort(sorted.iterations.begin(), sorted.iterations.end());
    std::sort(sorted.mutation_chances.begin(), sorted.mutation_chances.end());

    const EncodingAdapter adapter = make_variant_adapter(variant, matrix, dc_guide_length);

    GaConfig best_config = base;
    Cost best_cost = 0;
    bool have_best = false;
    for (int population : sorted.populations) {
        for (int iterations : sorted.iterations) {
            for (double mutation : sorted.mutation_chances) {
                GaConfig config = base;
                config.population_size = population;
                config.iterations = iterations;
                config.mutation_chance = mutation;
                config.seeding = variant.seeding;
                config.rng_seed = tuning_seed;
                const RunRecord record = evolve(matrix, adapter, config);
                if (!have_best || record.final_best_cost < best_cost) {
                    best_cost = record.final_best_cost;
                    best_config = config;
                    have_best = true;
                }
            }
        }
    }
    return best_config;
}

void Campaign::validate() const {
    if (instance_paths.empty()) throw std::invalid_argument("campaign: no instances");
    if (variants.empty()) throw std::invalid_argument("campaign: no variants");
    if (repetitions < 1) throw std::invalid_argument("campaign: repetitions must be >= 1");
    if (!instance_classes.empty() && instance_classes.size() != instance_paths.size()) {
        throw std::invalid_argument("campaign: classes must be given per instance");
    }
    if (jobs < 1) throw std::invalid_argument("campaign: jobs must be >= 1");
    base_config.validate();
}

// ---------------------------------------------------------------------------
// campaign config file (toml-like subset: `key = value`, arrays, strings)

namespace {

std::vector<std::string> split_array(const std::string& value, int line_no) {
    if (value.size() < 2 || value.front() != '[' || value.back() != ']') {
        throw std::runtime_error("campaign config line " + std::to_string(line_no) +
                                 ": expected an array [ ... ]");
    }
    std::vector<std::string> items;
    std::string current;
    for (char c : value.substr(1, value.size() - 2)) {
        if (c == ',') {
            items.push_back(trim(current));
            current.clear();
        } else {
            current += c;
        }
    }
    const std::string last = trim(current);
    if (!last.empty()) items.push_back(last);
    for (auto& item : items) {
        if (item.size() >= 2 && item.front() == '"' && item.back() == '"') {
            item = item.substr(1, item.size() - 2);
        }
    }
    return items;
}

std::string unquote(const std::string& value) {
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
        return value.substr(1, value.size() - 2);
    }
    return value;
}

}  // namespace

Campaign load_campaign_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open campaign config: " + path.string());

    Campaign campaign;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        // strip comments (# outside quotes)
        bool in_quotes = false;
        for (std::size_t k = 0; k < line.size(); ++k) {
            if (line[k] == '"') in_quotes = !in_quotes;
            if (line[k] == '#' && !in_quotes) {
                line = line.substr(0, k);
                break;
            }
        }
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error("campaign config line " + std::to_string(line_no) +
                                     ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        try {
            if (key == "instances") {
                campaign.instance_paths = split_array(value, line_no);
            } else if (key == "classes") {
                for (const auto& item : split_array(value, line_no)) {
                    campaign.instance_classes.push_back(static_cast<int>(parse_int(item)));
                }
            } else if (key == "variants") {
                for (const auto& item : split_array(value, line_no)) {
                    campaign.variants.push_back(parse_variant(item));
                }
            } else if (key == "repetitions") {
                campaign.repetitions = static_cast<int>(parse_int(value));
            } else if (key == "base_seed") {
                campaign.base_seed = static_cast<std::uint64_t>(parse_int(value));
            } else if (key == "output_dir") {
                campaign.output_dir = unquote(value);
            } else if (key == "jobs") {
                campaign.jobs = static_cast<int>(parse_int(value));
            } else if (key == "population") {
                campaign.base_config.population_size = static_cast<int>(parse_int(value));
            } else if (key == "iterations") {
                campaign.base_config.iterations = static_cast<int>(parse_int(value));
            } else if (key == "mutation") {
                campaign.base_config.mutation_chance = parse_double(value);
            } else if (key == "elitism") {
                campaign.base_config.elitism_count = static_cast<int>(parse_int(value));
            } else if (key == "tournament") {
                campaign.base_config.tournament_size = static_cast<int>(parse_int(value));
            } else if (key == "dc_guide_length") {
                campaign.dc_guide_length = static_cast<int>(parse_int(value));
            } else if (key == "tune") {
                const std::string mode = upper(unquote(value));
                if (mode == "NONE") campaign.tune_mode = TuneMode::none;
                else if (mode == "PER-CLASS") campaign.tune_mode = TuneMode::per_class;
                else if (mode == "PER-INSTANCE") campaign.tune_mode = TuneMode::per_instance;
                else throw std::runtime_error("tune must be none, per-class or per-instance");
            } else if (key == "grid_population") {
                campaign.grid.populations.clear();
                for (const auto& item : split_array(value, line_no)) {
                    campaign.grid.populations.push_back(static_cast<int>(parse_int(item)));
                }
            } else if (key == "grid_iterations") {
                campaign.grid.iterations.clear();
                for (const auto& item : split_array(value, line_no)) {
                    campaign.grid.iterations.push_back(static_cast<int>(parse_int(item)));
                }
            } else if (key == "grid_mutation") {
                campaign.grid.mutation_chances.clear();
                for (const auto& item : split_array(value, line_no)) {
                    campaign.grid.mutation_chances.push_back(parse_double(item));
                }
            } else {
                throw std::runtime_error("unknown key \"" + key + "\"");
            }
        } catch (const std::runtime_error& err) {
            throw std::runtime_error("campaign config line " + std::to_string(line_no) +
                                     ": " + err.what());
        }
    }
    return campaign;
}

// ---------------------------------------------------------------------------
// campaign execution

namespace {

struct LoadedInstance {
    std::string path;
    std::string name;
    CostMatrix matrix;
    Tour nn_tour;
    Cost nn_cost = 0;
    int klass = 1;
};

std::string sanitize_failure(std::string message) {
    for (char& c : message) {
        if (c == ',' || c == '\n' || c == '\r') c = ' ';
    }
    return message;
}

}  // namespace

CampaignResult run_campaign(const Campaign& campaign) {
    campaign.validate();

    std::vector<LoadedInstance> instances;
    instances.reserve(campaign.instance_paths.size());
    for (std::size_t idx = 0; idx < campaign.instance_paths.size(); ++idx) {
        LoadedInstance loaded;
        loaded.path = campaign.instance_paths[idx];
        const TspInstance parsed = read_tsplib_file(loaded.path);
        loaded.name = parsed.name;
        loaded.matrix = build_cost_matrix(parsed);
        loaded.nn_tour = best_nn_tour(loaded.matrix);
        loaded.nn_cost = tour_cost(loaded.matrix, loaded.nn_tour);
        loaded.klass = campaign.instance_classes.empty()
                           ? 1
                           : campaign.instance_classes[idx];
        instances.push_back(std::move(loaded));
    }

    // One immutable adapter per (instance, variant) cell, shared by its runs.
    struct Cell {
        EncodingAdapter adapter;
        GaConfig config;
    };
    std::vector<std::vector<Cell>> cells;  // [instance][variant]
    cells.reserve(instances.size());
    for (const auto& inst : instances) {
        std::vector<Cell> row;
        row.reserve(campaign.variants.size());
        for (Variant variant : campaign.variants) {
            GaConfig config = campaign.base_config;
            config.seeding = variant.seeding;
            row.push_back(Cell{
                make_variant_adapter(variant, inst.matrix, campaign.dc_guide_length),
                config});
        }
        cells.push_back(std::move(row));
    }

    if (campaign.tune_mode == TuneMode::per_instance) {
        for (std::size_t i = 0; i < instances.size(); ++i) {
            for (std::size_t v = 0; v < campaign.variants.size(); ++v) {
                cells[i][v].config = tune_parameters(
                    instances[i].matrix, campaign.variants[v], campaign.grid,
                    campaign.base_config, campaign.dc_guide_length);
            }
        }
    } else if (campaign.tune_mode == TuneMode::per_class) {
        // Tune on the largest instance of each class, share within the class.
        std::vector<int> klasses;
        for (const auto& inst : instances) klasses.push_back(inst.klass);
        std::sort(klasses.begin(), klasses.end());
        klasses.erase(std::unique(klasses.begin(), klasses.end()), klasses.end());
        for (int klass : klasses) {
            std::size_t pilot = instances.size();
            for (std::size_t i = 0; i < instances.size(); ++i) {
                if (instances[i].klass != klass) continue;
                if (pilot == instances.size() ||
                    instances[i].matrix.n > instances[pilot].matrix.n) {
                    pilot = i;
                }
            }
            for (std::size_t v = 0; v < campaign.variants.size(); ++v) {
                const GaConfig tuned = tune_parameters(
                    instances[pilot].matrix, campaign.variants[v], campaign.grid,
                    campaign.base_config, campaign.dc_guide_length);
                for (std::size_t i = 0; i < instances.size(); ++i) {
                    if (instances[i].klass == klass) cells[i][v].config = tuned;
                }
            }
        }
    }

    struct Task {
        std::size_t instance;
        std::size_t variant;
        int run_index;
    };
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        for (std::size_t v = 0; v < campaign.variants.size(); ++v) {
            for (int r = 0; r < campaign.repetitions; ++r) tasks.push_back({i, v, r});
        }
    }

    CampaignResult result;
    result.runs.resize(tasks.size());

    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t t = cursor.fetch_add(1);
            if (t >= tasks.size()) return;
            const Task task = tasks[t];
            const LoadedInstance& inst = instances[task.instance];
            const Cell& cell = cells[task.instance][task.variant];

            CampaignResult::Run run;
            run.instance = inst.name;
            run.variant = campaign.variants[task.variant];
            run.run_index = task.run_index;
            GaConfig config = cell.config;
            config.rng_seed = campaign.base_seed + static_cast<std::uint64_t>(task.run_index);
            try {
                run.record = evolve(inst.matrix, cell.adapter, config);
            } catch (const std::exception& err) {
                run.failed = true;
                run.failure = sanitize_failure(err.what());
                run.record.config = config;
                run.record.encoding = cell.adapter.kind();
            }
            result.runs[t] = std::move(run);
        }
    };

    const int jobs = std::min<int>(campaign.jobs, static_cast<int>(tasks.size()));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& thread : pool) thread.join();
    }
    // Task order is already (instance, variant, run_index); results landed by
    // task index, so files never depend on scheduling.

    for (std::size_t i = 0; i < instances.size(); ++i) {
        for (std::size_t v = 0; v < campaign.variants.size(); ++v) {
            SummaryRow row;
            row.instance = instances[i].name;
            row.variant = variant_name(campaign.variants[v]);
            row.nn_cost = instances[i].nn_cost;
            double wall_sum = 0;
            double cost_sum = 0;
            for (const auto& run : result.runs) {
                if (run.instance != row.instance ||
                    !(run.variant == campaign.variants[v]) || run.failed) {
                    continue;
                }
                row.run_costs.push_back(run.record.final_best_cost);
                cost_sum += static_cast<double>(run.record.final_best_cost);
                wall_sum += static_cast<double>(run.record.wall_clock_ms);
                ++row.runs;
            }
            if (row.runs > 0) {
                row.best_cost = *std::min_element(row.run_costs.begin(), row.run_costs.end());
                row.mean_cost = cost_sum / row.runs;
                row.mean_wall_ms = wall_sum / row.runs;
            }
            result.summary.push_back(std::move(row));
        }
    }

    const std::filesystem::path dir(campaign.output_dir.empty() ? "." : campaign.output_dir);
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(dir / "runs.csv");
        if (!out) throw std::runtime_error("cannot write " + (dir / "runs.csv").string());
        write_runs_csv(result, out);
    }
    {
        std::ofstream out(dir / "summary.csv");
        write_summary_csv(result.summary, out);
    }
    emit_runtime_report(result.summary, dir);
    for (const auto& inst : instances) {
        std::vector<std::pair<std::string, std::vector<Cost>>> series;
        for (const auto& row : result.summary) {
            if (row.instance == inst.name && !row.run_costs.empty()) {
                series.emplace_back(row.variant, row.run_costs);
            }
        }
        if (!series.empty()) {
            emit_boxplot_svg(series, inst.name + ": best cost over " +
                                         std::to_string(campaign.repetitions) + " runs",
                             dir / ("boxplot_" + inst.name + ".svg"));
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// CSV

void write_runs_csv(const CampaignResult& result, std::ostream& out) {
    out << "# nodeshift runs v1\n";
    out << "instance,variant,run_index,seed,population,iterations,mutation,"
           "final_best_cost,best_tour\n";
    for (const auto& run : result.runs) {
        const GaConfig& config = run.record.config;
        out << run.instance << ',' << variant_name(run.variant) << ',' << run.run_index
            << ',' << config.rng_seed << ',' << config.population_size << ','
            << config.iterations << ',' << format_double(config.mutation_chance) << ',';
        if (run.failed) {
            out << -1 << ",FAILED(" << run.failure << ")\n";
        } else {
            out << run.record.final_best_cost << ',' << format_tour(run.record.final_best_tour)
                << "\n";
        }
    }
}

void write_summary_csv(const std::vector<SummaryRow>& rows, std::ostream& out) {
    out << "# nodeshift summary v1\n";
    out << "instance,variant,runs,nn_cost,best_cost,mean_cost,run_costs\n";
    for (const auto& row : rows) {
        out << row.instance << ',' << row.variant << ',' << row.runs << ',' << row.nn_cost
            << ',' << row.best_cost << ',' << format_double(row.mean_cost) << ',';
        for (std::size_t k = 0; k < row.run_costs.size(); ++k) {
            out << (k ? ";" : "") << row.run_costs[k];
        }
        out << "\n";
    }
}

void write_runtime_csv(const std::vector<SummaryRow>& rows, std::ostream& out) {
    out << "# nodeshift runtime v1\n";
    out << "instance,variant,mean_wall_ms\n";
    for (const auto& row : rows) {
        out << row.instance << ',' << row.variant << ',' << format_double(row.mean_wall_ms)
            << "\n";
    }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    fields.push_back(current);
    return fields;
}

void expect_header(std::istream& in, const std::string& schema, const std::string& header) {
    std::string line;
    if (!std::getline(in, line) || line != schema) {
        throw std::runtime_error("csv: expected schema line \"" + schema + "\"");
    }
    if (!std::getline(in, line) || line != header) {
        throw std::runtime_error("csv: expected header \"" + header + "\"");
    }
}

}  // namespace

std::vector<SummaryRow> read_summary_csv(std::istream& summary_in,
                                         std::istream& runtime_in) {
    expect_header(summary_in, "# nodeshift summary v1",
                  "instance,variant,runs,nn_cost,best_cost,mean_cost,run_costs");
    std::vector<SummaryRow> rows;
    std::string line;
    while (std::getline(summary_in, line)) {
        if (trim(line).empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 7) throw std::runtime_error("csv: bad summary row: " + line);
        SummaryRow row;
        row.instance = fields[0];
        row.variant = fields[1];
        row.runs = static_cast<int>(parse_int(fields[2]));
        row.nn_cost = parse_int(fields[3]);
        row.best_cost = parse_int(fields[4]);
        row.mean_cost = parse_double(fields[5]);
        std::string item;
        std::istringstream costs(fields[6]);
        while (std::getline(costs, item, ';')) {
            if (!item.empty()) row.run_costs.push_back(parse_int(item));
        }
        rows.push_back(std::move(row));
    }

    expect_header(runtime_in, "# nodeshift runtime v1", "instance,variant,mean_wall_ms");
    while (std::getline(runtime_in, line)) {
        if (trim(line).empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 3) throw std::runtime_error("csv: bad runtime row: " + line);
        for (auto& row : rows) {
            if (row.instance == fields[0] && row.variant == fields[1]) {
                row.mean_wall_ms = parse_double(fields[2]);
            }
        }
    }
    return rows;
}

void emit_runtime_report(const std::vector<SummaryRow>& rows,
                         const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(dir / "runtime.csv");
        if (!out) throw std::runtime_error("cannot write " + (dir / "runtime.csv").string());
        write_runtime_csv(rows, out);
    }

    std::vector<std::string> names;
    for (const auto& row : rows) {
        if (std::find(names.begin(), names.end(), row.instance) == names.end()) {
            names.push_back(row.instance);
        }
    }
    for (const auto& name : names) {
        std::vector<std::pair<std::string, double>> bars;
        for (const auto& row : rows) {
            if (row.instance == name) bars.emplace_back(row.variant, row.mean_wall_ms);
        }
        std::ofstream out(dir / ("runtime_" + name + ".svg"));
        if (!out) throw std::runtime_error("cannot write runtime svg for " + name);
        out << render_bar_chart_svg(bars, name + ": mean runtime", "ms");
    }
}

}  // namespace nodeshift
