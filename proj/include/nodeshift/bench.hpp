#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "nodeshift/ga.hpp"
#include "nodeshift/tsplib.hpp"

namespace nodeshift {

/// One of the six benchmark variants: {NSE, PR, DC} x {RAND, NN}.
struct Variant {
    Encoding encoding = Encoding::nse;
    Seeding seeding = Seeding::rand;

    bool operator==(const Variant&) const = default;
};

/// "NSE-RAND", "PR-NN", ... and back.
std::string variant_name(Variant variant);
Variant parse_variant(const std::string& name);

/// Adapter realizing the reference-tour policy of a variant: canonical tour
/// for RAND, the best NN tour for NN (which both seeds the population and
/// re-centers the landscape). dc_guide_length 0 keeps the encoding default.
EncodingAdapter make_variant_adapter(Variant variant, const CostMatrix& matrix,
                                     int dc_guide_length = 0);

/// The tuning grid. Defaults are the stock 4 x 4 x 4 sweep.
struct ParameterGrid {
    std::vector<int> populations{50, 100, 500, 1000};
    std::vector<int> iterations{100, 500, 1000, 2000};
    std::vector<double> mutation_chances{0.01, 0.03, 0.05, 0.1};

    int combination_count() const {
        return static_cast<int>(populations.size() * iterations.size() *
                                mutation_chances.size());
    }
};

/// Runs every grid combination once (fixed seed) for the variant on the
/// instance and returns the cheapest config; ties prefer smaller population,
/// then fewer iterations, then lower mutation. Non-grid fields come from
/// `base`.
GaConfig tune_parameters(const CostMatrix& matrix, Variant variant,
                         const ParameterGrid& grid, const GaConfig& base,
                         int dc_guide_length = 0, std::uint64_t tuning_seed = 7701);

enum class TuneMode {
    none,          // run base_config everywhere
    per_class,     // tune on the largest instance of each class, share within it
    per_instance,  // tune on every instance separately
};

/// A full experiment: instances x variants x repetitions, reproducibly
/// fanned out from base_seed (run r uses base_seed + r).
struct Campaign {
    std::vector<std::string> instance_paths;
    /// Optional class label per instance (parallel to instance_paths) for
    /// per-class tuning; empty puts everything in one class.
    std::vector<int> instance_classes;
    std::vector<Variant> variants;
    int repetitions = 30;
    GaConfig base_config;
    TuneMode tune_mode = TuneMode::none;
    ParameterGrid grid;
    int dc_guide_length = 0;
    std::string output_dir;  // empty means "." (the CLI applies NODESHIFT_OUT_DIR)
    std::uint64_t base_seed = 1;
    /// Worker threads for the run fan-out. Outputs are sorted before
    /// writing, so files never depend on scheduling.
    int jobs = 1;

    void validate() const;
};

/// Loads a campaign from the toml-like `key = value` config format
/// (see README). Unknown keys are an error naming the line.
Campaign load_campaign_file(const std::filesystem::path& path);

/// Aggregate over one (instance, variant) cell.
struct SummaryRow {
    std::string instance;
    std::string variant;
    int runs = 0;
    Cost nn_cost = 0;      // best NN tour cost for the instance
    Cost best_cost = 0;    // min over run costs
    double mean_cost = 0;  // mean over run costs
    double mean_wall_ms = 0;
    std::vector<Cost> run_costs;  // in run-index order

    bool operator==(const SummaryRow&) const = default;
};

struct CampaignResult {
    struct Run {
        std::string instance;
        Variant variant;
        int run_index = 0;
        bool failed = false;
        std::string failure;  // set when failed
        RunRecord record;
    };

    std::vector<Run> runs;          // sorted by (instance, variant, run_index)
    std::vector<SummaryRow> summary;
};

/// Executes the campaign and writes into campaign.output_dir:
///   runs.csv                one row per run (timing-free, byte-reproducible)
///   summary.csv             one row per (instance, variant)
///   runtime.csv             mean wall-clock per (instance, variant)
///   boxplot_<instance>.svg  per-run costs, one box per variant
///   runtime_<instance>.svg  mean runtime bars per variant
/// runs.csv and summary.csv depend only on the seeds and the inputs;
/// runtime.csv and runtime_*.svg measure the machine and are excluded from
/// the byte-reproducibility contract. A run that throws is recorded as
/// failed, never dropped.
CampaignResult run_campaign(const Campaign& campaign);

/// CSV emission/ingestion. Each file begins with a `# nodeshift <name> v1`
/// schema line followed by the header row. Doubles are written shortest
/// round-trip, so re-parsing our own output is exact.
void write_runs_csv(const CampaignResult& result, std::ostream& out);
void write_summary_csv(const std::vector<SummaryRow>& rows, std::ostream& out);
void write_runtime_csv(const std::vector<SummaryRow>& rows, std::ostream& out);

/// Rebuilds SummaryRows from summary.csv plus runtime.csv.
std::vector<SummaryRow> read_summary_csv(std::istream& summary_in,
                                         std::istream& runtime_in);

/// Tukey box-and-whisker statistics: hinges as quartiles, whiskers at the
/// most extreme points within 1.5*IQR of the hinges, the rest outliers.
struct BoxStats {
    double median = 0;
    double q1 = 0;
    double q3 = 0;
    double whisker_low = 0;
    double whisker_high = 0;
    std::vector<Cost> outliers;
};

BoxStats compute_box_stats(std::vector<Cost> values);

/// Self-contained SVG with one labelled box per series entry.
std::string render_boxplot_svg(
    const std::vector<std::pair<std::string, std::vector<Cost>>>& series,
    const std::string& title);

/// Self-contained SVG bar chart (used for the mean-runtime report).
std::string render_bar_chart_svg(const std::vector<std::pair<std::string, double>>& bars,
                                 const std::string& title, const std::string& unit);

/// Renders and writes one boxplot file.
void emit_boxplot_svg(const std::vector<std::pair<std::string, std::vector<Cost>>>& series,
                      const std::string& title, const std::filesystem::path& out_path);

/// Writes runtime.csv plus one runtime_<instance>.svg bar chart per instance
/// into `dir`.
void emit_runtime_report(const std::vector<SummaryRow>& rows,
                         const std::filesystem::path& dir);

}  // namespace nodeshift
