#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "nodeshift/tour.hpp"

namespace nodeshift {

/// Supported distance functions. All fourteen stock benchmarks are EUC_2D;
/// CEIL_2D and explicit full matrices come almost for free. Anything else is
/// rejected loudly instead of being silently approximated.
enum class EdgeWeightKind { euc_2d, ceil_2d, explicit_full_matrix };

const char* to_string(EdgeWeightKind kind);

/// A parsed TSPLIB problem. Coordinates are kept only for coordinate-based
/// kinds, the weight table only for EXPLICIT.
struct TspInstance {
    struct Point {
        double x = 0;
        double y = 0;
    };

    std::string name;
    int dimension = 0;
    EdgeWeightKind edge_weight_kind = EdgeWeightKind::euc_2d;
    std::vector<Point> coords;            // euc_2d / ceil_2d
    std::vector<Cost> explicit_weights;   // row-major dimension^2, explicit only
};

class TsplibParseError : public std::runtime_error {
public:
    TsplibParseError(int line_no, const std::string& line, const std::string& message);

    int line_no() const { return line_no_; }

private:
    int line_no_;
};

/// Parses the supported TSPLIB subset (NAME, DIMENSION, EDGE_WEIGHT_TYPE,
/// NODE_COORD_SECTION / EDGE_WEIGHT_SECTION, optional EOF marker). Unknown
/// keywords are skipped; one note per skipped keyword goes to `warnings`
/// when a sink is given.
TspInstance parse_tsplib(std::istream& in, std::ostream* warnings = nullptr);
TspInstance parse_tsplib(const std::string& text, std::ostream* warnings = nullptr);
TspInstance read_tsplib_file(const std::filesystem::path& path,
                             std::ostream* warnings = nullptr);

/// Serializes the supported subset. parse(write(x)) preserves name,
/// dimension and coordinates exactly.
std::string write_tsplib(const TspInstance& instance);

/// Materializes the integer cost matrix under the TSPLIB conventions:
/// EUC_2D is nint(d) = floor(d + 0.5), CEIL_2D is the ceiling, EXPLICIT
/// copies the table. Throws std::invalid_argument on negative or asymmetric
/// explicit weights.
CostMatrix build_cost_matrix(const TspInstance& instance);

}  // namespace nodeshift
