#include "nodeshift/tsplib.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

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

struct Line {
    int no = 0;
    std::string text;
};

// "KEY : value" / "KEY: value" / bare "KEY". Sections have no value.
bool split_keyword(const std::string& line, std::string& key, std::string& value) {
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
        key = upper(trim(line));
        value.clear();
    } else {
        key = upper(trim(line.substr(0, colon)));
        value = trim(line.substr(colon + 1));
    }
    if (key.empty()) return false;
    return std::all_of(key.begin(), key.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

}  // namespace

TsplibParseError::TsplibParseError(int line_no, const std::string& line,
                                   const std::string& message)
    : std::runtime_error("TSPLIB parse error at line " + std::to_string(line_no) +
                         " (\"" + line + "\"): " + message),
      line_no_(line_no) {}

const char* to_string(EdgeWeightKind kind) {
    switch (kind) {
        case EdgeWeightKind::euc_2d: return "EUC_2D";
        case EdgeWeightKind::ceil_2d: return "CEIL_2D";
        case EdgeWeightKind::explicit_full_matrix: return "EXPLICIT";
    }
    return "?";
}

TspInstance parse_tsplib(std::istream& in, std::ostream* warnings) {
    TspInstance inst;
    bool saw_dimension = false;
    bool saw_weight_type = false;
    bool saw_coords = false;
    bool saw_weights = false;
    std::string edge_weight_format;  // EXPLICIT only

    std::vector<Line> lines;
    {
        std::string raw;
        int no = 0;
        while (std::getline(in, raw)) lines.push_back({++no, raw});
    }

    std::size_t at = 0;
    auto fail = [](const Line& line, const std::string& message) -> void {
        throw TsplibParseError(line.no, trim(line.text), message);
    };

    while (at < lines.size()) {
        const Line line = lines[at++];
        const std::string text = trim(line.text);
        if (text.empty()) continue;

        std::string key, value;
        if (!split_keyword(text, key, value)) fail(line, "malformed header line");

        if (key == "NAME") {
            inst.name = value;
        } else if (key == "TYPE") {
            if (upper(value) != "TSP") fail(line, "unsupported TYPE (only TSP)");
        } else if (key == "COMMENT") {
            // ignored by design, no warning
        } else if (key == "DIMENSION") {
            try {
                inst.dimension = std::stoi(value);
            } catch (const std::exception&) {
                fail(line, "DIMENSION is not an integer");
            }
            if (inst.dimension < 3) fail(line, "DIMENSION must be at least 3");
            saw_dimension = true;
        } else if (key == "EDGE_WEIGHT_TYPE") {
            const std::string type = upper(value);
            if (type == "EUC_2D") {
                inst.edge_weight_kind = EdgeWeightKind::euc_2d;
            } else if (type == "CEIL_2D") {
                inst.edge_weight_kind = EdgeWeightKind::ceil_2d;
            } else if (type == "EXPLICIT") {
                inst.edge_weight_kind = EdgeWeightKind::explicit_full_matrix;
            } else {
                fail(line, "unsupported EDGE_WEIGHT_TYPE " + value +
                               " (supported: EUC_2D, CEIL_2D, EXPLICIT)");
            }
            saw_weight_type = true;
        } else if (key == "EDGE_WEIGHT_FORMAT") {
            edge_weight_format = upper(value);
        } else if (key == "NODE_COORD_SECTION") {
            if (!saw_dimension) fail(line, "NODE_COORD_SECTION before DIMENSION");
            inst.coords.assign(inst.dimension, {});
            std::vector<bool> filled(inst.dimension, false);
            for (int row = 0; row < inst.dimension; ++row) {
                if (at >= lines.size()) fail(line, "coordinate section ends early");
                const Line data = lines[at++];
                std::istringstream iss(trim(data.text));
                int id = 0;
                double x = 0, y = 0;
                if (!(iss >> id >> x >> y)) fail(data, "expected \"id x y\"");
                if (id < 1 || id > inst.dimension) {
                    fail(data, "node id " + std::to_string(id) + " outside [1, " +
                                   std::to_string(inst.dimension) + "]");
                }
                if (filled[id - 1]) fail(data, "duplicate node id " + std::to_string(id));
                filled[id - 1] = true;
                inst.coords[id - 1] = {x, y};
            }
            saw_coords = true;
        } else if (key == "EDGE_WEIGHT_SECTION") {
            if (!saw_dimension) fail(line, "EDGE_WEIGHT_SECTION before DIMENSION");
            if (!edge_weight_format.empty() && edge_weight_format != "FULL_MATRIX") {
                fail(line, "unsupported EDGE_WEIGHT_FORMAT " + edge_weight_format +
                               " (supported: FULL_MATRIX)");
            }
            const std::size_t want =
                static_cast<std::size_t>(inst.dimension) * inst.dimension;
            inst.explicit_weights.reserve(want);
            while (inst.explicit_weights.size() < want) {
                if (at >= lines.size()) fail(line, "weight section ends early");
                const Line data = lines[at++];
                std::istringstream iss(trim(data.text));
                Cost w = 0;
                while (iss >> w) {
                    if (inst.explicit_weights.size() == want) {
                        fail(data, "more weights than dimension^2");
                    }
                    inst.explicit_weights.push_back(w);
                }
                if (!iss.eof()) fail(data, "non-numeric weight entry");
            }
            saw_weights = true;
        } else if (key == "EOF") {
            break;
        } else {
            if (warnings) {
                *warnings << "tsplib: ignoring unknown keyword \"" << key << "\" at line "
                          << line.no << "\n";
            }
            // Skip; section keywords we do not know would misparse as data,
            // but every unknown in the wild (DISPLAY_DATA_TYPE etc.) is a
            // single header line.
        }
    }

    const Line end{lines.empty() ? 1 : lines.back().no, "<end of input>"};
    if (!saw_dimension) fail(end, "missing DIMENSION");
    if (!saw_weight_type) fail(end, "missing EDGE_WEIGHT_TYPE");
    if (inst.edge_weight_kind == EdgeWeightKind::explicit_full_matrix) {
        if (!saw_weights) fail(end, "EXPLICIT instance without EDGE_WEIGHT_SECTION");
        if (saw_coords) fail(end, "EXPLICIT instance must not carry coordinates");
    } else {
        if (!saw_coords) fail(end, "coordinate instance without NODE_COORD_SECTION");
        if (saw_weights) fail(end, "coordinate instance must not carry EDGE_WEIGHT_SECTION");
    }
    return inst;
}

TspInstance parse_tsplib(const std::string& text, std::ostream* warnings) {
    std::istringstream in(text);
    return parse_tsplib(in, warnings);
}

TspInstance read_tsplib_file(const std::filesystem::path& path, std::ostream* warnings) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open instance file: " + path.string());
    }
    TspInstance inst = parse_tsplib(in, warnings);
    if (inst.name.empty()) inst.name = path.stem().string();
    return inst;
}

std::string write_tsplib(const TspInstance& inst) {
    std::ostringstream out;
    out << "NAME : " << inst.name << "\n";
    out << "TYPE : TSP\n";
    out << "DIMENSION : " << inst.dimension << "\n";
    out << "EDGE_WEIGHT_TYPE : " << to_string(inst.edge_weight_kind) << "\n";
    if (inst.edge_weight_kind == EdgeWeightKind::explicit_full_matrix) {
        out << "EDGE_WEIGHT_FORMAT : FULL_MATRIX\n";
        out << "EDGE_WEIGHT_SECTION\n";
        for (int i = 0; i < inst.dimension; ++i) {
            for (int j = 0; j < inst.dimension; ++j) {
                out << (j ? " " : "")
                    << inst.explicit_weights[static_cast<std::size_t>(i) * inst.dimension + j];
            }
            out << "\n";
        }
    } else {
        out << "NODE_COORD_SECTION\n";
        out.precision(std::numeric_limits<double>::max_digits10);
        for (int i = 0; i < inst.dimension; ++i) {
            out << (i + 1) << " " << inst.coords[i].x << " " << inst.coords[i].y << "\n";
        }
    }
    out << "EOF\n";
    return out.str();
}

CostMatrix build_cost_matrix(const TspInstance& inst) {
    const int n = inst.dimension;
    CostMatrix m = CostMatrix::zeros(n);

    if (inst.edge_weight_kind == EdgeWeightKind::explicit_full_matrix) {
        if (inst.explicit_weights.size() != static_cast<std::size_t>(n) * n) {
            throw std::invalid_argument("explicit weight table is not dimension^2");
        }
        m.cells = inst.explicit_weights;
    } else {
        if (static_cast<int>(inst.coords.size()) != n) {
            throw std::invalid_argument("coordinate count does not match dimension");
        }
        const bool ceil = inst.edge_weight_kind == EdgeWeightKind::ceil_2d;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const double dx = inst.coords[i].x - inst.coords[j].x;
                const double dy = inst.coords[i].y - inst.coords[j].y;
                const double d = std::sqrt(dx * dx + dy * dy);
                // TSPLIB nint: half rounds up.
                const Cost w = ceil ? static_cast<Cost>(std::ceil(d))
                                    : static_cast<Cost>(std::floor(d + 0.5));
                m.at(i, j) = w;
                m.at(j, i) = w;
            }
        }
    }

    m.validate();
    return m;
}

}  // namespace nodeshift
