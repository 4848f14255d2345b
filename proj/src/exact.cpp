#include "nodeshift/exact.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nodeshift {

BruteForceResult brute_force_optimum(const CostMatrix& matrix) {
    const int n = matrix.n;
    if (n < 3) throw std::invalid_argument("brute_force_optimum: need at least 3 cities");
    if (n > 12) {
        throw std::invalid_argument(
            "brute_force_optimum: refusing n=" + std::to_string(n) +
            " (guard is 12; use the exported MTZ model and an external solver)");
    }

    // City 1 fixed first; reversal symmetry skipped via order[1] < order[n-1].
    // next_permutation enumerates lexicographically, so keeping the first
    // strict improvement also settles cost ties towards the smallest order.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    std::vector<int> best;
    Cost best_cost = 0;
    bool have_best = false;
    do {
        if (perm[1] > perm[n - 1]) continue;
        Cost cost = 0;
        for (int k = 0; k + 1 < n; ++k) cost += matrix.at(perm[k], perm[k + 1]);
        cost += matrix.at(perm[n - 1], perm[0]);
        if (!have_best || cost < best_cost) {
            best = perm;
            best_cost = cost;
            have_best = true;
        }
    } while (std::next_permutation(perm.begin() + 1, perm.end()));

    return {Tour{std::move(best)}, best_cost};
}

std::string export_mtz(const TspInstance& instance, const CostMatrix& matrix) {
    const int n = matrix.n;
    if (n < 3) throw std::invalid_argument("export_mtz: need at least 3 cities");

    std::ostringstream out;
    const auto x = [](int i, int j) {  // 1-based variable names
        return "x_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
    };

    out << "\\ MTZ formulation for " << (instance.name.empty() ? "instance" : instance.name)
        << " (n=" << n << ")\n";
    out << "Minimize\n obj:";
    int line_len = 5;
    bool first_term = true;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            std::string term = (first_term ? " " : " + ") + std::to_string(matrix.at(i, j)) +
                               " " + x(i, j);
            if (line_len + static_cast<int>(term.size()) > 72) {
                out << "\n  ";
                line_len = 2;
            }
            out << term;
            line_len += static_cast<int>(term.size());
            first_term = false;
        }
    }
    out << "\n";

    out << "Subject To\n";
    for (int i = 0; i < n; ++i) {
        out << " out_" << (i + 1) << ":";
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            out << " + " << x(i, j);
        }
        out << " = 1\n";
    }
    for (int j = 0; j < n; ++j) {
        out << " in_" << (j + 1) << ":";
        for (int i = 0; i < n; ++i) {
            if (i == j) continue;
            out << " + " << x(i, j);
        }
        out << " = 1\n";
    }
    for (int i = 1; i < n; ++i) {
        for (int j = 1; j < n; ++j) {
            if (i == j) continue;
            out << " mtz_" << (i + 1) << "_" << (j + 1) << ": u_" << (i + 1) << " - u_"
                << (j + 1) << " + " << n << " " << x(i, j) << " <= " << (n - 1) << "\n";
        }
    }

    out << "Bounds\n";
    for (int i = 1; i < n; ++i) {
        out << " 1 <= u_" << (i + 1) << " <= " << (n - 1) << "\n";
    }

    out << "Binary\n";
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j) out << " " << x(i, j) << "\n";
        }
    }
    out << "End\n";
    return out.str();
}

Tour tour_from_arc_solution(const std::vector<std::pair<int, int>>& arcs, int n) {
    std::vector<int> successor(n, -1);
    std::vector<int> indegree(n, 0);
    for (const auto& [from, to] : arcs) {
        if (from < 0 || from >= n || to < 0 || to >= n || from == to) {
            throw std::invalid_argument("arc solution: arc (" + std::to_string(from + 1) +
                                        ", " + std::to_string(to + 1) + ") out of range");
        }
        if (successor[from] != -1) {
            throw std::invalid_argument("arc solution: city " + std::to_string(from + 1) +
                                        " has two outgoing arcs");
        }
        successor[from] = to;
        ++indegree[to];
    }
    for (int city = 0; city < n; ++city) {
        if (successor[city] == -1) {
            throw std::invalid_argument("arc solution: city " + std::to_string(city + 1) +
                                        " has no outgoing arc");
        }
    }
    for (int city = 0; city < n; ++city) {
        if (indegree[city] != 1) {
            throw std::invalid_argument("arc solution: city " + std::to_string(city + 1) +
                                        " has in-degree " + std::to_string(indegree[city]));
        }
    }

    Tour tour;
    tour.order.reserve(n);
    int city = 0;
    do {
        tour.order.push_back(city);
        city = successor[city];
    } while (city != 0 && static_cast<int>(tour.order.size()) < n);

    if (static_cast<int>(tour.order.size()) < n && city == 0) {
        std::string cycle;
        for (std::size_t k = 0; k < tour.order.size(); ++k) {
            cycle += (k ? ", " : "") + std::to_string(tour.order[k] + 1);
        }
        throw std::runtime_error("arc solution decomposes into subtours: cycle (" + cycle +
                                 ")");
    }
    if (city != 0) {
        // Degree-feasible arcs always close the walk; reaching here means the
        // checks above were bypassed.
        throw std::runtime_error("arc solution: walk from city 1 did not close");
    }
    return tour;
}

namespace {

bool parse_double_token(const std::string& token, double& value) {
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    return ec == std::errc() && ptr == end;
}

}  // namespace

LpSolution parse_glpsol_solution(const std::string& text) {
    LpSolution solution;
    bool saw_objective = false;

    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream tokens(line);
        std::string token;
        if (line.rfind("Objective", 0) == 0) {
            // "Objective:  obj = 12 (MINimum)"
            while (tokens >> token) {
                if (token == "=") {
                    if (tokens >> token && parse_double_token(token, solution.objective)) {
                        saw_objective = true;
                    }
                    break;
                }
            }
            continue;
        }

        // Column rows: "<no> x_<i>_<j> [status marker] <activity> ..."
        std::vector<std::string> parts;
        while (tokens >> token) parts.push_back(token);
        for (std::size_t k = 0; k < parts.size(); ++k) {
            if (parts[k].rfind("x_", 0) != 0) continue;
            int i = 0, j = 0;
            if (std::sscanf(parts[k].c_str(), "x_%d_%d", &i, &j) != 2) continue;
            double activity = 0;
            for (std::size_t v = k + 1; v < parts.size(); ++v) {
                if (parse_double_token(parts[v], activity)) {
                    if (activity > 0.5) solution.arcs.emplace_back(i - 1, j - 1);
                    break;
                }
            }
            break;
        }
    }

    if (!saw_objective) {
        throw std::runtime_error("glpsol solution: no objective line found");
    }
    return solution;
}

}  // namespace nodeshift
