#include "nodeshift/tour.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nodeshift {

CostMatrix CostMatrix::zeros(int n) {
    CostMatrix m;
    m.n = n;
    m.cells.assign(static_cast<std::size_t>(n) * n, 0);
    return m;
}

void CostMatrix::validate() const {
    if (n <= 0 || cells.size() != static_cast<std::size_t>(n) * n) {
        throw std::invalid_argument("cost matrix: cell count does not match n=" +
                                    std::to_string(n));
    }
    for (int i = 0; i < n; ++i) {
        if (at(i, i) != 0) {
            throw std::invalid_argument("cost matrix: nonzero diagonal at city " +
                                        std::to_string(i + 1));
        }
        for (int j = i + 1; j < n; ++j) {
            if (at(i, j) < 0) {
                throw std::invalid_argument("cost matrix: negative cost between cities " +
                                            std::to_string(i + 1) + " and " +
                                            std::to_string(j + 1));
            }
            if (at(i, j) != at(j, i)) {
                throw std::invalid_argument("cost matrix: asymmetric between cities " +
                                            std::to_string(i + 1) + " and " +
                                            std::to_string(j + 1));
            }
        }
    }
}

Tour canonical_tour(int n) {
    if (n < 3) {
        throw std::invalid_argument("canonical_tour: need at least 3 cities, got " +
                                    std::to_string(n));
    }
    Tour t;
    t.order.resize(n);
    std::iota(t.order.begin(), t.order.end(), 0);
    return t;
}

std::optional<std::string> validate_tour(std::span<const int> order, int n) {
    if (static_cast<int>(order.size()) != n) {
        return "expected " + std::to_string(n) + " cities, got " +
               std::to_string(order.size());
    }
    std::vector<int> seen(n, 0);
    std::vector<int> out_of_range;
    for (int city : order) {
        if (city < 0 || city >= n) {
            out_of_range.push_back(city);
        } else {
            ++seen[city];
        }
    }

    std::ostringstream msg;
    bool first = true;
    auto add = [&](const std::string& part) {
        if (!first) msg << ", ";
        msg << part;
        first = false;
    };
    for (int city = 0; city < n; ++city) {
        if (seen[city] > 1) add("city " + std::to_string(city + 1) + " duplicated");
    }
    for (int city = 0; city < n; ++city) {
        if (seen[city] == 0) add("city " + std::to_string(city + 1) + " missing");
    }
    for (int city : out_of_range) {
        add("city " + std::to_string(city + 1) + " out of range [1, " +
            std::to_string(n) + "]");
    }
    if (first) return std::nullopt;
    return msg.str();
}

Cost tour_cost(const CostMatrix& matrix, const Tour& tour) {
    if (auto violation = validate_tour(tour.order, matrix.n)) {
        throw std::invalid_argument("tour_cost: " + *violation);
    }
    Cost total = 0;
    const int n = matrix.n;
    for (int k = 0; k + 1 < n; ++k) {
        total += matrix.at(tour.order[k], tour.order[k + 1]);
    }
    total += matrix.at(tour.order[n - 1], tour.order[0]);
    return total;
}

Tour tour_from_one_based(const std::vector<int>& order) {
    Tour t;
    t.order.reserve(order.size());
    for (int city : order) t.order.push_back(city - 1);
    return t;
}

std::vector<int> tour_to_one_based(const Tour& tour) {
    std::vector<int> out;
    out.reserve(tour.order.size());
    for (int city : tour.order) out.push_back(city + 1);
    return out;
}

std::string format_tour(const Tour& tour, char sep) {
    std::string out;
    for (std::size_t i = 0; i < tour.order.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(tour.order[i] + 1);
    }
    return out;
}

}  // namespace nodeshift
