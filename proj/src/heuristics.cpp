#include "nodeshift/heuristics.hpp"

#include <stdexcept>

namespace nodeshift {

Tour nearest_neighbour(const CostMatrix& matrix, int start) {
    const int n = matrix.n;
    if (start < 0 || start >= n) {
        throw std::invalid_argument("nearest_neighbour: start city " +
                                    std::to_string(start + 1) + " outside [1, " +
                                    std::to_string(n) + "]");
    }

    std::vector<bool> visited(n, false);
    Tour tour;
    tour.order.reserve(n);
    int current = start;
    tour.order.push_back(current);
    visited[current] = true;

    for (int step = 1; step < n; ++step) {
        int nearest = -1;
        Cost best = 0;
        for (int city = 0; city < n; ++city) {
            if (visited[city]) continue;
            const Cost c = matrix.at(current, city);
            if (nearest < 0 || c < best) {  // scan order breaks ties to the smaller city
                nearest = city;
                best = c;
            }
        }
        visited[nearest] = true;
        tour.order.push_back(nearest);
        current = nearest;
    }
    return tour;
}

Tour best_nn_tour(const CostMatrix& matrix) {
    Tour best;
    Cost best_cost = 0;
    for (int start = 0; start < matrix.n; ++start) {
        Tour candidate = nearest_neighbour(matrix, start);
        const Cost c = tour_cost(matrix, candidate);
        if (start == 0 || c < best_cost) {  // strict: ties keep the smallest start
            best = std::move(candidate);
            best_cost = c;
        }
    }
    return best;
}

}  // namespace nodeshift
