#pragma once

#include "nodeshift/tour.hpp"

namespace nodeshift {

/// Greedy construction: from the current city, go to the nearest unvisited
/// one; cost ties break towards the smaller city index, so the result is a
/// pure function of the matrix. Throws std::invalid_argument for a start
/// outside [0, n-1].
Tour nearest_neighbour(const CostMatrix& matrix, int start);

/// Cheapest nearest_neighbour tour over all n starts; cost ties keep the
/// smallest start city.
Tour best_nn_tour(const CostMatrix& matrix);

}  // namespace nodeshift
