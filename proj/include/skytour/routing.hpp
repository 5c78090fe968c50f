#pragma once

#include "skytour/geometry.hpp"

#include <Eigen/Core>

#include <vector>

namespace skytour {

/// Symmetric pairwise travel costs in meters.
struct DistanceMatrix {
    Eigen::MatrixXd d;
    int size() const { return static_cast<int>(d.rows()); }
    double operator()(int i, int j) const { return d(i, j); }
};

/// Closed tour: the edge from the last node back to the first is implied.
/// A singleton tour has cost 0.
struct Tour {
    std::vector<int> order;
    double cost_m = 0.0;
};

DistanceMatrix distance_matrix(const std::vector<PlanarPoint>& points);

/// The pair of distinct nodes with the shortest two-node subtour, ties broken
/// lexicographically by (i, j).
Tour cia_initial_pair(const DistanceMatrix& D, const std::vector<int>& nodes);

/// Cheapest-insertion tour over the given node subset: grow from the initial
/// pair by repeatedly inserting the node with the minimum insertion cost
/// c_ik + c_kj - c_ij at its minimizing edge. Ties broken by lowest node index,
/// then lowest edge position.
Tour cia_tour(const DistanceMatrix& D, const std::vector<int>& nodes);

/// From-scratch cost of a closed tour; matches the incrementally maintained cost.
double tour_cost(const Tour& tour, const DistanceMatrix& D);

}  // namespace skytour
