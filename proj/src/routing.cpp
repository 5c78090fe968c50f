#include "skytour/routing.hpp"

#include "skytour/errors.hpp"

#include <algorithm>
#include <limits>

namespace skytour {

DistanceMatrix distance_matrix(const std::vector<PlanarPoint>& points) {
    if (points.empty()) throw InputError("distance_matrix needs at least one point");
    const int n = static_cast<int>(points.size());
    DistanceMatrix D;
    D.d.resize(n, n);
    for (int i = 0; i < n; ++i) {
        D.d(i, i) = 0.0;
        for (int j = i + 1; j < n; ++j) {
            const double dist = (points[static_cast<std::size_t>(i)] -
                                 points[static_cast<std::size_t>(j)]).norm();
            D.d(i, j) = dist;
            D.d(j, i) = dist;
        }
    }
    return D;
}

Tour cia_initial_pair(const DistanceMatrix& D, const std::vector<int>& nodes) {
    if (nodes.size() < 2) throw TooFewNodes(nodes.size());
    std::vector<int> sorted = nodes;
    std::sort(sorted.begin(), sorted.end());
    int best_i = -1, best_j = -1;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < sorted.size(); ++a) {
        for (std::size_t b = a + 1; b < sorted.size(); ++b) {
            const double cost = D(sorted[a], sorted[b]) + D(sorted[b], sorted[a]);
            if (cost < best) {
                best = cost;
                best_i = sorted[a];
                best_j = sorted[b];
            }
        }
    }
    return {{best_i, best_j}, best};
}

Tour cia_tour(const DistanceMatrix& D, const std::vector<int>& nodes) {
    if (nodes.empty()) throw InputError("cia_tour needs at least one node");
    if (nodes.size() == 1) return {{nodes[0]}, 0.0};

    Tour tour = cia_initial_pair(D, nodes);
    std::vector<int> remaining;
    for (int v : nodes)
        if (v != tour.order[0] && v != tour.order[1]) remaining.push_back(v);
    std::sort(remaining.begin(), remaining.end());

    while (!remaining.empty()) {
        double best_delta = std::numeric_limits<double>::infinity();
        std::size_t best_node_pos = 0;
        std::size_t best_edge = 0;
        const std::size_t m = tour.order.size();
        for (std::size_t r = 0; r < remaining.size(); ++r) {
            const int k = remaining[r];
            for (std::size_t e = 0; e < m; ++e) {
                const int i = tour.order[e];
                const int j = tour.order[(e + 1) % m];
                const double delta = D(i, k) + D(k, j) - D(i, j);
                if (delta < best_delta) {  // ties keep the first (lowest node, then edge)
                    best_delta = delta;
                    best_node_pos = r;
                    best_edge = e;
                }
            }
        }
        tour.order.insert(tour.order.begin() + static_cast<std::ptrdiff_t>(best_edge) + 1,
                          remaining[best_node_pos]);
        tour.cost_m += best_delta;
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best_node_pos));
    }
    return tour;
}

double tour_cost(const Tour& tour, const DistanceMatrix& D) {
    const std::size_t n = tour.order.size();
    if (n < 2) return 0.0;
    double cost = 0.0;
    for (std::size_t i = 0; i < n; ++i) cost += D(tour.order[i], tour.order[(i + 1) % n]);
    return cost;
}

}  // namespace skytour
