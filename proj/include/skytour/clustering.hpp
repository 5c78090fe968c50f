#pragma once

#include "skytour/geometry.hpp"

#include <cstdint>
#include <vector>

namespace skytour {

struct Clustering {
    int k = 0;
    std::vector<int> assignment;        // per-point cluster index, < k
    std::vector<PlanarPoint> centroids; // k centroids
    double inertia_m2 = 0.0;            // sum of squared point-to-centroid distances
};

/// Lloyd iterations from k-means++ seeding with a caller-supplied seed. Stops
/// when the inertia improvement drops below `tol_m2` or after `max_iter`
/// iterations. Empty clusters are repaired by reassigning the point farthest
/// from its current centroid. Throws KTooLarge if k > |points|.
Clustering kmeans(const std::vector<PlanarPoint>& points, std::size_t k, std::uint64_t seed,
                  int max_iter = 100, double tol_m2 = 1e-6);

/// The k disjoint point-index subsets induced by a clustering, ordered by
/// cluster index.
std::vector<std::vector<int>> cluster_subsets(const Clustering& clustering);

}  // namespace skytour
