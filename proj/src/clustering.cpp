#include "skytour/clustering.hpp"

#include "skytour/errors.hpp"

#include <algorithm>
#include <limits>
#include <random>

namespace skytour {

namespace {

double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<PlanarPoint> kmeanspp_init(const std::vector<PlanarPoint>& points, std::size_t k,
                                       std::mt19937_64& rng) {
    std::vector<PlanarPoint> centroids;
    centroids.reserve(k);
    centroids.push_back(points[rng() % points.size()]);

    std::vector<double> d2(points.size());
    while (centroids.size() < k) {
        double total = 0.0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& c : centroids)
                best = std::min(best, (points[i] - c).squaredNorm());
            d2[i] = best;
            total += best;
        }
        std::size_t pick = 0;
        if (total > 0.0) {
            const double target = unit_double(rng) * total;
            double acc = 0.0;
            for (std::size_t i = 0; i < points.size(); ++i) {
                acc += d2[i];
                if (acc >= target) {
                    pick = i;
                    break;
                }
            }
        } else {
            pick = rng() % points.size();  // all points coincide with a centroid
        }
        centroids.push_back(points[pick]);
    }
    return centroids;
}

}  // namespace

Clustering kmeans(const std::vector<PlanarPoint>& points, std::size_t k, std::uint64_t seed,
                  int max_iter, double tol_m2) {
    if (k < 1 || points.empty()) throw InputError("kmeans needs k >= 1 and at least one point");
    if (k > points.size()) throw KTooLarge(k, points.size());

    std::mt19937_64 rng(seed);
    std::vector<PlanarPoint> centroids = kmeanspp_init(points, k, rng);
    std::vector<int> assignment(points.size(), 0);
    double prev_inertia = std::numeric_limits<double>::infinity();
    double inertia = 0.0;

    for (int iter = 0; iter < max_iter; ++iter) {
        // Assign each point to its nearest centroid, ties to the lowest index.
        for (std::size_t i = 0; i < points.size(); ++i) {
            double best = std::numeric_limits<double>::infinity();
            int best_c = 0;
            for (std::size_t c = 0; c < k; ++c) {
                const double d = (points[i] - centroids[c]).squaredNorm();
                if (d < best) {
                    best = d;
                    best_c = static_cast<int>(c);
                }
            }
            assignment[i] = best_c;
        }

        // Repair empty clusters with the point farthest from its centroid.
        std::vector<int> counts(k, 0);
        for (int a : assignment) ++counts[static_cast<std::size_t>(a)];
        for (std::size_t c = 0; c < k; ++c) {
            if (counts[c] > 0) continue;
            double worst = -1.0;
            std::size_t worst_i = 0;
            for (std::size_t i = 0; i < points.size(); ++i) {
                if (counts[static_cast<std::size_t>(assignment[i])] <= 1) continue;
                const double d =
                    (points[i] - centroids[static_cast<std::size_t>(assignment[i])]).squaredNorm();
                if (d > worst) {
                    worst = d;
                    worst_i = i;
                }
            }
            --counts[static_cast<std::size_t>(assignment[worst_i])];
            assignment[worst_i] = static_cast<int>(c);
            ++counts[c];
            centroids[c] = points[worst_i];
        }

        inertia = 0.0;
        for (std::size_t i = 0; i < points.size(); ++i)
            inertia += (points[i] - centroids[static_cast<std::size_t>(assignment[i])]).squaredNorm();

        if (prev_inertia - inertia < tol_m2) break;
        prev_inertia = inertia;

        // Move centroids to the cluster means.
        std::vector<PlanarPoint> sums(k, PlanarPoint::Zero());
        for (std::size_t i = 0; i < points.size(); ++i)
            sums[static_cast<std::size_t>(assignment[i])] += points[i];
        for (std::size_t c = 0; c < k; ++c) centroids[c] = sums[c] / counts[c];
    }

    Clustering result;
    result.k = static_cast<int>(k);
    result.assignment = std::move(assignment);
    result.centroids = std::move(centroids);
    result.inertia_m2 = inertia;
    return result;
}

std::vector<std::vector<int>> cluster_subsets(const Clustering& clustering) {
    std::vector<std::vector<int>> subsets(static_cast<std::size_t>(clustering.k));
    for (std::size_t i = 0; i < clustering.assignment.size(); ++i)
        subsets[static_cast<std::size_t>(clustering.assignment[i])].push_back(static_cast<int>(i));
    return subsets;
}

}  // namespace skytour
