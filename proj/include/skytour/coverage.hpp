#pragma once

#include "skytour/geometry.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace skytour {

/// Sparse site-to-PoI incidence: rows[i] holds the sorted PoI indices visible
/// from candidate site i.
struct CoverageMatrix {
    int n_sites = 0;
    int n_pois = 0;
    std::vector<std::vector<int>> rows;
};

enum class CoverMethod { greedy, exact };

struct CoverSolution {
    std::vector<int> selected;  // sorted site indices
    int objective = 0;          // = selected.size()
    CoverMethod method = CoverMethod::greedy;
};

/// C_ij = 1 iff the Euclidean distance from site i to PoI j is <= R_j (inclusive).
CoverageMatrix build_coverage(const std::vector<CandidateSite>& sites,
                              const std::vector<PoI>& pois);

/// Greedy set cover: repeatedly pick the site covering the most uncovered PoIs,
/// ties to the lowest site index. Throws UncoverablePoIs if some PoI has an
/// empty column.
CoverSolution greedy_cover(const CoverageMatrix& C);

/// Minimum-cardinality cover by depth-first branch and bound. Branches on the
/// least-covered uncovered PoI; intended for small instances and testing.
/// Throws NodeLimitExceeded when the search exceeds `node_limit` nodes.
CoverSolution exact_cover(const CoverageMatrix& C, long long node_limit = 10'000'000);

}  // namespace skytour
