#include "skytour/coverage.hpp"

#include "skytour/errors.hpp"

#include <algorithm>
#include <cmath>

namespace skytour {

CoverageMatrix build_coverage(const std::vector<CandidateSite>& sites,
                              const std::vector<PoI>& pois) {
    CoverageMatrix C;
    C.n_sites = static_cast<int>(sites.size());
    C.n_pois = static_cast<int>(pois.size());
    C.rows.resize(sites.size());
    for (std::size_t i = 0; i < sites.size(); ++i) {
        for (std::size_t j = 0; j < pois.size(); ++j) {
            const double d = (sites[i].position - pois[j].position).norm();
            if (d <= pois[j].radius_m) C.rows[i].push_back(static_cast<int>(j));
        }
    }
    return C;
}

namespace {

std::vector<int> uncoverable_pois(const CoverageMatrix& C) {
    std::vector<char> covered(static_cast<std::size_t>(C.n_pois), 0);
    for (const auto& row : C.rows)
        for (int j : row) covered[static_cast<std::size_t>(j)] = 1;
    std::vector<int> missing;
    for (int j = 0; j < C.n_pois; ++j)
        if (!covered[static_cast<std::size_t>(j)]) missing.push_back(j);
    return missing;
}

}  // namespace

CoverSolution greedy_cover(const CoverageMatrix& C) {
    if (auto missing = uncoverable_pois(C); !missing.empty())
        throw UncoverablePoIs(std::move(missing));

    std::vector<char> covered(static_cast<std::size_t>(C.n_pois), 0);
    int n_covered = 0;
    CoverSolution sol;
    sol.method = CoverMethod::greedy;
    while (n_covered < C.n_pois) {
        int best_site = -1;
        int best_gain = 0;
        for (int i = 0; i < C.n_sites; ++i) {
            int gain = 0;
            for (int j : C.rows[static_cast<std::size_t>(i)])
                if (!covered[static_cast<std::size_t>(j)]) ++gain;
            if (gain > best_gain) {  // ties keep the lowest index
                best_gain = gain;
                best_site = i;
            }
        }
        sol.selected.push_back(best_site);
        for (int j : C.rows[static_cast<std::size_t>(best_site)]) {
            if (!covered[static_cast<std::size_t>(j)]) {
                covered[static_cast<std::size_t>(j)] = 1;
                ++n_covered;
            }
        }
    }
    std::sort(sol.selected.begin(), sol.selected.end());
    sol.objective = static_cast<int>(sol.selected.size());
    return sol;
}

namespace {

struct BnB {
    const CoverageMatrix& C;
    std::vector<std::vector<int>> cols;  // per-PoI list of covering sites
    long long node_limit;
    long long nodes = 0;
    int max_row = 1;  // largest row cardinality, for the bound
    std::vector<int> best;
    std::vector<int> current;
    std::vector<int> cover_count;  // per-PoI count of selected covering sites

    explicit BnB(const CoverageMatrix& c, long long limit) : C(c), node_limit(limit) {
        cols.resize(static_cast<std::size_t>(C.n_pois));
        for (int i = 0; i < C.n_sites; ++i) {
            max_row = std::max(max_row, static_cast<int>(C.rows[static_cast<std::size_t>(i)].size()));
            for (int j : C.rows[static_cast<std::size_t>(i)])
                cols[static_cast<std::size_t>(j)].push_back(i);
        }
        cover_count.assign(static_cast<std::size_t>(C.n_pois), 0);
    }

    void search(int n_uncovered) {
        if (++nodes > node_limit) throw NodeLimitExceeded(node_limit);
        if (n_uncovered == 0) {
            if (best.empty() || current.size() < best.size()) best = current;
            return;
        }
        const int lower = static_cast<int>(current.size()) + (n_uncovered + max_row - 1) / max_row;
        if (!best.empty() && lower >= static_cast<int>(best.size())) return;

        // Branch on the uncovered PoI with the fewest covering sites.
        int pivot = -1;
        std::size_t pivot_deg = static_cast<std::size_t>(-1);
        for (int j = 0; j < C.n_pois; ++j) {
            if (cover_count[static_cast<std::size_t>(j)] > 0) continue;
            if (cols[static_cast<std::size_t>(j)].size() < pivot_deg) {
                pivot_deg = cols[static_cast<std::size_t>(j)].size();
                pivot = j;
            }
        }
        for (int site : cols[static_cast<std::size_t>(pivot)]) {
            current.push_back(site);
            int newly = 0;
            for (int j : C.rows[static_cast<std::size_t>(site)])
                if (cover_count[static_cast<std::size_t>(j)]++ == 0) ++newly;
            search(n_uncovered - newly);
            for (int j : C.rows[static_cast<std::size_t>(site)]) --cover_count[static_cast<std::size_t>(j)];
            current.pop_back();
        }
    }
};

}  // namespace

CoverSolution exact_cover(const CoverageMatrix& C, long long node_limit) {
    if (auto missing = uncoverable_pois(C); !missing.empty())
        throw UncoverablePoIs(std::move(missing));

    BnB bnb(C, node_limit);
    bnb.search(C.n_pois);
    CoverSolution sol;
    sol.method = CoverMethod::exact;
    sol.selected = bnb.best;
    std::sort(sol.selected.begin(), sol.selected.end());
    sol.objective = static_cast<int>(sol.selected.size());
    return sol;
}

}  // namespace skytour
