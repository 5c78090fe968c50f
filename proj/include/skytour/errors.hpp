#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace skytour {

struct UncoverablePoIs : std::runtime_error {
    std::vector<int> poi_indices;
    explicit UncoverablePoIs(std::vector<int> indices)
        : std::runtime_error("PoIs covered by no candidate site: " + join(indices)),
          poi_indices(std::move(indices)) {}

  private:
    static std::string join(const std::vector<int>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ", ";
            s += std::to_string(v[i]);
        }
        return s;
    }
};

struct NodeLimitExceeded : std::runtime_error {
    explicit NodeLimitExceeded(long long limit)
        : std::runtime_error("branch-and-bound node limit exceeded: " + std::to_string(limit)) {}
};

struct TooFewNodes : std::runtime_error {
    explicit TooFewNodes(std::size_t n)
        : std::runtime_error("need at least 2 nodes, got " + std::to_string(n)) {}
};

struct KTooLarge : std::runtime_error {
    KTooLarge(std::size_t k, std::size_t n)
        : std::runtime_error("k=" + std::to_string(k) + " exceeds point count " + std::to_string(n)) {}
};

struct LTooLarge : std::runtime_error {
    LTooLarge(std::size_t l, std::size_t n)
        : std::runtime_error("L=" + std::to_string(l) + " exceeds point count " + std::to_string(n)) {}
};

struct DegenerateInput : std::runtime_error {
    explicit DegenerateInput(const std::string& what) : std::runtime_error(what) {}
};

struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace skytour
