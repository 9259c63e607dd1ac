#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "core/graph.hpp"

namespace qeg::test {

// Exhaustive isomorphism check over all vertex permutations; small n only.
inline bool isomorphic_bruteforce(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) {
        return false;
    }
    const auto n = a.order();
    std::vector<std::int64_t> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (std::int64_t u = 0; u < n && match; ++u) {
            for (std::int64_t v = u + 1; v < n && match; ++v) {
                if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) {
                    match = false;
                }
            }
        }
        if (match) {
            return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline Graph random_graph(std::mt19937& rng, std::int64_t n, double p) {
    Graph g(n);
    std::bernoulli_distribution edge(p);
    for (std::int64_t u = 0; u < n; ++u) {
        for (std::int64_t v = u + 1; v < n; ++v) {
            if (edge(rng)) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

inline Graph random_connected_graph(std::mt19937& rng, std::int64_t n, double p) {
    for (;;) {
        auto g = random_graph(rng, n, p);
        if (g.is_connected()) {
            return g;
        }
    }
}

}  // namespace qeg::test
