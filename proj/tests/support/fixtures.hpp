#pragma once

#include "subdom/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace subdom::testing {

inline auto petersen() -> Graph
{
    GraphBuilder b(10);
    for (Vertex i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i, i + 5);
        b.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return std::move(b).build();
}

inline auto family(Family f, std::vector<std::size_t> params) -> Graph
{
    return generate_family(f, params);
}

/// G(n, p), then every isolated vertex is joined to a uniformly chosen other vertex.
inline auto random_isolate_free(std::size_t n, double p, std::mt19937_64 & rng) -> Graph
{
    GraphBuilder b(n);
    std::vector<std::size_t> degree(n, 0);
    std::bernoulli_distribution coin(p);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u = 0; u < v; ++u)
            if (coin(rng)) {
                b.add_edge(u, v);
                ++degree[u];
                ++degree[v];
            }
    std::uniform_int_distribution<Vertex> pick(0, n - 2);
    for (Vertex v = 0; v < n; ++v)
        if (degree[v] == 0) {
            auto u = pick(rng);
            if (u >= v)
                ++u;
            b.add_edge(u, v);
            ++degree[u];
            ++degree[v];
        }
    return std::move(b).build();
}

inline auto random_graph(std::size_t n, double p, std::mt19937_64 & rng) -> Graph
{
    GraphBuilder b(n);
    std::bernoulli_distribution coin(p);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u = 0; u < v; ++u)
            if (coin(rng))
                b.add_edge(u, v);
    return std::move(b).build();
}

/// Random order in [lo, hi] and edge density in [0.15, 0.7].
inline auto random_isolate_free_between(std::size_t lo, std::size_t hi, std::mt19937_64 & rng) -> Graph
{
    std::uniform_int_distribution<std::size_t> order(lo, hi);
    std::uniform_real_distribution<double> density(0.15, 0.7);
    auto n = order(rng);
    return random_isolate_free(n, density(rng), rng);
}

inline auto relabel(const Graph & g, const std::vector<Vertex> & perm) -> Graph
{
    GraphBuilder b(g.order());
    for (auto [u, v] : g.edges())
        b.add_edge(perm[u], perm[v]);
    return std::move(b).build();
}

inline auto random_permutation(std::size_t n, std::mt19937_64 & rng) -> std::vector<Vertex>
{
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

inline auto sorted_degrees(const Graph & g) -> std::vector<std::size_t>
{
    std::vector<std::size_t> out;
    for (Vertex v = 0; v < g.order(); ++v)
        out.push_back(g.degree(v));
    std::sort(out.rbegin(), out.rend());
    return out;
}

} // namespace subdom::testing
