#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace subdom {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Fixed-universe bit set over vertices 0..universe-1, stored in 64-bit words.
/// Bits past the universe are always zero.
class VertexSet {
public:
    static constexpr std::size_t word_bits = 64;

    VertexSet() = default;
    explicit VertexSet(std::size_t universe);

    static auto full(std::size_t universe) -> VertexSet;
    static auto of(std::size_t universe, std::span<const Vertex> members) -> VertexSet;

    auto universe() const noexcept -> std::size_t { return universe_; }
    auto words() const noexcept -> std::span<const std::uint64_t> { return words_; }

    auto test(Vertex v) const -> bool;
    auto set(Vertex v) -> void;
    auto reset(Vertex v) -> void;

    auto count() const noexcept -> std::size_t;
    auto empty() const noexcept -> bool;
    auto all() const noexcept -> bool;

    /// Lowest member >= from, or universe() if there is none.
    auto next(Vertex from = 0) const noexcept -> Vertex;

    auto members() const -> std::vector<Vertex>;

    auto operator|=(const VertexSet & other) -> VertexSet &;
    auto operator&=(const VertexSet & other) -> VertexSet &;
    auto operator==(const VertexSet & other) const -> bool = default;

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

auto operator|(VertexSet lhs, const VertexSet & rhs) -> VertexSet;
auto operator&(VertexSet lhs, const VertexSet & rhs) -> VertexSet;

/// Simple undirected graph on vertices 0..n-1 with bit-row adjacency.
/// Immutable once built; use GraphBuilder or from_edges to construct.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
    /// Repeated edges collapse.
    static auto from_edges(std::size_t n, std::span<const Edge> edges) -> Graph;

    auto order() const noexcept -> std::size_t { return rows_.size(); }
    auto size() const noexcept -> std::size_t { return edge_count_; }

    auto neighbours(Vertex v) const -> const VertexSet &;
    auto degree(Vertex v) const -> std::size_t;
    auto adjacent(Vertex u, Vertex v) const -> bool;

    /// Edges (u, v) with u < v, ordered by v then u.
    auto edges() const -> std::vector<Edge>;

    auto operator==(const Graph & other) const -> bool = default;

private:
    friend class GraphBuilder;

    std::vector<VertexSet> rows_;
    std::size_t edge_count_ = 0;
};

class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n);

    /// Idempotent. Throws std::invalid_argument on self-loops or bad indices.
    auto add_edge(Vertex u, Vertex v) -> GraphBuilder &;
    auto order() const noexcept -> std::size_t { return graph_.order(); }

    auto build() && -> Graph { return std::move(graph_); }

private:
    Graph graph_;
};

/// Degrees in non-increasing order with prefix sums; prefix[k] = d_1 + ... + d_k.
class DegreeSequence {
public:
    DegreeSequence() = default;

    /// Counting sort over [0, n-1]; throws std::invalid_argument if any
    /// degree is outside that range.
    static auto from_degrees(std::span<const std::size_t> degrees) -> DegreeSequence;

    auto order() const noexcept -> std::size_t { return degrees_.size(); }
    auto degrees() const noexcept -> std::span<const std::size_t> { return degrees_; }
    auto prefix() const noexcept -> std::span<const std::uint64_t> { return prefix_; }

    /// Zero for the empty sequence.
    auto max_degree() const noexcept -> std::size_t;
    auto min_degree() const noexcept -> std::size_t;

private:
    std::vector<std::size_t> degrees_;
    std::vector<std::uint64_t> prefix_{0};
};

enum class Family { path, cycle, star, double_star, complete, complete_bipartite, circulant };

auto degree_sequence(const Graph & g) -> DegreeSequence;

/// Vacuously true for the empty graph.
auto is_isolate_free(const Graph & g) -> bool;

/// True for n <= 1.
auto is_connected(const Graph & g) -> bool;

/// Vertices of h are shifted by g.order().
auto disjoint_union(const Graph & g, const Graph & h) -> Graph;

/// Throws std::out_of_range for v >= n.
auto open_neighborhood(const Graph & g, Vertex v) -> VertexSet;

/// Labelings:
///   path(n)                 0-1-...-(n-1), n >= 1
///   cycle(n)                path plus (n-1)-0, n >= 3
///   star(n)                 centre 0, leaves 1..n-1, n >= 2
///   double_star(a, b)       centres 0-1; leaves 2..a+1 on 0, a+2..a+b+1 on 1
///   complete(n)             n >= 1
///   complete_bipartite(a,b) sides 0..a-1 and a..a+b-1
///   circulant(n, s...)      i ~ i +- s (mod n), each s in [1, n-1]
/// Throws std::invalid_argument on parameters outside these domains.
auto generate_family(Family family, std::span<const std::size_t> params) -> Graph;

/// Parses "path", "double_star", "complete-bipartite", ... ; throws std::invalid_argument.
auto family_from_name(std::string_view name) -> Family;
auto family_name(Family family) -> std::string_view;

} // namespace subdom
