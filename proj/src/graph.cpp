#include "subdom/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace subdom {

namespace {
    auto words_for(std::size_t universe) -> std::size_t
    {
        return (universe + VertexSet::word_bits - 1) / VertexSet::word_bits;
    }

    auto check_vertex(std::size_t universe, Vertex v) -> void
    {
        if (v >= universe)
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range for "
                    + std::to_string(universe) + " vertices");
    }
}

VertexSet::VertexSet(std::size_t universe) :
    universe_(universe),
    words_(words_for(universe), 0)
{
}

auto VertexSet::full(std::size_t universe) -> VertexSet
{
    VertexSet s(universe);
    std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
    if (auto tail = universe % word_bits; tail != 0)
        s.words_.back() = (std::uint64_t{1} << tail) - 1;
    return s;
}

auto VertexSet::of(std::size_t universe, std::span<const Vertex> members) -> VertexSet
{
    VertexSet s(universe);
    for (auto v : members)
        s.set(v);
    return s;
}

auto VertexSet::test(Vertex v) const -> bool
{
    check_vertex(universe_, v);
    return (words_[v / word_bits] >> (v % word_bits)) & 1U;
}

auto VertexSet::set(Vertex v) -> void
{
    check_vertex(universe_, v);
    words_[v / word_bits] |= std::uint64_t{1} << (v % word_bits);
}

auto VertexSet::reset(Vertex v) -> void
{
    check_vertex(universe_, v);
    words_[v / word_bits] &= ~(std::uint64_t{1} << (v % word_bits));
}

auto VertexSet::count() const noexcept -> std::size_t
{
    std::size_t total = 0;
    for (auto w : words_)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

auto VertexSet::empty() const noexcept -> bool
{
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

auto VertexSet::all() const noexcept -> bool
{
    return count() == universe_;
}

auto VertexSet::next(Vertex from) const noexcept -> Vertex
{
    if (from >= universe_)
        return universe_;
    auto block = from / word_bits;
    auto word = words_[block] & (~std::uint64_t{0} << (from % word_bits));
    while (true) {
        if (word != 0)
            return block * word_bits + static_cast<std::size_t>(std::countr_zero(word));
        if (++block == words_.size())
            return universe_;
        word = words_[block];
    }
}

auto VertexSet::members() const -> std::vector<Vertex>
{
    std::vector<Vertex> out;
    out.reserve(count());
    for (auto v = next(0); v < universe_; v = next(v + 1))
        out.push_back(v);
    return out;
}

auto VertexSet::operator|=(const VertexSet & other) -> VertexSet &
{
    if (other.universe_ != universe_)
        throw std::invalid_argument("vertex set universes differ");
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

auto VertexSet::operator&=(const VertexSet & other) -> VertexSet &
{
    if (other.universe_ != universe_)
        throw std::invalid_argument("vertex set universes differ");
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= other.words_[i];
    return *this;
}

auto operator|(VertexSet lhs, const VertexSet & rhs) -> VertexSet
{
    return lhs |= rhs;
}

auto operator&(VertexSet lhs, const VertexSet & rhs) -> VertexSet
{
    return lhs &= rhs;
}

Graph::Graph(std::size_t n) :
    rows_(n, VertexSet(n))
{
}

auto Graph::from_edges(std::size_t n, std::span<const Edge> edges) -> Graph
{
    GraphBuilder b(n);
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    return std::move(b).build();
}

auto Graph::neighbours(Vertex v) const -> const VertexSet &
{
    check_vertex(order(), v);
    return rows_[v];
}

auto Graph::degree(Vertex v) const -> std::size_t
{
    return neighbours(v).count();
}

auto Graph::adjacent(Vertex u, Vertex v) const -> bool
{
    return neighbours(u).test(v);
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex v = 0; v < order(); ++v)
        for (auto u = rows_[v].next(0); u < v; u = rows_[v].next(u + 1))
            out.emplace_back(u, v);
    return out;
}

GraphBuilder::GraphBuilder(std::size_t n) :
    graph_(n)
{
}

auto GraphBuilder::add_edge(Vertex u, Vertex v) -> GraphBuilder &
{
    auto n = graph_.order();
    if (u >= n || v >= n)
        throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v)
                + " has an endpoint outside 0.." + std::to_string(n) + "-1");
    if (u == v)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (! graph_.rows_[u].test(v)) {
        graph_.rows_[u].set(v);
        graph_.rows_[v].set(u);
        ++graph_.edge_count_;
    }
    return *this;
}

auto DegreeSequence::from_degrees(std::span<const std::size_t> degrees) -> DegreeSequence
{
    auto n = degrees.size();
    std::vector<std::size_t> buckets(n, 0);
    for (auto d : degrees) {
        if (d >= n)
            throw std::invalid_argument("degree " + std::to_string(d) + " impossible on "
                    + std::to_string(n) + " vertices");
        ++buckets[d];
    }

    DegreeSequence seq;
    seq.degrees_.reserve(n);
    seq.prefix_.reserve(n + 1);
    for (auto d = n; d-- > 0; )
        for (std::size_t c = 0; c < buckets[d]; ++c) {
            seq.degrees_.push_back(d);
            seq.prefix_.push_back(seq.prefix_.back() + d);
        }
    return seq;
}

auto DegreeSequence::max_degree() const noexcept -> std::size_t
{
    return degrees_.empty() ? 0 : degrees_.front();
}

auto DegreeSequence::min_degree() const noexcept -> std::size_t
{
    return degrees_.empty() ? 0 : degrees_.back();
}

auto degree_sequence(const Graph & g) -> DegreeSequence
{
    std::vector<std::size_t> degrees(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        degrees[v] = g.degree(v);
    return DegreeSequence::from_degrees(degrees);
}

auto is_isolate_free(const Graph & g) -> bool
{
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.neighbours(v).empty())
            return false;
    return true;
}

auto is_connected(const Graph & g) -> bool
{
    auto n = g.order();
    if (n <= 1)
        return true;
    VertexSet seen(n), frontier(n);
    seen.set(0);
    frontier.set(0);
    while (! frontier.empty()) {
        VertexSet reached(n);
        for (auto v = frontier.next(0); v < n; v = frontier.next(v + 1))
            reached |= g.neighbours(v);
        frontier = VertexSet(n);
        for (auto v = reached.next(0); v < n; v = reached.next(v + 1))
            if (! seen.test(v)) {
                seen.set(v);
                frontier.set(v);
            }
    }
    return seen.all();
}

auto disjoint_union(const Graph & g, const Graph & h) -> Graph
{
    auto offset = g.order();
    GraphBuilder b(offset + h.order());
    for (auto [u, v] : g.edges())
        b.add_edge(u, v);
    for (auto [u, v] : h.edges())
        b.add_edge(u + offset, v + offset);
    return std::move(b).build();
}

auto open_neighborhood(const Graph & g, Vertex v) -> VertexSet
{
    return g.neighbours(v);
}

namespace {
    auto expect_params(Family family, std::span<const std::size_t> params, std::size_t count) -> void
    {
        if (params.size() != count)
            throw std::invalid_argument(std::string(family_name(family)) + " takes "
                    + std::to_string(count) + " parameter(s), got " + std::to_string(params.size()));
    }

    auto require(bool ok, Family family, const char * what) -> void
    {
        if (! ok)
            throw std::invalid_argument(std::string(family_name(family)) + ": " + what);
    }
}

auto generate_family(Family family, std::span<const std::size_t> params) -> Graph
{
    switch (family) {
        case Family::path: {
            expect_params(family, params, 1);
            auto n = params[0];
            require(n >= 1, family, "needs n >= 1");
            GraphBuilder b(n);
            for (Vertex v = 1; v < n; ++v)
                b.add_edge(v - 1, v);
            return std::move(b).build();
        }
        case Family::cycle: {
            expect_params(family, params, 1);
            auto n = params[0];
            require(n >= 3, family, "needs n >= 3");
            GraphBuilder b(n);
            for (Vertex v = 0; v < n; ++v)
                b.add_edge(v, (v + 1) % n);
            return std::move(b).build();
        }
        case Family::star: {
            expect_params(family, params, 1);
            auto n = params[0];
            require(n >= 2, family, "needs n >= 2");
            GraphBuilder b(n);
            for (Vertex v = 1; v < n; ++v)
                b.add_edge(0, v);
            return std::move(b).build();
        }
        case Family::double_star: {
            expect_params(family, params, 2);
            auto a = params[0], c = params[1];
            require(a >= 1 && c >= 1, family, "needs at least one leaf on each centre");
            GraphBuilder b(a + c + 2);
            b.add_edge(0, 1);
            for (Vertex v = 2; v < a + 2; ++v)
                b.add_edge(0, v);
            for (Vertex v = a + 2; v < a + c + 2; ++v)
                b.add_edge(1, v);
            return std::move(b).build();
        }
        case Family::complete: {
            expect_params(family, params, 1);
            auto n = params[0];
            require(n >= 1, family, "needs n >= 1");
            GraphBuilder b(n);
            for (Vertex v = 0; v < n; ++v)
                for (Vertex u = 0; u < v; ++u)
                    b.add_edge(u, v);
            return std::move(b).build();
        }
        case Family::complete_bipartite: {
            expect_params(family, params, 2);
            auto a = params[0], c = params[1];
            require(a >= 1 && c >= 1, family, "needs both sides non-empty");
            GraphBuilder b(a + c);
            for (Vertex u = 0; u < a; ++u)
                for (Vertex v = a; v < a + c; ++v)
                    b.add_edge(u, v);
            return std::move(b).build();
        }
        case Family::circulant: {
            require(params.size() >= 2, family, "needs n and at least one offset");
            auto n = params[0];
            require(n >= 2, family, "needs n >= 2");
            GraphBuilder b(n);
            for (auto s : params.subspan(1)) {
                require(s >= 1 && s < n, family, "offsets must lie in [1, n-1]");
                for (Vertex v = 0; v < n; ++v)
                    b.add_edge(v, (v + s) % n);
            }
            return std::move(b).build();
        }
    }
    throw std::invalid_argument("unknown graph family");
}

namespace {
    constexpr std::pair<std::string_view, Family> family_names[] = {
        {"path", Family::path},
        {"cycle", Family::cycle},
        {"star", Family::star},
        {"double_star", Family::double_star},
        {"complete", Family::complete},
        {"complete_bipartite", Family::complete_bipartite},
        {"circulant", Family::circulant},
    };
}

auto family_from_name(std::string_view name) -> Family
{
    std::string normalised(name);
    std::replace(normalised.begin(), normalised.end(), '-', '_');
    for (auto [label, family] : family_names)
        if (label == normalised)
            return family;
    throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
}

auto family_name(Family family) -> std::string_view
{
    for (auto [label, f] : family_names)
        if (f == family)
            return label;
    return "unknown";
}

} // namespace subdom
