#include "subdom/solver.hpp"

#include "subdom/invariants.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

namespace subdom {

auto is_td_set(const Graph & g, const VertexSet & s) -> TDCertificate
{
    if (s.universe() != g.order())
        throw std::invalid_argument("vertex set universe " + std::to_string(s.universe())
                + " does not match graph order " + std::to_string(g.order()));
    TDCertificate cert{s, s.count(), VertexSet(g.order())};
    for (auto v = s.next(0); v < g.order(); v = s.next(v + 1))
        cert.covered |= g.neighbours(v);
    return cert;
}

auto greedy_td_upper_bound(const Graph & g) -> TDCertificate
{
    if (! is_isolate_free(g))
        throw std::domain_error("greedy total domination requires an isolate-free graph");

    auto n = g.order();
    VertexSet chosen(n), covered(n);
    while (! covered.all()) {
        Vertex best = n;
        std::size_t best_gain = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (chosen.test(v))
                continue;
            auto fresh = g.neighbours(v).count() - (g.neighbours(v) & covered).count();
            if (fresh > best_gain) {
                best = v;
                best_gain = fresh;
            }
        }
        chosen.set(best);
        covered |= g.neighbours(best);
    }
    return is_td_set(g, chosen);
}

namespace {
    using Mask = std::uint64_t;

    struct BudgetExhausted {};

    class DeepeningSearch {
    public:
        DeepeningSearch(const Graph & g, std::optional<std::uint64_t> budget) :
            n_(g.order()),
            full_(n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1),
            budget_(budget)
        {
            adjacency_.resize(n_);
            for (Vertex v = 0; v < n_; ++v) {
                adjacency_[v] = g.neighbours(v).words()[0];
                max_degree_ = std::max<std::size_t>(max_degree_, std::popcount(adjacency_[v]));
            }

            candidates_.resize(n_);
            for (Vertex u = 0; u < n_; ++u) {
                auto & c = candidates_[u];
                for (auto rest = adjacency_[u]; rest != 0; rest &= rest - 1)
                    c.push_back(static_cast<Vertex>(std::countr_zero(rest)));
                std::stable_sort(c.begin(), c.end(), [&](Vertex a, Vertex b) {
                    return std::popcount(adjacency_[a]) > std::popcount(adjacency_[b]);
                });
            }
        }

        /// Throws BudgetExhausted.
        auto find(std::size_t k) -> std::optional<Mask>
        {
            limit_ = k;
            if (descend(0, 0, 0, 0))
                return found_;
            return std::nullopt;
        }

        auto nodes() const noexcept -> std::uint64_t { return nodes_; }

    private:
        auto descend(Mask chosen, Mask covered, std::size_t size, Mask excluded) -> bool
        {
            if (covered == full_) {
                found_ = chosen;
                return true;
            }
            if (budget_ && nodes_ >= *budget_)
                throw BudgetExhausted{};
            ++nodes_;

            auto uncovered = full_ & ~covered;
            auto remaining = static_cast<std::size_t>(std::popcount(uncovered));
            if (size + (remaining + max_degree_ - 1) / max_degree_ > limit_)
                return false;

            // Some neighbour of the lowest uncovered vertex must join the set.
            auto target = static_cast<Vertex>(std::countr_zero(uncovered));
            for (auto c : candidates_[target]) {
                auto bit = Mask{1} << c;
                if (excluded & bit)
                    continue;
                if (descend(chosen | bit, covered | adjacency_[c], size + 1, excluded))
                    return true;
                // Every set containing c has now been tried below this node.
                excluded |= bit;
            }
            return false;
        }

        std::size_t n_;
        Mask full_;
        std::optional<std::uint64_t> budget_;
        std::vector<Mask> adjacency_;
        std::vector<std::vector<Vertex>> candidates_;
        std::size_t max_degree_ = 0;
        std::size_t limit_ = 0;
        std::uint64_t nodes_ = 0;
        Mask found_ = 0;
    };

    auto to_vertex_set(Mask m, std::size_t n) -> VertexSet
    {
        VertexSet s(n);
        for (; m != 0; m &= m - 1)
            s.set(static_cast<Vertex>(std::countr_zero(m)));
        return s;
    }
}

auto gamma_t_exact(const Graph & g, const SolverOptions & options) -> SolveResult
{
    if (options.cap > max_solver_cap)
        throw std::invalid_argument("solver cap " + std::to_string(options.cap) + " exceeds "
                + std::to_string(max_solver_cap));
    auto n = g.order();
    if (n > options.cap)
        throw std::length_error("graph with " + std::to_string(n) + " vertices exceeds solver cap "
                + std::to_string(options.cap));
    if (n < 2)
        throw std::domain_error("total domination needs at least two vertices");
    if (! is_isolate_free(g))
        throw std::domain_error("total domination requires an isolate-free graph");

    auto lower = std::max<std::size_t>(2, sub_total_domination(degree_sequence(g)));
    auto greedy = greedy_td_upper_bound(g);

    DeepeningSearch search(g, options.budget);
    SolveResult result;
    try {
        for (auto k = lower; k < greedy.size; ++k) {
            if (auto found = search.find(k)) {
                result.gamma_t = k;
                result.certificate = is_td_set(g, to_vertex_set(*found, n));
                result.optimal = true;
                result.lower_bound = k;
                result.nodes = search.nodes();
                return result;
            }
            lower = k + 1;
        }
        result.optimal = true;
    }
    catch (const BudgetExhausted &) {
        result.optimal = false;
    }
    result.gamma_t = greedy.size;
    result.certificate = std::move(greedy);
    result.lower_bound = result.optimal ? result.gamma_t : lower;
    result.nodes = search.nodes();
    return result;
}

auto gamma_t_bruteforce(const Graph & g) -> std::size_t
{
    auto n = g.order();
    if (n > bruteforce_cap)
        throw std::length_error("brute force is limited to " + std::to_string(bruteforce_cap) + " vertices");

    auto dominates = [&](std::uint32_t subset) {
        for (Vertex v = 0; v < n; ++v) {
            bool has_neighbour = false;
            for (Vertex u = 0; u < n && ! has_neighbour; ++u)
                has_neighbour = ((subset >> u) & 1U) && g.adjacent(u, v);
            if (! has_neighbour)
                return false;
        }
        return true;
    };

    for (std::size_t k = 1; k <= n; ++k) {
        // Gosper's hack: all n-bit words with exactly k bits set, ascending.
        auto subset = (std::uint32_t{1} << k) - 1;
        auto end = std::uint32_t{1} << n;
        while (subset < end) {
            if (dominates(subset))
                return k;
            auto low = subset & -subset;
            auto ripple = subset + low;
            subset = (((ripple ^ subset) >> 2) / low) | ripple;
        }
    }
    throw std::domain_error("graph has no total dominating set (isolated vertex or empty graph)");
}

} // namespace subdom
