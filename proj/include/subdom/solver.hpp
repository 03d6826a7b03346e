#pragma once

#include "subdom/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>

namespace subdom {

inline constexpr std::size_t default_solver_cap = 32;
inline constexpr std::size_t max_solver_cap = 64;
inline constexpr std::size_t bruteforce_cap = 20;

/// A vertex set together with the union of its members' open neighbourhoods.
struct TDCertificate {
    VertexSet vertices;
    std::size_t size = 0;
    VertexSet covered;

    /// Every vertex, members included, has a neighbour in the set.
    auto valid() const -> bool { return covered.all(); }
};

/// Throws std::invalid_argument if s is over a different vertex universe.
auto is_td_set(const Graph & g, const VertexSet & s) -> TDCertificate;

struct SolverOptions {
    /// Largest order accepted; at most max_solver_cap.
    std::size_t cap = default_solver_cap;
    /// Search nodes allowed before giving up; unlimited when empty.
    std::optional<std::uint64_t> budget;
};

struct SolveResult {
    /// The optimum when optimal, otherwise the best upper bound found.
    std::size_t gamma_t = 0;
    TDCertificate certificate;
    bool optimal = false;
    /// Every size below this was ruled out.
    std::size_t lower_bound = 0;
    std::uint64_t nodes = 0;
};

/// Exact total domination number. Iterative deepening on the set size,
/// starting at max(2, sub_t), branching on the neighbours of the lowest
/// uncovered vertex. Throws std::domain_error on isolates or n < 2 and
/// std::length_error when n exceeds options.cap.
auto gamma_t_exact(const Graph & g, const SolverOptions & options = {}) -> SolveResult;

/// Exhaustive search by increasing subset size. Independent of
/// gamma_t_exact; used as its oracle. n <= bruteforce_cap.
auto gamma_t_bruteforce(const Graph & g) -> std::size_t;

/// Repeatedly adds the vertex with the most uncovered neighbours (lowest
/// index on ties) until every vertex is covered. Always valid.
auto greedy_td_upper_bound(const Graph & g) -> TDCertificate;

} // namespace subdom
