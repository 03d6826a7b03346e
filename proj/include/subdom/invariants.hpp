#pragma once

#include "subdom/graph.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>

namespace subdom {

/// Non-negative fraction kept unreduced; comparisons are exact.
struct Rational {
    std::uint64_t numerator = 0;
    std::uint64_t denominator = 1;

    auto ceil() const -> std::uint64_t { return (numerator + denominator - 1) / denominator; }
};

auto operator<=>(std::uint64_t lhs, const Rational & rhs) -> std::strong_ordering;
auto operator==(std::uint64_t lhs, const Rational & rhs) -> bool;

/// Least k with d_1 + ... + d_k >= n, by linear scan over the prefix sums.
/// Throws std::domain_error for an empty sequence or one containing a zero.
auto sub_total_domination(const DegreeSequence & d) -> std::size_t;

/// gamma_t >= sub_t >= n / max_degree. The fraction is never rounded.
struct BoundChain {
    std::size_t order = 0;
    std::size_t max_degree = 0;
    Rational order_over_max_degree;
    std::size_t sub_t = 0;
    std::optional<std::size_t> gamma_t;

    /// Whether every link of the chain holds, including gamma_t when present.
    auto holds() const -> bool;
};

/// Throws std::domain_error if g has an isolated vertex or fewer than two
/// vertices. A supplied gamma_t is recorded as is; holds() checks it.
auto bound_chain(const Graph & g, std::optional<std::size_t> gamma_t = std::nullopt) -> BoundChain;

/// sub_t(g) + sub_t(h) >= sub_t(g u h). Throws std::domain_error on isolates.
auto subadditivity_check(const Graph & g, const Graph & h) -> bool;

} // namespace subdom
