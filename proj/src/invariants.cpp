#include "subdom/invariants.hpp"

#include <stdexcept>
#include <string>

namespace subdom {

auto operator<=>(std::uint64_t lhs, const Rational & rhs) -> std::strong_ordering
{
    // Operands are vertex counts, so the product stays well inside 64 bits.
    return lhs * rhs.denominator <=> rhs.numerator;
}

auto operator==(std::uint64_t lhs, const Rational & rhs) -> bool
{
    return (lhs <=> rhs) == std::strong_ordering::equal;
}

auto sub_total_domination(const DegreeSequence & d) -> std::size_t
{
    auto n = d.order();
    if (n == 0)
        throw std::domain_error("sub-total domination is undefined for the empty graph");
    if (d.min_degree() == 0)
        throw std::domain_error("sub-total domination requires an isolate-free graph");

    auto prefix = d.prefix();
    std::size_t k = 1;
    while (prefix[k] < n)
        ++k;
    return k;
}

auto BoundChain::holds() const -> bool
{
    if (max_degree == 0 || sub_t < order_over_max_degree)
        return false;
    return ! gamma_t || *gamma_t >= sub_t;
}

auto bound_chain(const Graph & g, std::optional<std::size_t> gamma_t) -> BoundChain
{
    if (g.order() < 2)
        throw std::domain_error("bound chain needs at least two vertices, got " + std::to_string(g.order()));
    if (! is_isolate_free(g))
        throw std::domain_error("bound chain requires an isolate-free graph");

    auto d = degree_sequence(g);
    BoundChain chain;
    chain.order = g.order();
    chain.max_degree = d.max_degree();
    chain.order_over_max_degree = Rational{g.order(), d.max_degree()};
    chain.sub_t = sub_total_domination(d);
    chain.gamma_t = gamma_t;
    return chain;
}

auto subadditivity_check(const Graph & g, const Graph & h) -> bool
{
    if (! is_isolate_free(g) || ! is_isolate_free(h))
        throw std::domain_error("subadditivity check requires isolate-free graphs");
    auto sub_g = sub_total_domination(degree_sequence(g));
    auto sub_h = sub_total_domination(degree_sequence(h));
    auto sub_union = sub_total_domination(degree_sequence(disjoint_union(g, h)));
    return sub_g + sub_h >= sub_union;
}

} // namespace subdom
