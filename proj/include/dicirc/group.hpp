#pragma once

#include <dicirc/spec.hpp>

#include <compare>
#include <vector>

namespace dicirc {

/// An element alpha^exp beta^flip of Dic_n, with exp reduced mod 2n.
struct Element {
    int exp = 0;
    bool flip = false;

    auto operator<=>(const Element &) const = default;
};

constexpr auto identity_element() -> Element { return {}; }

/// Group product in Dic_n = <alpha, beta | alpha^2n, beta^2 = alpha^n, beta^-1 alpha beta = alpha^-1>.
constexpr auto multiply(Element g, Element h, int n) -> Element
{
    const int m = 2 * n;
    if (! g.flip)
        return { mod(g.exp + h.exp, m), h.flip };
    if (! h.flip)
        return { mod(g.exp - h.exp, m), true };
    return { mod(g.exp - h.exp + n, m), false };
}

constexpr auto inverse(Element g, int n) -> Element
{
    if (! g.flip)
        return { mod(-g.exp, 2 * n), false };
    return { mod(g.exp + n, 2 * n), true };
}

auto power(Element g, long long e, int n) -> Element;
auto element_order(Element g, int n) -> int;

/// Vertex numbering used throughout: alpha^i -> i, alpha^i beta -> 2n + i.
constexpr auto element_index(Element g, int n) -> int { return g.flip ? 2 * n + g.exp : g.exp; }
constexpr auto element_at(int index, int n) -> Element
{
    return index < 2 * n ? Element{ index, false } : Element{ index - 2 * n, true };
}

/// All 4n elements in index order.
auto group_elements(int n) -> std::vector<Element>;

enum class SubgroupKind { Cyclic, Dicyclic };

struct Subgroup {
    int order = 1;
    std::vector<Element> members; // sorted
    SubgroupKind kind = SubgroupKind::Cyclic;

    auto contains(Element g) const -> bool;
    auto operator==(const Subgroup &) const -> bool = default;
};

/// Closure of the given generators under multiplication.
auto generate_subgroup(std::span<const Element> generators, int n) -> Subgroup;

/// <alpha> for odd n; <alpha>, <alpha^2, beta>, <alpha^2, alpha beta> for even n.
auto index2_subgroups(int n) -> std::vector<Subgroup>;

/// One canonical subgroup H^(m) of order m: <alpha^(2n/m)> when m | 2n, otherwise
/// <alpha^(n/d), beta> with d = m/4. Throws InvalidOrder unless m | 4n.
auto subgroup_of_order(int n, int m) -> Subgroup;

/// The automorphism alpha -> alpha^u, beta -> alpha^v beta of Dic_n.
struct AutomorphismParams {
    int u = 1;
    int v = 0;
};

auto is_automorphism(const AutomorphismParams & p, int n) -> bool;
auto apply_automorphism(const AutomorphismParams & p, Element g, int n) -> Element;

/// (n, R, T) -> (n, uR, uT + v). Throws InvalidAutomorphism when gcd(u, 2n) != 1.
auto apply_automorphism(const AutomorphismParams & p, const ConnectionSpec & spec) -> ConnectionSpec;

} // namespace dicirc
