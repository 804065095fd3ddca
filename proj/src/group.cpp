#include <dicirc/error.hpp>
#include <dicirc/group.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace dicirc {

auto power(Element g, long long e, int n) -> Element
{
    if (e < 0) {
        g = inverse(g, n);
        e = -e;
    }
    Element result = identity_element();
    while (e > 0) {
        if (e & 1)
            result = multiply(result, g, n);
        g = multiply(g, g, n);
        e >>= 1;
    }
    return result;
}

auto element_order(Element g, int n) -> int
{
    Element x = g;
    int order = 1;
    while (x != identity_element()) {
        x = multiply(x, g, n);
        ++order;
    }
    return order;
}

auto group_elements(int n) -> std::vector<Element>
{
    std::vector<Element> result;
    result.reserve(static_cast<std::size_t>(4 * n));
    for (int i = 0; i < 4 * n; ++i)
        result.push_back(element_at(i, n));
    return result;
}

auto Subgroup::contains(Element g) const -> bool
{
    return std::binary_search(members.begin(), members.end(), g);
}

auto generate_subgroup(std::span<const Element> generators, int n) -> Subgroup
{
    std::set<Element> seen{ identity_element() };
    std::vector<Element> queue{ identity_element() };
    while (! queue.empty()) {
        auto x = queue.back();
        queue.pop_back();
        for (auto g : generators) {
            auto y = multiply(x, g, n);
            if (seen.insert(y).second)
                queue.push_back(y);
        }
    }

    Subgroup result;
    result.members.assign(seen.begin(), seen.end());
    result.order = static_cast<int>(result.members.size());
    result.kind = std::any_of(result.members.begin(), result.members.end(), [](Element e) { return e.flip; })
        ? SubgroupKind::Dicyclic : SubgroupKind::Cyclic;
    return result;
}

auto index2_subgroups(int n) -> std::vector<Subgroup>
{
    std::vector<Subgroup> result;
    std::vector<Element> alpha{ { 1, false } };
    result.push_back(generate_subgroup(alpha, n));
    if (n % 2 == 0) {
        std::vector<Element> a{ { 2 % (2 * n), false }, { 0, true } };
        std::vector<Element> b{ { 2 % (2 * n), false }, { 1, true } };
        result.push_back(generate_subgroup(a, n));
        result.push_back(generate_subgroup(b, n));
    }
    return result;
}

auto subgroup_of_order(int n, int m) -> Subgroup
{
    if (m <= 0 || (4 * n) % m != 0)
        throw Error(ErrorCode::InvalidOrder, "no subgroup of order " + std::to_string(m) + " in Dic_" + std::to_string(n));

    if ((2 * n) % m == 0) {
        std::vector<Element> gens{ { mod(2 * n / m, 2 * n), false } };
        return generate_subgroup(gens, n);
    }

    int d = m / 4;
    std::vector<Element> gens{ { mod(n / d, 2 * n), false }, { 0, true } };
    return generate_subgroup(gens, n);
}

auto is_automorphism(const AutomorphismParams & p, int n) -> bool
{
    int m = 2 * n;
    if (std::gcd(mod(p.u, m), m) != 1)
        return false;

    // relation check on the images a = alpha^u, b = alpha^v beta
    Element a{ mod(p.u, m), false }, b{ mod(p.v, m), true };
    bool ok = power(a, m, n) == identity_element();
    ok = ok && multiply(b, b, n) == power(a, n, n);
    ok = ok && multiply(multiply(inverse(b, n), a, n), b, n) == inverse(a, n);
    return ok;
}

auto apply_automorphism(const AutomorphismParams & p, Element g, int n) -> Element
{
    int m = 2 * n;
    if (! g.flip)
        return { mod(static_cast<long long>(p.u) * g.exp, m), false };
    return { mod(static_cast<long long>(p.u) * g.exp + p.v, m), true };
}

auto apply_automorphism(const AutomorphismParams & p, const ConnectionSpec & spec) -> ConnectionSpec
{
    if (! is_automorphism(p, spec.n))
        throw Error(ErrorCode::InvalidAutomorphism,
            "u=" + std::to_string(p.u) + " is not a unit modulo " + std::to_string(2 * spec.n));
    return { spec.n, spec.R.scaled(p.u), spec.T.scaled(p.u).translated(p.v) };
}

} // namespace dicirc
