#include <dicirc/cayley.hpp>
#include <dicirc/classifier.hpp>
#include <dicirc/error.hpp>
#include <dicirc/structure.hpp>

#include <algorithm>
#include <sstream>

namespace dicirc {

namespace
{
    auto all_odd(const ResidueSet & s) -> bool
    {
        bool ok = true;
        s.for_each([&](int i) { ok = ok && (i % 2 == 1); });
        return ok;
    }

    auto line(std::initializer_list<std::string> parts) -> std::string
    {
        std::string s;
        for (auto & p : parts)
            s += p;
        return s;
    }
}

auto condition_iii(const ConnectionSpec & spec) -> ConditionIII
{
    ConditionIII result;
    auto & ev = result.evidence;
    const int n = spec.n, m = 2 * n;
    auto fail = [&](std::string what) {
        ev.push_back("violated: " + std::move(what));
        result.holds = false;
        return result;
    };

    if (n % 2 != 0)
        return fail("n = " + std::to_string(n) + " is odd");
    ev.push_back("n even");
    if (spec.R.empty() || spec.T.empty())
        return fail(spec.R.empty() ? "R is empty" : "T is empty");
    ev.push_back("R, T non-empty");
    if (! all_odd(spec.R) || ! all_odd(spec.T))
        return fail("R and T must lie in 1 + 2Z_2n");
    ev.push_back("R, T in 1 + 2Z_2n");

    int meet = spec.R.intersection_size(spec.T);
    if (meet >= n)
        return fail(line({ "|R n T| = ", std::to_string(meet), " is not < n = ", std::to_string(n) }));
    ev.push_back(line({ "|R n T| = ", std::to_string(meet), " < n" }));

    for (int i = 2; i < m; i += 2) {
        int rr = spec.R.intersection_size(spec.R.translated(i));
        int tt = spec.T.intersection_size(spec.T.translated(i));
        if (rr + tt != 2 * meet)
            return fail(line({ "i = ", std::to_string(i), ": |R n (i+R)| + |T n (i+T)| = ", std::to_string(rr), "+",
                std::to_string(tt), " != 2|R n T| = ", std::to_string(2 * meet) }));
    }
    ev.push_back(line({ "|R n (i+R)| + |T n (i+T)| = ", std::to_string(2 * meet), " for all i in 2Z_2n \\ {0}" }));

    for (int j = 2; j < m; j += 2) {
        int rt = spec.R.translated(j).intersection_size(spec.T);
        if (2 * rt != 2 * meet)
            return fail(line({ "j = ", std::to_string(j), ": 2|(j+R) n T| = ", std::to_string(2 * rt),
                " != 2|R n T| = ", std::to_string(2 * meet) }));
    }
    ev.push_back(line({ "2|(j+R) n T| = ", std::to_string(2 * meet), " for all j in 2Z_2n \\ {0}" }));

    result.holds = true;
    return result;
}

auto difference_set_of(const ConnectionSpec & spec) -> std::vector<int>
{
    const int n = spec.n;
    std::vector<Element> gens{ { mod(2, 2 * n), false }, { 0, true } };
    auto h = generate_subgroup(gens, n);
    std::vector<int> d;
    auto add = [&](Element g) {
        auto it = std::lower_bound(h.members.begin(), h.members.end(), g);
        if (it == h.members.end() || *it != g)
            throw Error(ErrorCode::PreconditionViolated, "element outside <alpha^2, beta>");
        d.push_back(static_cast<int>(it - h.members.begin()));
    };
    spec.R.for_each([&](int r) { add({ mod(r - 1, 2 * n), false }); });
    spec.T.for_each([&](int t) { add({ mod(t - 1, 2 * n), true }); });
    return d;
}

auto condition_iii_prime(const ConnectionSpec & spec) -> bool
{
    if (spec.n % 2 != 0)
        throw Error(ErrorCode::PreconditionViolated, "condition (iii') needs even n");
    if (spec.R.empty() || spec.T.empty() || ! all_odd(spec.R) || ! all_odd(spec.T))
        throw Error(ErrorCode::PreconditionViolated, "condition (iii') needs non-empty R, T in 1 + 2Z_2n");

    const int n = spec.n;
    std::vector<Element> gens{ { mod(2, 2 * n), false }, { 0, true } };
    auto table = GroupTable::of_subgroup(generate_subgroup(gens, n), n);
    return difference_set_lambda(table, difference_set_of(spec)).is_nontrivial_difference_set();
}

auto Classification::tag_name() const -> std::string
{
    return std::visit([](auto && t) -> std::string {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, drg_class::CompleteGraph>)
            return "CompleteGraph";
        else if constexpr (std::is_same_v<T, drg_class::CompleteMultipartite>)
            return "CompleteMultipartite";
        else if constexpr (std::is_same_v<T, drg_class::BipartiteD3Family>)
            return "BipartiteD3Family";
        else
            return "NotDistanceRegular";
    }, tag);
}

auto Classification::to_string() const -> std::string
{
    std::ostringstream out;
    out << tag_name();
    std::visit([&](auto && t) {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, drg_class::CompleteMultipartite>)
            out << "(" << t.t << "," << t.m << ")";
        else if constexpr (std::is_same_v<T, drg_class::BipartiteD3Family>)
            out << "(" << t.k << "," << t.mu << ")";
    }, tag);
    return out.str();
}

auto Classification::expected_array() const -> std::optional<IntersectionArray>
{
    return std::visit([](auto && t) -> std::optional<IntersectionArray> {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, drg_class::CompleteGraph>)
            return IntersectionArray{ { t.order - 1 }, { 1 } };
        else if constexpr (std::is_same_v<T, drg_class::CompleteMultipartite>) {
            int k = (t.t - 1) * t.m;
            return IntersectionArray{ { k, t.m - 1 }, { 1, k } };
        }
        else if constexpr (std::is_same_v<T, drg_class::BipartiteD3Family>)
            return IntersectionArray{ { t.k, t.k - 1, t.k - t.mu }, { 1, t.mu, t.k } };
        else
            return std::nullopt;
    }, tag);
}

auto classify(const ConnectionSpec & spec) -> Classification
{
    require_valid(spec);
    if (! validate_spec(spec).connected())
        throw Error(ErrorCode::DisconnectedSpec, format_spec(spec) + " does not generate Dic_n");

    Classification result;
    const int order = spec.order(), k = spec.valency();
    if (k == order - 1) {
        result.tag = drg_class::CompleteGraph{ order };
        result.evidence.push_back("|R| + |T| = 4n - 1");
        return result;
    }
    result.evidence.push_back("|R| + |T| = " + std::to_string(k) + " < 4n - 1");

    if (auto shape = complete_multipartite_shape(build_graph(spec))) {
        result.tag = drg_class::CompleteMultipartite{ shape->first, shape->second };
        result.evidence.push_back("complement is " + std::to_string(shape->first) + " disjoint copies of K_"
            + std::to_string(shape->second));
        return result;
    }
    result.evidence.push_back("complement is not a disjoint union of equal cliques");

    auto iii = condition_iii(spec);
    result.evidence.insert(result.evidence.end(), iii.evidence.begin(), iii.evidence.end());
    if (iii.holds) {
        result.tag = drg_class::BipartiteD3Family{ k, 2 * spec.R.intersection_size(spec.T) };
        return result;
    }
    result.tag = drg_class::NotDistanceRegular{ iii.evidence.back() };
    return result;
}

} // namespace dicirc
