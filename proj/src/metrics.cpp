#include <dicirc/error.hpp>
#include <dicirc/metrics.hpp>

#include <sstream>

namespace dicirc {

auto bfs_distances(const Graph & g, int source) -> std::vector<int>
{
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), unreachable);
    auto visited = g.empty_set(), frontier = g.empty_set();
    frontier.set(source);
    for (int depth = 0; frontier.any(); ++depth) {
        visited |= frontier;
        auto next = g.empty_set();
        for_each_vertex(frontier, [&](int v) {
            dist[v] = depth;
            next |= g.neighbours(v);
        });
        frontier = next - visited;
    }
    return dist;
}

auto DistancePartition::R_at(int j) const -> ResidueSet
{
    if (j >= 0 && j < static_cast<int>(R.size()))
        return R[j];
    return R.empty() ? ResidueSet() : ResidueSet(R.front().modulus());
}

auto DistancePartition::T_at(int j) const -> ResidueSet
{
    if (j >= 0 && j < static_cast<int>(T.size()))
        return T[j];
    return T.empty() ? ResidueSet() : ResidueSet(T.front().modulus());
}

namespace
{
    auto shells_from(const Graph & g, int base) -> std::vector<VertexSet>
    {
        auto dist = bfs_distances(g, base);
        std::vector<VertexSet> shells;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (dist[v] == unreachable)
                throw Error(ErrorCode::DisconnectedGraph,
                    "vertex " + std::to_string(v) + " unreachable from " + std::to_string(base));
            while (static_cast<int>(shells.size()) <= dist[v])
                shells.push_back(g.empty_set());
            shells[dist[v]].set(v);
        }
        return shells;
    }

    auto count_in(const std::vector<VertexSet> & shells, int j, const VertexSet & row) -> int
    {
        if (j < 0 || j >= static_cast<int>(shells.size()))
            return 0;
        return static_cast<int>((shells[j] & row).count());
    }

    auto triple_at(const Graph & g, const std::vector<VertexSet> & shells, int i, int v) -> IntersectionTriple
    {
        auto & row = g.neighbours(v);
        return { count_in(shells, i - 1, row), count_in(shells, i, row), count_in(shells, i + 1, row) };
    }
}

auto distance_partition(const Graph & g, int base) -> DistancePartition
{
    DistancePartition result;
    result.base = base;
    result.shells = shells_from(g, base);
    if (auto n = g.dicyclic_n()) {
        for (auto & shell : result.shells) {
            ResidueSet r(2 * *n), t(2 * *n);
            for_each_vertex(shell, [&](int v) {
                auto e = element_at(v, *n);
                (e.flip ? t : r).insert(e.exp);
            });
            result.R.push_back(std::move(r));
            result.T.push_back(std::move(t));
        }
    }
    return result;
}

auto intersection_numbers(const Graph & g, int u, int v) -> IntersectionTriple
{
    auto dist = bfs_distances(g, u);
    if (dist[v] == unreachable)
        throw Error(ErrorCode::DisconnectedGraph, "vertices in different components");
    std::vector<VertexSet> shells(static_cast<std::size_t>(dist[v] + 2), g.empty_set());
    for (int w = 0; w < g.vertex_count(); ++w)
        if (dist[w] != unreachable && dist[w] <= dist[v] + 1)
            shells[dist[w]].set(w);
    return triple_at(g, shells, dist[v], v);
}

auto IntersectionArray::mu() const -> std::optional<int>
{
    if (diameter() < 2)
        return std::nullopt;
    return c[1];
}

auto IntersectionArray::b_at(int i) const -> int
{
    return i >= 0 && i < static_cast<int>(b.size()) ? b[i] : 0;
}

auto IntersectionArray::c_at(int i) const -> int
{
    return i >= 1 && i <= static_cast<int>(c.size()) ? c[i - 1] : 0;
}

auto IntersectionArray::well_formed() const -> bool
{
    if (b.size() != c.size() || c.empty() || c.front() != 1)
        return false;
    for (int i = 0; i <= diameter(); ++i)
        if (b_at(i) < 0 || c_at(i) < 0 || a(i) < 0)
            return false;
    return true;
}

auto IntersectionArray::to_string() const -> std::string
{
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < b.size(); ++i)
        out << (i ? "," : "") << b[i];
    out << ';';
    for (std::size_t i = 0; i < c.size(); ++i)
        out << (i ? "," : "") << c[i];
    out << '}';
    return out.str();
}

auto NotDrgWitness::describe() const -> std::string
{
    std::ostringstream out;
    out << "pair (" << u << "," << v << ") at distance " << distance << " has (c,a,b)=(" << found.c << ","
        << found.a << "," << found.b << ") but (" << reference_u << "," << reference_v << ") has (" << expected.c
        << "," << expected.a << "," << expected.b << ")";
    return out.str();
}

auto is_distance_regular(const Graph & g, bool vertex_transitive_hint) -> DrgResult
{
    const int size = g.vertex_count();
    std::vector<std::optional<IntersectionTriple>> seen;
    std::vector<std::pair<int, int>> reference;

    int bases = vertex_transitive_hint ? 1 : size;
    for (int u = 0; u < bases; ++u) {
        auto shells = shells_from(g, u);
        if (seen.empty()) {
            seen.resize(shells.size());
            reference.resize(shells.size());
        }
        for (int i = 0; i < static_cast<int>(shells.size()); ++i) {
            if (i >= static_cast<int>(seen.size())) {
                // a larger eccentricity than the first base: shells differ in count
                int v = static_cast<int>(shells[i].find_first());
                return NotDrgWitness{ u, v, i, triple_at(g, shells, i, v), {}, reference[0].first, reference[0].second };
            }
            for_each_vertex(shells[i], [&](int v) {
                auto t = triple_at(g, shells, i, v);
                if (! seen[i]) {
                    seen[i] = t;
                    reference[i] = { u, v };
                }
            });
        }
        for (int i = 0; i < static_cast<int>(shells.size()); ++i) {
            std::optional<NotDrgWitness> witness;
            for_each_vertex(shells[i], [&](int v) {
                if (witness)
                    return;
                auto t = triple_at(g, shells, i, v);
                if (t != *seen[i])
                    witness = NotDrgWitness{ u, v, i, t, *seen[i], reference[i].first, reference[i].second };
            });
            if (witness)
                return *witness;
        }
        if (shells.size() != seen.size()) {
            int i = static_cast<int>(shells.size()) - 1;
            int v = static_cast<int>(shells[i].find_first());
            return NotDrgWitness{ u, v, i, triple_at(g, shells, i, v), *seen[i], reference[i].first, reference[i].second };
        }
    }

    IntersectionArray array;
    int d = static_cast<int>(seen.size()) - 1;
    for (int i = 0; i < d; ++i)
        array.b.push_back(seen[i]->b);
    for (int i = 1; i <= d; ++i)
        array.c.push_back(seen[i]->c);
    return array;
}

auto common_neighbors_count(const ConnectionSpec & spec, Element x, Element y) -> int
{
    if (x.flip == y.flip) {
        int shift = y.exp - x.exp;
        return spec.R.intersection_size(spec.R.translated(shift)) + spec.T.intersection_size(spec.T.translated(shift));
    }
    if (x.flip)
        std::swap(x, y);
    return 2 * spec.R.translated(y.exp - x.exp).intersection_size(spec.T);
}

} // namespace dicirc
