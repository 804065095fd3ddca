#include <dicirc/error.hpp>
#include <dicirc/graph.hpp>

#include <algorithm>
#include <functional>
#include <numeric>

namespace dicirc {

Graph::Graph(int vertex_count) :
    _rows(static_cast<std::size_t>(vertex_count), VertexSet(static_cast<std::size_t>(vertex_count)))
{
}

auto Graph::dicyclic(int n) -> Graph
{
    Graph g(4 * n);
    g._dicyclic_n = n;
    return g;
}

auto Graph::add_edge(int a, int b) -> void
{
    if (a == b)
        return;
    _rows[a].set(b);
    _rows[b].set(a);
}

auto Graph::neighbour_list(int a) const -> std::vector<int>
{
    std::vector<int> result;
    for_each_vertex(_rows[a], [&](int v) { result.push_back(v); });
    return result;
}

auto Graph::edge_count() const -> long long
{
    long long total = 0;
    for (auto & r : _rows)
        total += static_cast<long long>(r.count());
    return total / 2;
}

auto Graph::label(int v) const -> std::optional<Element>
{
    if (! _dicyclic_n)
        return std::nullopt;
    return element_at(v, *_dicyclic_n);
}

auto Graph::complement() const -> Graph
{
    Graph result(vertex_count());
    result._dicyclic_n = _dicyclic_n;
    for (int v = 0; v < vertex_count(); ++v) {
        result._rows[v] = ~_rows[v];
        result._rows[v].reset(v);
    }
    return result;
}

auto Graph::induced_subgraph(const std::vector<int> & vertices) const -> Graph
{
    auto sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    Graph result(static_cast<int>(sorted.size()));
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j)
            if (adjacent(sorted[i], sorted[j]))
                result.add_edge(static_cast<int>(i), static_cast<int>(j));
    return result;
}

auto Graph::regular_degree() const -> std::optional<int>
{
    if (_rows.empty())
        return 0;
    int k = degree(0);
    for (int v = 1; v < vertex_count(); ++v)
        if (degree(v) != k)
            return std::nullopt;
    return k;
}

auto Graph::components() const -> std::vector<std::vector<int>>
{
    std::vector<std::vector<int>> result;
    VertexSet unseen(_rows.size());
    unseen.set();
    while (unseen.any()) {
        auto start = unseen.find_first();
        VertexSet component(_rows.size()), frontier(_rows.size());
        frontier.set(start);
        while (frontier.any()) {
            component |= frontier;
            VertexSet next(_rows.size());
            for_each_vertex(frontier, [&](int v) { next |= _rows[v]; });
            frontier = next - component;
        }
        unseen -= component;
        std::vector<int> members;
        for_each_vertex(component, [&](int v) { members.push_back(v); });
        result.push_back(std::move(members));
    }
    return result;
}

auto Graph::is_connected() const -> bool
{
    return vertex_count() <= 1 || components().size() == 1;
}

auto complete_graph(int order) -> Graph
{
    Graph g(order);
    for (int a = 0; a < order; ++a)
        for (int b = a + 1; b < order; ++b)
            g.add_edge(a, b);
    return g;
}

auto cycle_graph(int order) -> Graph
{
    Graph g(order);
    for (int a = 0; a < order; ++a)
        g.add_edge(a, (a + 1) % order);
    return g;
}

auto complete_multipartite_graph(int t, int m) -> Graph
{
    Graph g(t * m);
    for (int a = 0; a < t * m; ++a)
        for (int b = a + 1; b < t * m; ++b)
            if (a / m != b / m)
                g.add_edge(a, b);
    return g;
}

auto crown_graph(int m) -> Graph
{
    Graph g(2 * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j)
                g.add_edge(i, m + j);
    return g;
}

auto paley_graph(int q) -> Graph
{
    if (q < 5 || q % 4 != 1)
        throw Error(ErrorCode::PreconditionViolated, "Paley graph needs q = 1 mod 4, got " + std::to_string(q));
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0)
            throw Error(ErrorCode::PreconditionViolated, "Paley graph needs prime q, got " + std::to_string(q));

    std::vector<bool> square(static_cast<std::size_t>(q), false);
    for (long long x = 1; x < q; ++x)
        square[static_cast<std::size_t>(x * x % q)] = true;

    Graph g(q);
    for (int a = 0; a < q; ++a)
        for (int b = a + 1; b < q; ++b)
            if (square[static_cast<std::size_t>(b - a)])
                g.add_edge(a, b);
    return g;
}

auto find_isomorphism(const Graph & g, const Graph & h) -> std::optional<std::vector<int>>
{
    const int size = g.vertex_count();
    if (size != h.vertex_count() || g.edge_count() != h.edge_count())
        return std::nullopt;

    auto degrees = [](const Graph & x) {
        std::vector<int> d;
        for (int v = 0; v < x.vertex_count(); ++v)
            d.push_back(x.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degrees(g) != degrees(h))
        return std::nullopt;

    // assign g's vertices in BFS order so every new vertex has mapped neighbours
    std::vector<int> order;
    {
        std::vector<bool> seen(static_cast<std::size_t>(size), false);
        for (int s = 0; s < size; ++s) {
            if (seen[s])
                continue;
            seen[s] = true;
            std::size_t head = order.size();
            order.push_back(s);
            while (head < order.size()) {
                int v = order[head++];
                for (int w : g.neighbour_list(v))
                    if (! seen[w]) {
                        seen[w] = true;
                        order.push_back(w);
                    }
            }
        }
    }

    std::vector<int> map(static_cast<std::size_t>(size), -1);
    std::vector<bool> used(static_cast<std::size_t>(size), false);

    std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
        if (depth == order.size())
            return true;
        int v = order[depth];
        for (int w = 0; w < size; ++w) {
            if (used[w] || g.degree(v) != h.degree(w))
                continue;
            bool ok = true;
            for (std::size_t i = 0; i < depth && ok; ++i) {
                int u = order[i];
                ok = g.adjacent(u, v) == h.adjacent(map[u], w);
            }
            if (! ok)
                continue;
            map[v] = w;
            used[w] = true;
            if (extend(depth + 1))
                return true;
            used[w] = false;
            map[v] = -1;
        }
        return false;
    };

    if (extend(0))
        return map;
    return std::nullopt;
}

} // namespace dicirc
