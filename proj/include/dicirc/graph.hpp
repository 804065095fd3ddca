#pragma once

#include <dicirc/group.hpp>

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace dicirc {

using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Dense undirected simple graph with one bitset row per vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);

    /// A graph whose vertex v is the Dic_n element element_at(v, n).
    static auto dicyclic(int n) -> Graph;

    auto vertex_count() const -> int { return static_cast<int>(_rows.size()); }
    auto add_edge(int a, int b) -> void;
    auto adjacent(int a, int b) const -> bool { return _rows[a].test(b); }
    auto degree(int a) const -> int { return static_cast<int>(_rows[a].count()); }
    auto neighbours(int a) const -> const VertexSet & { return _rows[a]; }
    auto neighbour_list(int a) const -> std::vector<int>;
    auto edge_count() const -> long long;

    auto empty_set() const -> VertexSet { return VertexSet(_rows.size()); }

    /// Dic_n parameter when vertices carry group labels.
    auto dicyclic_n() const -> std::optional<int> { return _dicyclic_n; }
    auto label(int v) const -> std::optional<Element>;

    auto complement() const -> Graph;
    /// Subgraph induced on `vertices`, renumbered in increasing order.
    auto induced_subgraph(const std::vector<int> & vertices) const -> Graph;

    auto regular_degree() const -> std::optional<int>;
    auto is_connected() const -> bool;
    auto components() const -> std::vector<std::vector<int>>;

    auto operator==(const Graph & other) const -> bool { return _rows == other._rows; }

private:
    std::vector<VertexSet> _rows;
    std::optional<int> _dicyclic_n;
};

auto complete_graph(int order) -> Graph;
auto cycle_graph(int order) -> Graph;
/// K_{t x m}: t parts of size m, vertex v in part v / m.
auto complete_multipartite_graph(int t, int m) -> Graph;
/// K_{m,m} minus a perfect matching; parts {0..m-1} and {m..2m-1}, i not adjacent to m+i.
auto crown_graph(int m) -> Graph;
/// P(q) on Z_q, q prime with q = 1 mod 4.
auto paley_graph(int q) -> Graph;

/// Backtracking isomorphism search; returns the map g -> h when one exists.
/// Intended for the small graphs handled by the recognizers.
auto find_isomorphism(const Graph & g, const Graph & h) -> std::optional<std::vector<int>>;

template <typename F>
auto for_each_vertex(const VertexSet & s, F && f) -> void
{
    for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i))
        f(static_cast<int>(i));
}

} // namespace dicirc
