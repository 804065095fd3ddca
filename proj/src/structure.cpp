#include <dicirc/error.hpp>
#include <dicirc/structure.hpp>

#include <algorithm>
#include <sstream>

namespace dicirc {

auto distance_matrix(const Graph & g) -> std::vector<std::vector<int>>
{
    std::vector<std::vector<int>> result;
    result.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int u = 0; u < g.vertex_count(); ++u)
        result.push_back(bfs_distances(g, u));
    return result;
}

auto bipartition(const Graph & g) -> std::optional<std::pair<std::vector<int>, std::vector<int>>>
{
    auto dist = bfs_distances(g, 0);
    std::pair<std::vector<int>, std::vector<int>> parts;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (dist[v] == unreachable)
            throw Error(ErrorCode::DisconnectedGraph, "bipartition needs a connected graph");
        (dist[v] % 2 == 0 ? parts.first : parts.second).push_back(v);
    }
    // BFS layering is a proper 2-colouring iff no edge joins two layers of equal parity
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool clash = false;
        for_each_vertex(g.neighbours(v), [&](int w) { clash = clash || (dist[v] % 2 == dist[w] % 2); });
        if (clash)
            return std::nullopt;
    }
    return parts;
}

auto quotient_graph(const Graph & g, const std::vector<std::vector<int>> & blocks) -> Graph
{
    std::vector<int> block_of(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int v : blocks[b])
            block_of[v] = static_cast<int>(b);

    Graph q(static_cast<int>(blocks.size()));
    for (int v = 0; v < g.vertex_count(); ++v)
        for_each_vertex(g.neighbours(v), [&](int w) {
            if (block_of[v] != block_of[w])
                q.add_edge(block_of[v], block_of[w]);
        });
    return q;
}

auto antipodal_classes(const Graph & g, int d) -> std::optional<AntipodalStructure>
{
    const int size = g.vertex_count();
    if (d <= 1) {
        AntipodalStructure s;
        std::vector<int> all(static_cast<std::size_t>(size));
        for (int v = 0; v < size; ++v)
            all[v] = v;
        s.fibres.push_back(std::move(all));
        s.fibre_size = size;
        s.quotient = Graph(1);
        s.single_fibre_convention = true;
        return s;
    }

    auto dist = distance_matrix(g);
    std::vector<std::vector<int>> classes(static_cast<std::size_t>(size));
    for (int u = 0; u < size; ++u)
        for (int v = 0; v < size; ++v)
            if (dist[u][v] == 0 || dist[u][v] == d)
                classes[u].push_back(v);

    std::vector<bool> placed(static_cast<std::size_t>(size), false);
    AntipodalStructure s;
    for (int u = 0; u < size; ++u) {
        for (int v : classes[u])
            if (classes[v] != classes[u])
                return std::nullopt;
        if (! placed[u]) {
            for (int v : classes[u])
                placed[v] = true;
            s.fibres.push_back(classes[u]);
        }
    }
    s.fibre_size = static_cast<int>(s.fibres.front().size());
    for (auto & f : s.fibres)
        if (static_cast<int>(f.size()) != s.fibre_size)
            return std::nullopt;
    s.quotient = quotient_graph(g, s.fibres);
    return s;
}

auto distance_i_graph(const Graph & g, int i) -> Graph
{
    auto dist = distance_matrix(g);
    int diameter = 0;
    for (auto & row : dist)
        for (int x : row) {
            if (x == unreachable)
                throw Error(ErrorCode::DisconnectedGraph, "distance graphs need a connected graph");
            diameter = std::max(diameter, x);
        }
    if (i < 1 || i > diameter)
        throw Error(ErrorCode::IndexOutOfRange,
            "distance index " + std::to_string(i) + " outside 1.." + std::to_string(diameter));

    Graph result(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (dist[u][v] == i)
                result.add_edge(u, v);
    return result;
}

auto halved_graphs(const Graph & g) -> std::pair<Graph, Graph>
{
    auto parts = bipartition(g);
    if (! parts)
        throw Error(ErrorCode::NotBipartite, "halved graphs need a bipartite graph");
    auto dist = distance_matrix(g);
    Graph g2(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (dist[u][v] == 2)
                g2.add_edge(u, v);
    return { g2.induced_subgraph(parts->first), g2.induced_subgraph(parts->second) };
}

auto is_primitive(const Graph & g, int d) -> bool
{
    for (int i = 1; i <= d; ++i)
        if (! distance_i_graph(g, i).is_connected())
            return false;
    return true;
}

auto is_equitable(const Graph & g, const std::vector<std::vector<int>> & partition)
    -> std::optional<std::vector<std::vector<int>>>
{
    std::vector<VertexSet> blocks;
    for (auto & block : partition) {
        auto s = g.empty_set();
        for (int v : block)
            s.set(v);
        blocks.push_back(std::move(s));
    }

    std::vector<std::vector<int>> matrix(partition.size(), std::vector<int>(partition.size(), 0));
    for (std::size_t i = 0; i < partition.size(); ++i) {
        for (std::size_t j = 0; j < partition.size(); ++j) {
            bool first = true;
            for (int v : partition[i]) {
                int count = static_cast<int>((g.neighbours(v) & blocks[j]).count());
                if (first)
                    matrix[i][j] = count;
                else if (matrix[i][j] != count)
                    return std::nullopt;
                first = false;
            }
        }
    }
    return matrix;
}

auto to_string(const FamilyTag & tag) -> std::string
{
    std::ostringstream out;
    std::visit([&](auto && t) {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, family::Cycle>)
            out << "Cycle(" << t.length << ")";
        else if constexpr (std::is_same_v<T, family::Complete>)
            out << "Complete(" << t.order << ")";
        else if constexpr (std::is_same_v<T, family::CompleteMultipartite>)
            out << "CompleteMultipartite(" << t.t << "," << t.m << ")";
        else if constexpr (std::is_same_v<T, family::CrownGraph>)
            out << "CrownGraph(" << t.m << ")";
        else if constexpr (std::is_same_v<T, family::Paley>)
            out << "Paley(" << t.q << ")";
        else
            out << "Unrecognized";
    }, tag);
    return out.str();
}

auto is_complete(const Graph & g) -> bool
{
    auto k = g.regular_degree();
    return k && *k == g.vertex_count() - 1;
}

auto complete_multipartite_shape(const Graph & g) -> std::optional<std::pair<int, int>>
{
    // complement must be t disjoint copies of K_m with t, m >= 2
    auto comp = g.complement();
    auto parts = comp.components();
    if (parts.size() < 2)
        return std::nullopt;
    int m = static_cast<int>(parts.front().size());
    if (m < 2)
        return std::nullopt;
    for (auto & p : parts) {
        if (static_cast<int>(p.size()) != m)
            return std::nullopt;
        for (int v : p)
            if (comp.degree(v) != m - 1)
                return std::nullopt;
    }
    return std::pair{ static_cast<int>(parts.size()), m };
}

auto is_crown_graph(const Graph & g) -> bool
{
    int size = g.vertex_count();
    if (size < 4 || size % 2 != 0 || ! g.is_connected())
        return false;
    int m = size / 2;
    auto k = g.regular_degree();
    if (! k || *k != m - 1)
        return false;
    auto parts = bipartition(g);
    if (! parts || static_cast<int>(parts->first.size()) != m)
        return false;
    // each vertex misses exactly one vertex of the opposite part
    for (int v : parts->first) {
        int misses = 0;
        for (int w : parts->second)
            misses += ! g.adjacent(v, w);
        if (misses != 1)
            return false;
    }
    return true;
}

auto is_paley_graph(const Graph & g) -> bool
{
    int q = g.vertex_count();
    if (q < 5 || q % 4 != 1)
        return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0)
            return false;
    auto k = g.regular_degree();
    if (! k || *k != (q - 1) / 2)
        return false;
    return find_isomorphism(g, paley_graph(q)).has_value();
}

auto recognize_family(const Graph & g) -> FamilyRecognition
{
    FamilyRecognition result;
    if (is_complete(g))
        result.matches.push_back(family::Complete{ g.vertex_count() });
    if (auto shape = complete_multipartite_shape(g))
        result.matches.push_back(family::CompleteMultipartite{ shape->first, shape->second });
    if (is_crown_graph(g))
        result.matches.push_back(family::CrownGraph{ g.vertex_count() / 2 });
    if (is_paley_graph(g))
        result.matches.push_back(family::Paley{ g.vertex_count() });
    if (g.is_connected() && g.vertex_count() >= 3 && g.regular_degree() == 2)
        result.matches.push_back(family::Cycle{ g.vertex_count() });

    result.primary = result.matches.empty() ? FamilyTag{ family::Unrecognized{} } : result.matches.front();
    return result;
}

auto matches_antipodal_d3_array(const IntersectionArray & array, int fibre_size) -> bool
{
    if (array.diameter() != 3)
        return false;
    int k = array.valency(), mu = array.c[1];
    return array.b == std::vector<int>{ k, mu * (fibre_size - 1), 1 } && array.c == std::vector<int>{ 1, mu, k };
}

auto matches_antipodal_bipartite_d4_array(const IntersectionArray & array, int fibre_size) -> bool
{
    if (array.diameter() != 4)
        return false;
    int r = fibre_size, mu = array.c[1];
    return array.b == std::vector<int>{ r * mu, r * mu - 1, (r - 1) * mu, 1 }
        && array.c == std::vector<int>{ 1, mu, r * mu - 1, r * mu };
}

} // namespace dicirc
