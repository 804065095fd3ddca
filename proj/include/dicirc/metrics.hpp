#pragma once

#include <dicirc/graph.hpp>
#include <dicirc/spec.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace dicirc {

constexpr int unreachable = -1;

/// Shortest-path distances from `source`, expanding the frontier by row ORs.
/// Unreachable vertices get `unreachable`.
auto bfs_distances(const Graph & g, int source) -> std::vector<int>;

/// Shells N_0..N_d around a base vertex. For dicirculants based at the
/// identity, R_j / T_j hold the exponents i with alpha^i / alpha^i beta in N_j.
struct DistancePartition {
    int base = 0;
    std::vector<VertexSet> shells;
    std::vector<ResidueSet> R;
    std::vector<ResidueSet> T;

    auto diameter() const -> int { return static_cast<int>(shells.size()) - 1; }
    /// R_j, or the empty set when j is beyond the diameter.
    auto R_at(int j) const -> ResidueSet;
    auto T_at(int j) const -> ResidueSet;
};

/// Throws DisconnectedGraph when some vertex is unreachable from `base`.
/// R_j / T_j are filled when g carries Dic_n labels.
auto distance_partition(const Graph & g, int base = 0) -> DistancePartition;

struct IntersectionTriple {
    int c = 0;
    int a = 0;
    int b = 0;

    auto operator==(const IntersectionTriple &) const -> bool = default;
};

/// (|N_{i-1}(u) n N(v)|, |N_i(u) n N(v)|, |N_{i+1}(u) n N(v)|) with i = d(u, v).
auto intersection_numbers(const Graph & g, int u, int v) -> IntersectionTriple;

/// {b_0, ..., b_{d-1}; c_1, ..., c_d}.
struct IntersectionArray {
    std::vector<int> b;
    std::vector<int> c;

    auto diameter() const -> int { return static_cast<int>(c.size()); }
    auto valency() const -> int { return b.empty() ? 0 : b.front(); }
    auto lambda() const -> int { return a(1); }
    /// c_2; absent for diameter 1.
    auto mu() const -> std::optional<int>;
    auto b_at(int i) const -> int;
    auto c_at(int i) const -> int;
    auto a(int i) const -> int { return valency() - b_at(i) - c_at(i); }

    /// c_1 = 1, non-negative a_i, and b_i + c_i <= k for every i.
    auto well_formed() const -> bool;
    /// "{6,1;1,6}"
    auto to_string() const -> std::string;

    auto operator==(const IntersectionArray &) const -> bool = default;
};

struct NotDrgWitness {
    int u = 0;
    int v = 0;
    int distance = 0;
    /// the pair whose triple first disagreed, and the reference pair at the same distance
    IntersectionTriple found;
    IntersectionTriple expected;
    int reference_u = 0;
    int reference_v = 0;

    auto describe() const -> std::string;
};

using DrgResult = std::variant<IntersectionArray, NotDrgWitness>;

/// Decides distance-regularity. With the vertex-transitive hint only pairs
/// (0, v) are inspected; otherwise every ordered pair. Throws DisconnectedGraph.
auto is_distance_regular(const Graph & g, bool vertex_transitive_hint) -> DrgResult;

/// Common-neighbour count of two group elements from the counting formulas
///   |R n (j-i+R)| + |T n (j-i+T)|   (same coset of <alpha>)
///   2 |(j-i+R) n T|                  (alpha^i versus alpha^j beta)
auto common_neighbors_count(const ConnectionSpec & spec, Element x, Element y) -> int;

} // namespace dicirc
