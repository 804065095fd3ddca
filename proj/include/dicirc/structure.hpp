#pragma once

#include <dicirc/graph.hpp>
#include <dicirc/metrics.hpp>

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace dicirc {

/// All-pairs distances (row u = bfs_distances(g, u)).
auto distance_matrix(const Graph & g) -> std::vector<std::vector<int>>;

/// 2-colouring of a connected graph; the part containing vertex 0 comes first.
auto bipartition(const Graph & g) -> std::optional<std::pair<std::vector<int>, std::vector<int>>>;

struct AntipodalStructure {
    std::vector<std::vector<int>> fibres; // each sorted, ordered by smallest member
    int fibre_size = 0;
    Graph quotient;
    /// Set for diameter 1: the whole vertex set is reported as a single fibre.
    bool single_fibre_convention = false;
};

/// Fibres of the relation d(u, v) in {0, d} when it is an equivalence with
/// equal class sizes, together with the quotient graph on fibres.
auto antipodal_classes(const Graph & g, int d) -> std::optional<AntipodalStructure>;

/// Quotient graph: blocks adjacent when some edge joins them.
auto quotient_graph(const Graph & g, const std::vector<std::vector<int>> & blocks) -> Graph;

/// The distance-2 graph restricted to each part of the bipartition, part of
/// vertex 0 first. Throws NotBipartite.
auto halved_graphs(const Graph & g) -> std::pair<Graph, Graph>;

/// Gamma_i. Throws IndexOutOfRange unless 1 <= i <= diameter.
auto distance_i_graph(const Graph & g, int i) -> Graph;

auto is_primitive(const Graph & g, int d) -> bool;

/// The matrix b_ij when every vertex of block i has exactly b_ij neighbours in block j.
auto is_equitable(const Graph & g, const std::vector<std::vector<int>> & partition)
    -> std::optional<std::vector<std::vector<int>>>;

namespace family {
    struct Cycle { int length; };
    struct Complete { int order; };
    struct CompleteMultipartite { int t; int m; };
    struct CrownGraph { int m; };
    struct Paley { int q; };
    struct Unrecognized {};
}

using FamilyTag = std::variant<family::Cycle, family::Complete, family::CompleteMultipartite,
    family::CrownGraph, family::Paley, family::Unrecognized>;

auto to_string(const FamilyTag & tag) -> std::string;

struct FamilyRecognition {
    /// Chosen by precedence Complete > CompleteMultipartite > CrownGraph > Paley > Cycle.
    FamilyTag primary;
    /// Every matching tag, in precedence order (primary included).
    std::vector<FamilyTag> matches;
};

auto is_complete(const Graph & g) -> bool;
auto complete_multipartite_shape(const Graph & g) -> std::optional<std::pair<int, int>>;
auto is_crown_graph(const Graph & g) -> bool;
auto is_paley_graph(const Graph & g) -> bool;

auto recognize_family(const Graph & g) -> FamilyRecognition;

/// {k, mu(r-1), 1; 1, mu, k}
auto matches_antipodal_d3_array(const IntersectionArray & array, int fibre_size) -> bool;
/// {r mu, r mu - 1, (r-1) mu, 1; 1, mu, r mu - 1, r mu}
auto matches_antipodal_bipartite_d4_array(const IntersectionArray & array, int fibre_size) -> bool;

} // namespace dicirc
