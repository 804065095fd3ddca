#pragma once

#include <dicirc/group_table.hpp>
#include <dicirc/metrics.hpp>
#include <dicirc/spec.hpp>

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace dicirc {

struct ConditionIII {
    bool holds = false;
    /// one line per sub-condition, satisfied or not; the first failing one ends the list
    std::vector<std::string> evidence;
};

/// n even; R, T non-empty subsets of 1 + 2Z_2n; |R n T| < n; and
///   |R n (i+R)| + |T n (i+T)| = 2|(j+R) n T| = 2|R n T|  for all i, j in 2Z_2n \ {0}.
auto condition_iii(const ConnectionSpec & spec) -> ConditionIII;

/// alpha^(-1+R) u alpha^(-1+T) beta is a non-trivial difference set in <alpha^2, beta>.
/// Throws PreconditionViolated for odd n or when R or T is empty or meets 2Z_2n.
auto condition_iii_prime(const ConnectionSpec & spec) -> bool;

/// The set alpha^(-1+R) u alpha^(-1+T) beta as indices into GroupTable::of_subgroup(<alpha^2, beta>).
auto difference_set_of(const ConnectionSpec & spec) -> std::vector<int>;

namespace drg_class {
    struct CompleteGraph { int order; };
    struct CompleteMultipartite { int t; int m; };
    struct BipartiteD3Family { int k; int mu; };
    struct NotDistanceRegular { std::string witness; };
}

using ClassTag = std::variant<drg_class::CompleteGraph, drg_class::CompleteMultipartite,
    drg_class::BipartiteD3Family, drg_class::NotDistanceRegular>;

struct Classification {
    ClassTag tag;
    std::vector<std::string> evidence;

    auto is_drg() const -> bool { return ! std::holds_alternative<drg_class::NotDistanceRegular>(tag); }
    auto tag_name() const -> std::string;
    /// "CompleteMultipartite(4,2)"
    auto to_string() const -> std::string;
    /// The intersection array the class determines: {4n-1; 1}, {(t-1)m, m-1; 1, (t-1)m}
    /// or {k, k-1, k-mu; 1, mu, k}.
    auto expected_array() const -> std::optional<IntersectionArray>;
};

/// Classification by counting and structure alone (no distance computations):
/// complete when |R| + |T| = 4n - 1, complete multipartite when the complement
/// is t disjoint copies of K_m, the bipartite diameter-3 family when condition_iii
/// holds, otherwise not distance-regular. Throws InvalidSpec / DisconnectedSpec.
auto classify(const ConnectionSpec & spec) -> Classification;

using Classifier = std::function<Classification(const ConnectionSpec &)>;

} // namespace dicirc
