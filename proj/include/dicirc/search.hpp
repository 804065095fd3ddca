#pragma once

#include <dicirc/classifier.hpp>
#include <dicirc/fourier.hpp>
#include <dicirc/group_table.hpp>
#include <dicirc/metrics.hpp>
#include <dicirc/spec.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace dicirc {

struct EnumeratedSpec {
    ConnectionSpec spec;
    bool connected = false;
};

/// Calls `f` on every valid (R, T) for Dic_n: R a union of the pairs {i, 2n-i}
/// (1 <= i <= n), T a union of the pairs {i, n+i} (0 <= i < n). R varies slowest.
auto for_each_spec(int n, const std::function<void(const ConnectionSpec &)> & f) -> void;

/// All valid specs, or only canonical representatives when `dedup`.
auto enumerate_specs(int n, bool dedup) -> std::vector<EnumeratedSpec>;

struct DrgInstance {
    ConnectionSpec spec;
    IntersectionArray array;
    Classification classification;
    std::string family;
    bool bipartite = false;
    bool antipodal = false;
    /// antipodality of a complete graph is the single-fibre convention
    bool antipodal_by_convention = false;
    int fibre_size = 0;
    bool primitive = false;
    bool crown = false;
    /// fibres form an equitable partition (antipodal, d >= 2)
    bool fibres_equitable = true;
    /// bipartite, antipodal and even diameter implies a bipartite quotient
    bool quotient_bipartite_ok = true;
    /// both halved graphs complete (bipartite only)
    std::optional<bool> halved_complete;
    /// antipodal non-bipartite d = 3 or antipodal bipartite d = 4 instance, with the
    /// array-shape predicate result
    bool antipodal_nonbipartite_d3 = false;
    bool antipodal_bipartite_d4 = false;
    bool antipodal_array_shape_ok = true;
    bool lambda_even = false;
    /// mu even, or T_2 empty
    bool mu_parity_ok = false;
    FourierLemmaCheck fourier;
};

struct CrossCheckFailure {
    ConnectionSpec spec;
    std::string reason;
};

/// One line of the CSV summary.
struct SpecRow {
    ConnectionSpec spec;
    bool connected = false;
    bool drg = false;
    std::string array;
    std::string classification;
    bool bipartite = false;
    bool antipodal = false;
    bool primitive = false;
    bool fourier_ok = false;
};

struct SurveyReport {
    int n = 1;
    bool dedup = true;
    long long total_specs = 0;
    long long connected_specs = 0;
    long long canonical_classes = 0;
    long long evaluated_specs = 0;
    std::vector<DrgInstance> drg_instances;
    std::vector<CrossCheckFailure> failures;
    std::vector<SpecRow> rows;

    auto reproduces_theorem() const -> bool { return failures.empty(); }
};

struct SurveyOptions {
    bool dedup = true;
    int workers = 1;
    double tolerance = default_tolerance;
    /// replaceable for fault-injection tests
    Classifier classifier = classify;
};

/// Enumerate, build, decide distance-regularity by BFS, classify by counting,
/// and analyse every DRG found. Any disagreement lands in `failures`.
auto survey(int n, const SurveyOptions & options = {}) -> SurveyReport;

/// Full analysis of one connected DRG spec (used by survey and the CLI).
auto analyse_drg(const ConnectionSpec & spec, const Graph & g, const IntersectionArray & array,
    const Classification & classification, double tolerance) -> DrgInstance;

/// Backtracking search for (v, k, lambda) difference sets, one per class of right
/// translates Dg: each returned set (sorted indices) is the lexicographically least
/// member of its class. Multiplier equivalence is not reduced. Throws
/// ParameterContradiction when k(k-1) != lambda(v-1) or the group order is not v.
auto search_difference_sets(const GroupTable & group, int v, int k, int lambda,
    std::optional<int> limit = std::nullopt) -> std::vector<std::vector<int>>;

/// Right translate D g.
auto right_translate(const GroupTable & group, const std::vector<int> & d, int g) -> std::vector<int>;

/// Maps a difference set in Dic_h (GroupTable::dicyclic numbering) to Dic(2h, R, T) with
/// R = 1 + (2 x exponents without beta), T = 1 + (2 x exponents with beta), trying the
/// two-sided translates g D h' until R = -R and T = 2h + T. Returns the canonical form.
auto reconstruct_family_iii(const std::vector<int> & d, int h) -> std::optional<ConnectionSpec>;

} // namespace dicirc
