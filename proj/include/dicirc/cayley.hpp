#pragma once

#include <dicirc/graph.hpp>
#include <dicirc/spec.hpp>

#include <optional>
#include <string>
#include <vector>

namespace dicirc {

enum class SpecViolation {
    ZeroInR,
    RNotSymmetric,
    TNotHalfPeriodic,
    NotGenerating,
};

auto to_string(SpecViolation v) -> std::string_view;

struct SpecValidation {
    /// Violated structural constraints; NotGenerating is reported separately
    /// through `generating` and also listed here when it applies.
    std::vector<SpecViolation> violations;
    bool generating = false;

    /// True when R and T satisfy 0 not in R, R = -R, T = n + T. Connectivity is
    /// a flag, not a validity condition.
    auto valid() const -> bool;
    auto connected() const -> bool { return generating; }
};

/// Checks 0 not in R, R = -R, T = n + T and whether alpha^R u alpha^T beta generates Dic_n.
auto validate_spec(const ConnectionSpec & spec) -> SpecValidation;

/// Validates and throws ErrorCode::InvalidSpec listing every violated constraint.
auto require_valid(const ConnectionSpec & spec) -> const ConnectionSpec &;

/// The connection set alpha^R u alpha^T beta as group elements.
auto connection_set(const ConnectionSpec & spec) -> std::vector<Element>;

/// Dic(n, R, T) from the neighbour formulas
///   N(alpha^i) = alpha^(i+R) u alpha^(i+T) beta,  N(alpha^i beta) = alpha^(i-T) u alpha^(i+R) beta.
auto build_graph(const ConnectionSpec & spec) -> Graph;

/// Cay(Dic_n, S) straight from the definition: g ~ h iff g^-1 h in S.
/// S must be inverse-closed and avoid the identity.
auto cayley_graph(int n, const std::vector<Element> & connection) -> Graph;

/// The lexicographically least (uR, uT + v) over all units u and shifts v of Z_2n.
/// Canonical forms identify specs up to this automorphism family only, which
/// need not be every isomorphism between dicirculants.
auto canonicalize(const ConnectionSpec & spec) -> ConnectionSpec;

} // namespace dicirc
