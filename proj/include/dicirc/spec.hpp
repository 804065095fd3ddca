#pragma once

#include <dicirc/residue_set.hpp>

#include <compare>
#include <string>

namespace dicirc {

/// The triple (n, R, T) naming the dicirculant Dic(n, R, T), i.e. the Cayley
/// graph on Dic_n with connection set alpha^R u alpha^T beta. R and T are
/// subsets of Z_2n. Plain data: validity is established by validate_spec().
struct ConnectionSpec {
    int n = 1;
    ResidueSet R;
    ResidueSet T;

    ConnectionSpec() = default;
    ConnectionSpec(int n_, ResidueSet r, ResidueSet t) :
        n(n_), R(std::move(r)), T(std::move(t))
    {
    }

    auto valency() const -> int { return R.size() + T.size(); }
    auto order() const -> int { return 4 * n; }

    auto operator==(const ConnectionSpec &) const -> bool = default;
    auto operator<=>(const ConnectionSpec & other) const -> std::strong_ordering
    {
        if (auto c = n <=> other.n; c != 0)
            return c;
        if (auto c = R <=> other.R; c != 0)
            return c;
        return T <=> other.T;
    }
};

/// Parse `n=<int>; R=<comma list>; T=<comma list>`. Whitespace is ignored
/// and residues are reduced modulo 2n. Throws ErrorCode::ParseError naming
/// the offending position. Does not validate R = -R etc.
auto parse_spec(const std::string & text) -> ConnectionSpec;

/// Inverse of parse_spec: "n=2; R=1,3; T=0,2".
auto format_spec(const ConnectionSpec & spec) -> std::string;

} // namespace dicirc
