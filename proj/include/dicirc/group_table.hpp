#pragma once

#include <dicirc/group.hpp>

#include <optional>
#include <vector>

namespace dicirc {

/// A finite group given by its multiplication table on 0..order-1.
class GroupTable {
public:
    /// Checks closure, identity, Latin-square rows/columns and associativity.
    /// Throws InvalidGroupTable.
    explicit GroupTable(std::vector<std::vector<int>> table);

    static auto cyclic(int m) -> GroupTable;
    /// Dic_n with the vertex numbering alpha^i -> i, alpha^i beta -> 2n + i.
    static auto dicyclic(int n) -> GroupTable;
    /// The subgroup's own table; element j of the table is subgroup.members[j].
    static auto of_subgroup(const Subgroup & subgroup, int n) -> GroupTable;

    auto order() const -> int { return static_cast<int>(_table.size()); }
    auto identity() const -> int { return _identity; }
    auto multiply(int a, int b) const -> int { return _table[a][b]; }
    auto inverse(int a) const -> int { return _inverse[a]; }

private:
    std::vector<std::vector<int>> _table;
    std::vector<int> _inverse;
    int _identity = 0;
};

struct DifferenceSetCheck {
    /// The common number of (g1, g2) in D x D with g2 g1^-1 = g over all g != 1, if constant.
    std::optional<int> lambda;
    /// |D| in {|G|, |G| - 1, 1, 0}
    bool trivial = false;
    /// count for every group element (index), identity included
    std::vector<int> counts;

    auto is_nontrivial_difference_set() const -> bool { return lambda.has_value() && ! trivial; }
};

/// Throws InvalidGroupTable when D names elements outside the group.
auto difference_set_lambda(const GroupTable & group, const std::vector<int> & d) -> DifferenceSetCheck;

} // namespace dicirc
