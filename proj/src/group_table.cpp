#include <dicirc/error.hpp>
#include <dicirc/group_table.hpp>

#include <algorithm>

namespace dicirc {

GroupTable::GroupTable(std::vector<std::vector<int>> table) :
    _table(std::move(table))
{
    const int v = static_cast<int>(_table.size());
    if (v == 0)
        throw Error(ErrorCode::InvalidGroupTable, "empty table");
    for (auto & row : _table) {
        if (static_cast<int>(row.size()) != v)
            throw Error(ErrorCode::InvalidGroupTable, "table is not square");
        for (int x : row)
            if (x < 0 || x >= v)
                throw Error(ErrorCode::InvalidGroupTable, "entry out of range");
    }

    for (int a = 0; a < v; ++a) {
        std::vector<bool> row_seen(static_cast<std::size_t>(v)), col_seen(static_cast<std::size_t>(v));
        for (int b = 0; b < v; ++b) {
            if (row_seen[_table[a][b]] || col_seen[_table[b][a]])
                throw Error(ErrorCode::InvalidGroupTable, "not a Latin square");
            row_seen[_table[a][b]] = true;
            col_seen[_table[b][a]] = true;
        }
    }

    auto e = std::find_if(_table.begin(), _table.end(), [&](const std::vector<int> & row) {
        for (int b = 0; b < v; ++b)
            if (row[b] != b)
                return false;
        return true;
    });
    if (e == _table.end())
        throw Error(ErrorCode::InvalidGroupTable, "no identity");
    _identity = static_cast<int>(e - _table.begin());

    for (int a = 0; a < v; ++a)
        for (int b = 0; b < v; ++b)
            for (int c = 0; c < v; ++c)
                if (_table[_table[a][b]][c] != _table[a][_table[b][c]])
                    throw Error(ErrorCode::InvalidGroupTable, "not associative");

    _inverse.resize(static_cast<std::size_t>(v));
    for (int a = 0; a < v; ++a)
        for (int b = 0; b < v; ++b)
            if (_table[a][b] == _identity)
                _inverse[a] = b;
}

auto GroupTable::cyclic(int m) -> GroupTable
{
    std::vector<std::vector<int>> t(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            t[a][b] = (a + b) % m;
    return GroupTable(std::move(t));
}

auto GroupTable::dicyclic(int n) -> GroupTable
{
    const int v = 4 * n;
    std::vector<std::vector<int>> t(static_cast<std::size_t>(v), std::vector<int>(static_cast<std::size_t>(v)));
    for (int a = 0; a < v; ++a)
        for (int b = 0; b < v; ++b)
            t[a][b] = element_index(dicirc::multiply(element_at(a, n), element_at(b, n), n), n);
    return GroupTable(std::move(t));
}

auto GroupTable::of_subgroup(const Subgroup & subgroup, int n) -> GroupTable
{
    const auto & m = subgroup.members;
    auto index_of = [&](Element g) {
        auto it = std::lower_bound(m.begin(), m.end(), g);
        if (it == m.end() || *it != g)
            throw Error(ErrorCode::InvalidGroupTable, "subgroup is not closed");
        return static_cast<int>(it - m.begin());
    };
    std::vector<std::vector<int>> t(m.size(), std::vector<int>(m.size()));
    for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = 0; b < m.size(); ++b)
            t[a][b] = index_of(dicirc::multiply(m[a], m[b], n));
    return GroupTable(std::move(t));
}

auto difference_set_lambda(const GroupTable & group, const std::vector<int> & d) -> DifferenceSetCheck
{
    const int v = group.order();
    std::vector<bool> member(static_cast<std::size_t>(v), false);
    int size = 0;
    for (int x : d) {
        if (x < 0 || x >= v)
            throw Error(ErrorCode::InvalidGroupTable, "element " + std::to_string(x) + " outside the group");
        if (! member[x])
            ++size;
        member[x] = true;
    }

    DifferenceSetCheck result;
    result.counts.assign(static_cast<std::size_t>(v), 0);
    for (int g1 = 0; g1 < v; ++g1) {
        if (! member[g1])
            continue;
        auto g1_inv = group.inverse(g1);
        for (int g2 = 0; g2 < v; ++g2)
            if (member[g2])
                ++result.counts[group.multiply(g2, g1_inv)];
    }

    result.trivial = size == v || size == v - 1 || size <= 1;
    std::optional<int> common;
    bool constant = true;
    for (int g = 0; g < v; ++g) {
        if (g == group.identity())
            continue;
        if (! common)
            common = result.counts[g];
        else if (*common != result.counts[g])
            constant = false;
    }
    if (constant)
        result.lambda = common.value_or(0);
    return result;
}

} // namespace dicirc
