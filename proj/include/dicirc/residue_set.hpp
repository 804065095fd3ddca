#pragma once

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace dicirc {

/// Reduce `x` into [0, m).
constexpr auto mod(long long x, long long m) -> int
{
    auto r = x % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

/// A subset of Z_m stored as a bitset. Ordering compares the sorted
/// element lists lexicographically, so {1,7} < {3,5} and {} < {0}.
class ResidueSet {
public:
    ResidueSet() = default;
    explicit ResidueSet(int modulus);
    ResidueSet(int modulus, std::initializer_list<int> elements);
    ResidueSet(int modulus, std::span<const int> elements);

    static auto full(int modulus) -> ResidueSet;

    auto modulus() const -> int { return static_cast<int>(_bits.size()); }
    auto size() const -> int { return static_cast<int>(_bits.count()); }
    auto empty() const -> bool { return _bits.none(); }

    auto contains(long long r) const -> bool { return _bits.test(static_cast<std::size_t>(mod(r, modulus()))); }
    auto insert(long long r) -> void { _bits.set(static_cast<std::size_t>(mod(r, modulus()))); }
    auto erase(long long r) -> void { _bits.reset(static_cast<std::size_t>(mod(r, modulus()))); }

    /// shift + A
    auto translated(long long shift) const -> ResidueSet;
    /// u * A
    auto scaled(long long u) const -> ResidueSet;
    /// -A
    auto negated() const -> ResidueSet;
    auto complement() const -> ResidueSet;

    auto intersection_size(const ResidueSet & other) const -> int;
    auto operator&(const ResidueSet & other) const -> ResidueSet;
    auto operator|(const ResidueSet & other) const -> ResidueSet;

    auto elements() const -> std::vector<int>;
    auto bits() const -> const boost::dynamic_bitset<std::uint64_t> & { return _bits; }

    /// "1,3,5" (empty string for the empty set)
    auto to_string() const -> std::string;

    auto operator==(const ResidueSet & other) const -> bool { return _bits == other._bits; }
    auto operator<=>(const ResidueSet & other) const -> std::strong_ordering;

    template <typename F>
    auto for_each(F && f) const -> void
    {
        for (auto i = _bits.find_first(); i != boost::dynamic_bitset<std::uint64_t>::npos; i = _bits.find_next(i))
            f(static_cast<int>(i));
    }

private:
    boost::dynamic_bitset<std::uint64_t> _bits;
};

} // namespace dicirc
