#include <dicirc/residue_set.hpp>

#include <algorithm>
#include <sstream>

namespace dicirc {

ResidueSet::ResidueSet(int modulus) :
    _bits(static_cast<std::size_t>(modulus))
{
}

ResidueSet::ResidueSet(int modulus, std::initializer_list<int> elements) :
    _bits(static_cast<std::size_t>(modulus))
{
    for (auto e : elements)
        insert(e);
}

ResidueSet::ResidueSet(int modulus, std::span<const int> elements) :
    _bits(static_cast<std::size_t>(modulus))
{
    for (auto e : elements)
        insert(e);
}

auto ResidueSet::full(int modulus) -> ResidueSet
{
    ResidueSet result(modulus);
    result._bits.set();
    return result;
}

auto ResidueSet::translated(long long shift) const -> ResidueSet
{
    auto m = modulus();
    if (m == 0)
        return *this;
    auto s = static_cast<std::size_t>(mod(shift, m));
    ResidueSet result;
    if (s == 0)
        result._bits = _bits;
    else
        result._bits = (_bits << s) | (_bits >> (static_cast<std::size_t>(m) - s));
    return result;
}

auto ResidueSet::scaled(long long u) const -> ResidueSet
{
    ResidueSet result(modulus());
    for_each([&](int i) { result.insert(u * i); });
    return result;
}

auto ResidueSet::negated() const -> ResidueSet
{
    return scaled(-1);
}

auto ResidueSet::complement() const -> ResidueSet
{
    ResidueSet result;
    result._bits = ~_bits;
    return result;
}

auto ResidueSet::intersection_size(const ResidueSet & other) const -> int
{
    return static_cast<int>((_bits & other._bits).count());
}

auto ResidueSet::operator&(const ResidueSet & other) const -> ResidueSet
{
    ResidueSet result;
    result._bits = _bits & other._bits;
    return result;
}

auto ResidueSet::operator|(const ResidueSet & other) const -> ResidueSet
{
    ResidueSet result;
    result._bits = _bits | other._bits;
    return result;
}

auto ResidueSet::elements() const -> std::vector<int>
{
    std::vector<int> result;
    result.reserve(_bits.count());
    for_each([&](int i) { result.push_back(i); });
    return result;
}

auto ResidueSet::to_string() const -> std::string
{
    std::ostringstream out;
    bool first = true;
    for_each([&](int i) {
        if (! first)
            out << ',';
        out << i;
        first = false;
    });
    return out.str();
}

auto ResidueSet::operator<=>(const ResidueSet & other) const -> std::strong_ordering
{
    auto a = elements(), b = other.elements();
    if (auto c = std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end()); c != 0)
        return c;
    return modulus() <=> other.modulus();
}

} // namespace dicirc
