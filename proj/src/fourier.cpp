#include <dicirc/cayley.hpp>
#include <dicirc/error.hpp>
#include <dicirc/fourier.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace dicirc {

auto zero_function(int modulus) -> IntegerFunction
{
    return { modulus, std::vector<long long>(static_cast<std::size_t>(modulus), 0) };
}

auto characteristic(const ResidueSet & a) -> IntegerFunction
{
    auto f = zero_function(a.modulus());
    a.for_each([&](int i) { f.values[i] = 1; });
    return f;
}

auto convolve(const IntegerFunction & f, const IntegerFunction & g) -> IntegerFunction
{
    if (f.modulus != g.modulus)
        throw Error(ErrorCode::ModulusMismatch,
            "convolution of functions on Z_" + std::to_string(f.modulus) + " and Z_" + std::to_string(g.modulus));
    const int m = f.modulus;
    auto result = zero_function(m);
    for (int i = 0; i < m; ++i) {
        if (f.values[i] == 0)
            continue;
        for (int z = 0; z < m; ++z)
            result.values[z] += f.values[i] * g.values[mod(z - i, m)];
    }
    return result;
}

auto operator+(const IntegerFunction & f, const IntegerFunction & g) -> IntegerFunction
{
    if (f.modulus != g.modulus)
        throw Error(ErrorCode::ModulusMismatch, "sum of functions on different groups");
    auto result = f;
    for (std::size_t i = 0; i < result.values.size(); ++i)
        result.values[i] += g.values[i];
    return result;
}

auto operator*(long long s, const IntegerFunction & f) -> IntegerFunction
{
    auto result = f;
    for (auto & v : result.values)
        v *= s;
    return result;
}

namespace
{
    auto roots_of_unity(int m) -> std::vector<std::complex<double>>
    {
        std::vector<std::complex<double>> w(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k)
            w[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / m);
        return w;
    }
}

auto dft(const IntegerFunction & f) -> FourierVector
{
    const int m = f.modulus;
    auto w = roots_of_unity(m);
    FourierVector result{ m, std::vector<std::complex<double>>(static_cast<std::size_t>(m)) };
    for (int z = 0; z < m; ++z) {
        std::complex<double> sum = 0.0;
        for (int i = 0; i < m; ++i)
            if (f.values[i] != 0)
                sum += static_cast<double>(f.values[i]) * w[static_cast<std::size_t>((static_cast<long long>(i) * z) % m)];
        result.values[z] = sum;
    }
    return result;
}

auto max_abs_difference(const FourierVector & a, const FourierVector & b) -> double
{
    double worst = 0.0;
    for (std::size_t i = 0; i < std::min(a.values.size(), b.values.size()); ++i)
        worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
    return worst;
}

auto euler_phi(int r) -> int
{
    int result = r;
    for (int p = 2; p * p <= r; ++p)
        if (r % p == 0) {
            while (r % p == 0)
                r /= p;
            result -= result / p;
        }
    if (r > 1)
        result -= result / r;
    return result;
}

auto divisors(int m) -> std::vector<int>
{
    std::vector<int> result;
    for (int d = 1; d <= m; ++d)
        if (m % d == 0)
            result.push_back(d);
    return result;
}

auto unit_orbits(int m) -> OrbitPartition
{
    OrbitPartition result{ m, {} };
    for (int r : divisors(m)) {
        UnitOrbit orbit{ r, ResidueSet(m) };
        for (int c = 1; c <= m; ++c)
            if (std::gcd(c % m, m) == 1 || m == 1)
                orbit.members.insert(static_cast<long long>(c) * (m / r));
        result.orbits.push_back(std::move(orbit));
    }
    return result;
}

auto is_orbit_union(const ResidueSet & a) -> bool
{
    const int m = a.modulus();
    for (int u = 1; u < m; ++u)
        if (std::gcd(u, m) == 1 && a.scaled(u) != a)
            return false;
    return true;
}

namespace
{
    auto require_divisor(int r, int m) -> void
    {
        if (r < 1 || m % r != 0)
            throw Error(ErrorCode::InvalidDivisor, std::to_string(r) + " does not divide " + std::to_string(m));
    }
}

auto coset_profile(const ResidueSet & a, int r) -> CosetCountProfile
{
    require_divisor(r, a.modulus());
    CosetCountProfile profile{ a.modulus(), r, std::vector<int>(static_cast<std::size_t>(r), 0) };
    a.for_each([&](int x) { ++profile.counts[x % r]; });
    return profile;
}

auto CosetCountProfile::evaluate() const -> std::complex<double>
{
    std::complex<double> sum = 0.0;
    for (int i = 0; i < divisor; ++i)
        sum += static_cast<double>(counts[i]) * std::polar(1.0, 2.0 * std::numbers::pi * i / divisor);
    return sum;
}

auto is_transversal(const ResidueSet & a, int r) -> bool
{
    auto profile = coset_profile(a, r);
    return std::all_of(profile.counts.begin(), profile.counts.end(), [](int e) { return e == 1; });
}

auto check_fourier_lemma(const ConnectionSpec & spec, const DistancePartition & partition,
    const IntersectionArray & array, double tolerance) -> FourierLemmaCheck
{
    const long long k = array.valency(), lambda = array.lambda(), mu = array.mu().value_or(0);
    const auto & r_set = spec.R;
    const auto & t_set = spec.T;
    auto r2_set = partition.R_at(2), t2_set = partition.T_at(2);
    const int m = 2 * spec.n;

    auto delta_r = characteristic(r_set), delta_t = characteristic(t_set);
    auto delta_r2 = characteristic(r2_set), delta_t2 = characteristic(t2_set);
    auto delta_0 = characteristic(ResidueSet(m, { 0 }));

    FourierLemmaCheck result;
    auto lhs1 = convolve(delta_r, delta_r) + convolve(delta_t, characteristic(t_set.negated()));
    auto rhs1 = k * delta_0 + lambda * delta_r + mu * delta_r2;
    auto lhs2 = 2 * convolve(delta_r, delta_t);
    auto rhs2 = lambda * delta_t + mu * delta_t2;
    result.exact_holds = lhs1 == rhs1 && lhs2 == rhs2;

    auto r = dft(delta_r), t = dft(delta_t), r2 = dft(delta_r2), t2 = dft(delta_t2);
    double worst = 0.0;
    for (int z = 0; z < m; ++z) {
        auto left1 = r.values[z] * r.values[z] + std::norm(t.values[z]);
        auto right1 = static_cast<double>(k) + static_cast<double>(lambda) * r.values[z]
            + static_cast<double>(mu) * r2.values[z];
        auto left2 = 2.0 * r.values[z] * t.values[z];
        auto right2 = static_cast<double>(lambda) * t.values[z] + static_cast<double>(mu) * t2.values[z];
        worst = std::max({ worst, std::abs(left1 - right1), std::abs(left2 - right2) });
    }
    result.max_residual = worst;
    result.numeric_holds = worst <= tolerance;
    return result;
}

auto check_fourier_lemma(const ConnectionSpec & spec, double tolerance) -> FourierLemmaCheck
{
    auto g = build_graph(require_valid(spec));
    if (! g.is_connected())
        throw Error(ErrorCode::NotDistanceRegular, format_spec(spec) + " is disconnected");
    auto drg = is_distance_regular(g, true);
    if (! std::holds_alternative<IntersectionArray>(drg))
        throw Error(ErrorCode::NotDistanceRegular, format_spec(spec) + ": " + std::get<NotDrgWitness>(drg).describe());
    return check_fourier_lemma(spec, distance_partition(g, 0), std::get<IntersectionArray>(drg), tolerance);
}

auto check_orbit_transversal_lemma(const ResidueSet & a, int p) -> bool
{
    const int m = a.modulus();
    bool prime = p >= 2;
    for (int d = 2; d * d <= p && prime; ++d)
        prime = p % d != 0;
    if (! prime || m % p != 0)
        throw Error(ErrorCode::InvalidDivisor, std::to_string(p) + " is not a prime divisor of " + std::to_string(m));
    if (! is_transversal(a, m / p))
        throw Error(ErrorCode::PreconditionViolated, "A is not a transversal of " + std::to_string(m / p) + "Z_" + std::to_string(m));
    if (! is_orbit_union(a))
        throw Error(ErrorCode::PreconditionViolated, "A is not a union of unit orbits");

    ResidueSet multiples(m);
    for (int x = 0; x < m; x += p)
        multiples.insert(x);
    return p == 2 || a == multiples;
}

} // namespace dicirc
