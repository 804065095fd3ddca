#pragma once

#include <dicirc/metrics.hpp>
#include <dicirc/residue_set.hpp>
#include <dicirc/spec.hpp>

#include <complex>
#include <vector>

namespace dicirc {

constexpr double default_tolerance = 1e-9;

/// An integer-valued function on Z_m.
struct IntegerFunction {
    int modulus = 0;
    std::vector<long long> values;

    auto operator==(const IntegerFunction &) const -> bool = default;
};

auto zero_function(int modulus) -> IntegerFunction;
/// Delta_A
auto characteristic(const ResidueSet & a) -> IntegerFunction;

/// (f * g)(z) = sum_i f(i) g(z - i). Throws ModulusMismatch.
auto convolve(const IntegerFunction & f, const IntegerFunction & g) -> IntegerFunction;

auto operator+(const IntegerFunction & f, const IntegerFunction & g) -> IntegerFunction;
auto operator*(long long s, const IntegerFunction & f) -> IntegerFunction;

struct FourierVector {
    int modulus = 0;
    std::vector<std::complex<double>> values;
};

/// (Ff)(z) = sum_i f(i) w^(iz) with w = exp(2 pi i / m); for m = 2n this is exp(pi i / n).
auto dft(const IntegerFunction & f) -> FourierVector;

/// Largest pointwise |a - b|.
auto max_abs_difference(const FourierVector & a, const FourierVector & b) -> double;

struct UnitOrbit {
    int order = 1;        // additive order r of every member
    ResidueSet members;   // O_r = { c (m/r) : c a unit }
};

/// Orbits of Z_m^* acting on Z_m by multiplication, sorted by r.
struct OrbitPartition {
    int modulus = 0;
    std::vector<UnitOrbit> orbits;
};

auto unit_orbits(int m) -> OrbitPartition;
auto euler_phi(int r) -> int;
auto divisors(int m) -> std::vector<int>;
auto is_orbit_union(const ResidueSet & a) -> bool;

/// True iff A meets every coset i + rZ_m exactly once. Throws InvalidDivisor unless r | m.
auto is_transversal(const ResidueSet & a, int r) -> bool;

/// e_i = |A n (i + rZ_m)| for 0 <= i < r.
struct CosetCountProfile {
    int modulus = 0;
    int divisor = 1;
    std::vector<int> counts;

    /// e_0 + e_1 xi + ... + e_{r-1} xi^{r-1}, xi = w^(m/r)
    auto evaluate() const -> std::complex<double>;
};

auto coset_profile(const ResidueSet & a, int r) -> CosetCountProfile;

struct FourierLemmaCheck {
    /// the integer convolution identities behind the Fourier ones
    bool exact_holds = false;
    /// both Fourier identities within tolerance at every point of Z_2n
    bool numeric_holds = false;
    double max_residual = 0.0;

    auto holds() const -> bool { return exact_holds && numeric_holds; }
};

/// r^2 + |t|^2 = k + lambda r + mu r_2 and 2rt = lambda t + mu t_2, with r, t, r_2, t_2 the
/// transforms of Delta over R, T, R_2, T_2. `partition` must be based at the identity. For
/// diameter 1 the mu terms vanish (R_2 and T_2 are empty).
auto check_fourier_lemma(const ConnectionSpec & spec, const DistancePartition & partition,
    const IntersectionArray & array, double tolerance = default_tolerance) -> FourierLemmaCheck;

/// Builds the graph and runs the check; throws NotDistanceRegular when the graph is not a DRG.
auto check_fourier_lemma(const ConnectionSpec & spec, double tolerance = default_tolerance) -> FourierLemmaCheck;

/// For A a transversal of (m/p)Z_m that is a union of unit orbits: confirms p = 2 or A = pZ_m.
/// Throws PreconditionViolated when A is not such a set, InvalidDivisor unless p is a prime divisor.
auto check_orbit_transversal_lemma(const ResidueSet & a, int p) -> bool;

} // namespace dicirc
