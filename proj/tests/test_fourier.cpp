#include <dicirc/error.hpp>
#include <dicirc/fourier.hpp>

#include <doctest.h>
#include <oracles.hpp>

#include <random>

using namespace dicirc;

namespace
{
    auto func(std::vector<long long> v) -> IntegerFunction { return { static_cast<int>(v.size()), std::move(v) }; }

    auto random_function(std::mt19937 & rng, int m) -> IntegerFunction
    {
        std::uniform_int_distribution<int> value(-5, 5);
        IntegerFunction f = zero_function(m);
        for (auto & x : f.values)
            x = value(rng);
        return f;
    }

    auto random_set(std::mt19937 & rng, int m) -> ResidueSet
    {
        ResidueSet a(m);
        for (int i = 0; i < m; ++i)
            if (rng() & 1)
                a.insert(i);
        return a;
    }

    auto subset(int m, unsigned mask) -> ResidueSet
    {
        ResidueSet a(m);
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1)
                a.insert(i);
        return a;
    }

    auto is_prime(int p) -> bool
    {
        if (p < 2)
            return false;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0)
                return false;
        return true;
    }
}

TEST_CASE("convolution examples")
{
    auto delta0 = characteristic(ResidueSet(6, { 0 }));
    auto f = func({ 3, -1, 4, 1, -5, 9 });
    CHECK(convolve(f, delta0) == f);

    auto a = characteristic(ResidueSet(4, { 0, 2 }));
    CHECK(convolve(a, a).values == std::vector<long long>{ 2, 0, 2, 0 });
    CHECK_THROWS_AS(convolve(a, delta0), Error);
}

TEST_CASE("convolution matches the double sum, is commutative and counts (i - A) n B")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        int m = 1 + static_cast<int>(rng() % 64);
        auto f = random_function(rng, m), g = random_function(rng, m);
        CHECK(convolve(f, g) == convolve(g, f));
        CHECK(convolve(f, g).values == oracle::direct_convolution(f.values, g.values));

        auto a = random_set(rng, m), b = random_set(rng, m);
        auto c = convolve(characteristic(a), characteristic(b));
        for (int i = 0; i < m; ++i)
            REQUIRE(c.values[i] == a.negated().translated(i).intersection_size(b));
    }
}

TEST_CASE("dft examples")
{
    auto one = dft(characteristic(ResidueSet(8, { 0 })));
    for (auto z : one.values)
        CHECK(std::abs(z - 1.0) < 1e-12);

    auto all = dft(characteristic(ResidueSet::full(8)));
    for (int z = 0; z < 8; ++z)
        CHECK(std::abs(all.values[z] - (z == 0 ? 8.0 : 0.0)) < 1e-9);

    auto d = dft(characteristic(ResidueSet(4, { 0, 2 })));
    std::vector<double> expected{ 2, 0, 2, 0 };
    for (int z = 0; z < 4; ++z)
        CHECK(std::abs(d.values[z] - expected[z]) < 1e-12);

    auto v = dft(characteristic(ResidueSet(4, { 0, 1 })));
    CHECK(std::abs(v.values[2]) < 1e-12);
}

TEST_CASE("dft agrees with direct evaluation and value at 0 is |A|")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int m = 1 + static_cast<int>(rng() % 64);
        auto a = random_set(rng, m);
        auto f = dft(characteristic(a));
        auto direct = oracle::direct_dft(characteristic(a).values);
        for (int z = 0; z < m; ++z)
            REQUIRE(std::abs(f.values[z] - direct[z]) < 1e-9);
        CHECK(std::abs(f.values[0].real() - a.size()) < 1e-12);
        CHECK(std::abs(f.values[0].imag()) < 1e-12);
    }
}

TEST_CASE("convolution theorem on random pairs")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        int m = 1 + static_cast<int>(rng() % 128);
        auto f = random_function(rng, m), g = random_function(rng, m);
        auto lhs = dft(convolve(f, g));
        auto ff = dft(f), fg = dft(g);
        for (int z = 0; z < m; ++z)
            REQUIRE(std::abs(lhs.values[z] - ff.values[z] * fg.values[z]) < 1e-9);
    }
}

TEST_CASE("unit orbits")
{
    auto six = unit_orbits(6);
    REQUIRE(six.orbits.size() == 4);
    CHECK(six.orbits[0].members == ResidueSet(6, { 0 }));
    CHECK(six.orbits[1].members == ResidueSet(6, { 3 }));
    CHECK(six.orbits[2].members == ResidueSet(6, { 2, 4 }));
    CHECK(six.orbits[3].members == ResidueSet(6, { 1, 5 }));

    auto four = unit_orbits(4);
    REQUIRE(four.orbits.size() == 3);
    CHECK(four.orbits[1].members == ResidueSet(4, { 2 }));
    CHECK(four.orbits[2].members == ResidueSet(4, { 1, 3 }));

    for (int m = 1; m <= 64; ++m) {
        ResidueSet seen(m);
        for (auto & o : unit_orbits(m).orbits) {
            CHECK(o.members.size() == oracle::euler_phi(o.order));
            CHECK(seen.intersection_size(o.members) == 0);
            seen = seen | o.members;
        }
        CHECK(seen.size() == m);
    }
    for (int r = 1; r <= 64; ++r)
        CHECK(euler_phi(r) == oracle::euler_phi(r));
}

TEST_CASE("unions of unit orbits have real integer transforms")
{
    for (int m = 1; m <= 30; ++m) {
        auto orbits = unit_orbits(m).orbits;
        for (unsigned mask = 0; mask < (1u << orbits.size()); ++mask) {
            ResidueSet a(m);
            for (std::size_t i = 0; i < orbits.size(); ++i)
                if (mask >> i & 1)
                    a = a | orbits[i].members;
            REQUIRE(is_orbit_union(a));
            for (auto z : dft(characteristic(a)).values) {
                CHECK(std::abs(z.imag()) < 1e-9);
                CHECK(std::abs(z.real() - std::round(z.real())) < 1e-6);
            }
        }
    }
    CHECK_FALSE(is_orbit_union(ResidueSet(6, { 1 })));
}

TEST_CASE("transversals and coset profiles")
{
    CHECK(is_transversal(ResidueSet(4, { 0, 1 }), 2));
    CHECK_FALSE(is_transversal(ResidueSet(4, { 0, 2 }), 2));
    CHECK_THROWS_AS(is_transversal(ResidueSet(4, { 0 }), 3), Error);

    auto p = coset_profile(ResidueSet(6, { 1, 2, 4 }), 3);
    CHECK(p.counts == std::vector<int>{ 0, 2, 1 });
    CHECK(std::abs(p.evaluate() - dft(characteristic(ResidueSet(6, { 1, 2, 4 }))).values[2]) < 1e-9);
    CHECK(coset_profile(ResidueSet(4, { 0, 1 }), 2).counts == std::vector<int>{ 1, 1 });
    CHECK_THROWS_AS(coset_profile(ResidueSet(6, { 0 }), 4), Error);

    for (int m = 1; m <= 16; ++m)
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            auto a = subset(m, mask);
            auto f = dft(characteristic(a));
            for (int r : divisors(m)) {
                auto prof = coset_profile(a, r);
                int total = 0;
                for (int e : prof.counts)
                    total += e;
                REQUIRE(total == a.size());
                REQUIRE(std::abs(prof.evaluate() - f.values[(m / r) % m]) < 1e-9);
                if (is_transversal(a, r) && r > 1)
                    REQUIRE(std::abs(f.values[(m / r) % m]) < 1e-9);
            }
        }
}

TEST_CASE("orbit-transversal lemma")
{
    CHECK_THROWS_AS(check_orbit_transversal_lemma(ResidueSet(6, { 0, 2, 4 }), 3), Error);
    // {0} u {1,5} meets each coset of 3Z_6 once (5 = 2 + 3), so the lemma applies with p = 2
    CHECK(check_orbit_transversal_lemma(ResidueSet(6, { 0, 1, 5 }), 2));
    CHECK_THROWS_AS(check_orbit_transversal_lemma(ResidueSet(4, { 0, 1, 3 }), 2), Error);
    CHECK_THROWS_AS(check_orbit_transversal_lemma(ResidueSet(6, { 0, 3 }), 4), Error);

    int applicable = 0;
    for (int m = 2; m <= 24; ++m) {
        auto orbits = unit_orbits(m).orbits;
        for (int p = 2; p <= m; ++p) {
            if (m % p != 0 || ! is_prime(p))
                continue;
            for (unsigned mask = 0; mask < (1u << orbits.size()); ++mask) {
                ResidueSet a(m);
                for (std::size_t i = 0; i < orbits.size(); ++i)
                    if (mask >> i & 1)
                        a = a | orbits[i].members;
                if (! is_transversal(a, m / p))
                    continue;
                ++applicable;
                CHECK(check_orbit_transversal_lemma(a, p));
            }
        }
    }
    CHECK(applicable > 0);
}

TEST_CASE("Fourier lemma on small DRGs")
{
    ConnectionSpec k42{ 2, ResidueSet(4, { 1, 3 }), ResidueSet(4, { 0, 1, 2, 3 }) };
    auto a = check_fourier_lemma(k42);
    CHECK(a.exact_holds);
    CHECK(a.holds());

    ConnectionSpec c4{ 1, ResidueSet(2), ResidueSet(2, { 0, 1 }) };
    CHECK(check_fourier_lemma(c4).holds());

    ConnectionSpec k4{ 1, ResidueSet(2, { 1 }), ResidueSet(2, { 0, 1 }) };
    CHECK(check_fourier_lemma(k4).holds());

    ConnectionSpec bad{ 4, ResidueSet(8, { 1, 7 }), ResidueSet(8, { 1, 5 }) };
    try {
        check_fourier_lemma(bad);
        FAIL("expected NotDistanceRegular");
    }
    catch (const Error & e) {
        CHECK(e.code() == ErrorCode::NotDistanceRegular);
    }
}
