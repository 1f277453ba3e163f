#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "irred/errors.hpp"
#include "irred/exact_arith.hpp"

#include <random>

using namespace irred;

TEST_CASE("resultant_sylvester small cases")
{
    // Determinant convention: Res(f, g) = lc(f)^deg g * prod g(roots of f).
    CHECK(resultant_sylvester(IntPoly{-2, 1}, IntPoly{-5, 1}) == -3);
    CHECK(abs(resultant_sylvester(IntPoly{-2, 1}, IntPoly{-5, 1})) == 3);
    // f(1) * f(-1) = 2 * 4
    CHECK(resultant_sylvester(IntPoly{2, -1, 1}, IntPoly{-1, 0, 1}) == 8);
    CHECK(resultant_sylvester(IntPoly{1, -2, 1}, IntPoly::binomial(12, 1)) == 0);
    CHECK_THROWS_AS(resultant_sylvester(IntPoly{}, IntPoly{}), InvalidInput);
    CHECK(resultant_sylvester(IntPoly{3}, IntPoly{1, 1, 1}) == 9);
}

TEST_CASE("resultant_quadratic_cyclotomic")
{
    CHECK(resultant_quadratic_cyclotomic(1, 2, 2) == 8);
    CHECK(resultant_quadratic_cyclotomic(2, 1, 12) == 0);
    // s_12 = 2 * (-5)^6 = 31250
    CHECK(lucas_power_sum(0, 5, 12) == 31250);
    CHECK(resultant_quadratic_cyclotomic(0, 5, 12) == 244109376);
    CHECK(lucas_power_sum(1, 3, 12) == -1358);
    CHECK(resultant_quadratic_cyclotomic(1, 3, 12) == 532800);
    CHECK_THROWS_AS(resultant_quadratic_cyclotomic(1, 3, 0), InvalidInput);
}

TEST_CASE("closed form agrees with the Sylvester determinant")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> a_dist(-1000, 1000);
    std::uniform_int_distribution<long> n_dist(1, 1000);
    std::uniform_int_distribution<unsigned> m_dist(1, 24);
    for (int i = 0; i < 300; ++i) {
        long a = a_dist(rng), n = n_dist(rng);
        unsigned m = m_dist(rng);
        CHECK(resultant_quadratic_cyclotomic(a, n, m) ==
              resultant_sylvester(IntPoly{n, -a, 1}, IntPoly::binomial(m, 1)));
    }
}

TEST_CASE("resultant antisymmetry Res(f,g) = (-1)^(mn) Res(g,f)")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> c(-9, 9);
    std::uniform_int_distribution<int> deg(1, 6);
    for (int i = 0; i < 200; ++i) {
        std::vector<BigInt> fc, gc;
        int df = deg(rng), dg = deg(rng);
        for (int k = 0; k < df; ++k) fc.emplace_back(c(rng));
        fc.emplace_back(c(rng) | 1);
        for (int k = 0; k < dg; ++k) gc.emplace_back(c(rng));
        gc.emplace_back(c(rng) | 1);
        IntPoly f(fc), g(gc);
        int sign = (f.degree() * g.degree()) % 2 ? -1 : 1;
        CHECK(resultant_sylvester(f, g) == sign * resultant_sylvester(g, f));
    }
}

TEST_CASE("factorize")
{
    auto f = factorize(1684800);
    CHECK(f.to_string() == "2^6*3^4*5^2*13");
    CHECK(f.sign == 1);
    CHECK(factorize(-1684800).sign == -1);
    CHECK(factorize(1).primes.empty());
    CHECK(factorize(532800).to_string() == "2^6*3^2*5^2*37");
    CHECK_THROWS_AS(factorize(0), InvalidInput);

    // Two primes above the trial-division bound: needs rho.
    BigInt p("1000003"), q("998244353");
    auto pq = factorize(BigInt(p * q * q));
    CHECK(pq.primes.size() == 2);
    CHECK(pq.primes[q] == 2);
    CHECK(pq.all_certified());

    // 2^61 - 1 is prime but above the deterministic range.
    BigInt m61 = pow_ui(2, 61) - 1;
    auto big = factorize(m61);
    CHECK(big.primes.size() == 1);
    CHECK(big.probable.count(m61) == 1);
}

TEST_CASE("factorization round-trips")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
        BigInt n = BigInt(static_cast<unsigned long>(rng() >> 4)) * (i % 2 ? -1 : 1);
        if (n == 0)
            continue;
        auto f = factorize(n);
        CHECK(f.value() == n);
        for (const auto& [p, e] : f.primes)
            CHECK(is_probable_prime(p));
    }
}

TEST_CASE("primality")
{
    CHECK(is_certified_prime(2));
    CHECK(is_certified_prime(22777));
    CHECK_FALSE(is_probable_prime(1));
    CHECK_FALSE(is_probable_prime(561));
    // strong pseudoprime to bases 2, 3, 5, 7, 11, 13 but not 17
    CHECK_FALSE(is_probable_prime(BigInt("3474749660383")));
}

TEST_CASE("gcd_lcm_set")
{
    std::vector<BigInt> v{532800, 14};
    CHECK(gcd_lcm_set(v, Reduce::gcd) == 2);
    std::vector<BigInt> w{4, 6};
    CHECK(gcd_lcm_set(w, Reduce::lcm) == 12);
    std::vector<BigInt> z{0, 0};
    CHECK(gcd_lcm_set(z, Reduce::gcd) == 0);
    std::vector<BigInt> bad{3, 0};
    CHECK_THROWS_AS(gcd_lcm_set(bad, Reduce::lcm), InvalidInput);
    CHECK_THROWS_AS(gcd_lcm_set(std::vector<BigInt>{}, Reduce::gcd), InvalidInput);
    std::vector<BigInt> neg{-6, 4};
    CHECK(gcd_lcm_set(neg, Reduce::gcd) == 2);
}

TEST_CASE("IntPoly basics")
{
    IntPoly f{-1, 0, 1};
    CHECK(f.degree() == 2);
    CHECK(f.eval(3) == 8);
    CHECK((f * f).degree() == 4);
    CHECK((f - f).is_zero());
    CHECK(f.to_string() == "X^2 - 1");
    CHECK(IntPoly::binomial(12, 1).coeff(12) == 1);
}
