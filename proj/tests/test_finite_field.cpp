#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "irred/errors.hpp"
#include "irred/finite_field.hpp"

#include <random>

using namespace irred;

namespace {

// Number of monic irreducibles of degree n over F_p (necklace formula), n <= 6.
long necklace(long p, int n)
{
    auto mu = [](int k) {
        int r = 1;
        for (int d = 2; d <= k; ++d) {
            if (k % d)
                continue;
            k /= d;
            if (k % d == 0)
                return 0;
            r = -r;
        }
        return r;
    };
    long total = 0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) {
            long pw = 1;
            for (int i = 0; i < n / d; ++i)
                pw *= p;
            total += mu(d) * pw;
        }
    return total / n;
}

} // namespace

TEST_CASE("prime field arithmetic")
{
    PrimeField F(1'000'000'007);
    CHECK(F.mul(F.inv(12345), 12345) == 1);
    CHECK(F.pow(3, 1'000'000'006) == 1);
    PrimeField G((1ULL << 61) - 1);
    CHECK(G.mul(G.inv(987654321987ULL), 987654321987ULL) == 1);
    CHECK_THROWS(F.inv(0));
}

TEST_CASE("irreducible counts")
{
    for (std::uint64_t p : {2, 3, 5}) {
        PrimeField F(p);
        for (int n = 1; n <= 4; ++n) {
            long count = 0;
            std::uint64_t total = 1;
            for (int i = 0; i < n; ++i)
                total *= p;
            for (std::uint64_t idx = 0; idx < total; ++idx) {
                FpPoly g(n + 1, 0);
                g[n] = 1;
                auto rest = idx;
                for (int i = 0; i < n; ++i) {
                    g[i] = rest % p;
                    rest /= p;
                }
                count += fp_poly::is_irreducible(F, g);
            }
            CHECK(count == necklace(static_cast<long>(p), n));
        }
    }
}

TEST_CASE("factor reconstructs its input")
{
    std::mt19937_64 rng(41);
    for (std::uint64_t p : {2, 3, 7, 13, 101}) {
        PrimeField F(p);
        std::uniform_int_distribution<std::uint64_t> c(0, p - 1);
        for (int k = 0; k < 40; ++k) {
            FpPoly f(2 + k % 9);
            for (auto& x : f)
                x = c(rng);
            f.back() = 1;
            auto parts = fp_poly::factor(F, f);
            FpPoly prod{1};
            for (const auto& [g, e] : parts) {
                CHECK(fp_poly::is_irreducible(F, g));
                for (unsigned i = 0; i < e; ++i)
                    prod = fp_poly::mul(F, prod, g);
            }
            CHECK(prod == f);
        }
    }
}

TEST_CASE("residue field axioms")
{
    std::mt19937_64 rng(13);
    for (auto [p, f] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {2, 5}, {3, 3}, {5, 2}, {17, 2}, {7, 3}}) {
        auto F = ResidueField::make(p, f);
        const std::uint64_t q = F.size().get_ui();
        std::uniform_int_distribution<std::uint64_t> pick(0, q - 1);
        for (int k = 0; k < 200; ++k) {
            auto a = F.element_at(pick(rng));
            auto b = F.element_at(pick(rng));
            CHECK(F.index_of(a) < q);
            CHECK(F.element_at(F.index_of(a)) == a);
            CHECK(F.mul(a, b) == F.mul(b, a));
            CHECK(F.pow(a, F.size()) == a);
            if (!F.is_zero(a))
                CHECK(F.mul(a, F.inv(a)) == F.one());
            // absolute trace as the sum of Frobenius conjugates
            auto acc = a, term = a;
            for (unsigned i = 1; i < f; ++i) {
                term = F.pow(term, BigInt(static_cast<unsigned long>(p)));
                acc = F.add(acc, term);
            }
            CHECK(acc == F.from_int(static_cast<std::int64_t>(F.trace(a))));
            CHECK(F.trace(F.add(a, b)) == (F.trace(a) + F.trace(b)) % p);
            if (p != 2)
                CHECK(F.quadratic_character(F.mul(a, b)) == F.quadratic_character(a) * F.quadratic_character(b));
        }
    }
    CHECK_THROWS_AS(ResidueField::make(5, 0), InvalidInput);
    CHECK_THROWS_AS(ResidueField(5, FpPoly{1, 0, 2}), InvalidInput);
}
