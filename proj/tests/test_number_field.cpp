#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fields.hpp"
#include "irred/errors.hpp"
#include "irred/ideal.hpp"
#include "irred/primes.hpp"

#include <random>

using namespace irred;
using irred::test::eps13;
using irred::test::q13;

namespace {

AlgebraicInteger random_element(const NumberField& K, std::mt19937_64& rng, long bound)
{
    std::uniform_int_distribution<long> c(-bound, bound);
    std::vector<BigInt> v;
    for (unsigned i = 0; i < K.degree(); ++i)
        v.emplace_back(c(rng));
    return K.element(std::move(v));
}

const CheckStatus* find_check(const FieldDiagnostics& d, const std::string& name)
{
    for (const auto& c : d.checks)
        if (c.name == name)
            return &c.status;
    return nullptr;
}

} // namespace

TEST_CASE("make_quadratic_field")
{
    const auto& K = q13();
    CHECK(K.discriminant() == 13);
    CHECK(K.descriptor().integral_basis[1] == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
    CHECK(K.index() == 2);

    NumberField K2(make_quadratic_field(2));
    CHECK(K2.discriminant() == 8);
    CHECK(K2.index() == 1);

    CHECK_THROWS_AS(make_quadratic_field(12), InvalidInput);
    CHECK_THROWS_AS(make_quadratic_field(1), InvalidInput);
    CHECK_THROWS_AS(make_quadratic_field(-5), InvalidInput);
}

TEST_CASE("field_norm")
{
    const auto& K = q13();
    CHECK(K.norm(eps13()) == -1);
    CHECK(K.norm(K.one()) == 1);
    AlgebraicInteger e12 = K.pow(eps13(), 12);
    CHECK(K.to_power_basis(e12) == std::vector<Rational>{842401, 233640});
    CHECK(K.norm(K.sub(e12, K.one())) == -1684800);
    CHECK(K.trace(eps13()) == 3);
}

TEST_CASE("norm is multiplicative and equals the product of conjugates")
{
    std::mt19937_64 rng(17);
    const NumberField C(irred::test::cyclotomic7_plus());
    for (const NumberField* K : {&q13(), &C}) {
        for (int i = 0; i < 1000; ++i) {
            auto a = random_element(*K, rng, 50);
            auto b = random_element(*K, rng, 50);
            CHECK(K->norm(K->mul(a, b)) == K->norm(a) * K->norm(b));
        }
        for (int i = 0; i < 50; ++i) {
            auto a = random_element(*K, rng, 20);
            AlgebraicInteger prod = K->one();
            for (std::size_t k = 0; k < K->automorphism_count(); ++k)
                prod = K->mul(prod, K->apply_automorphism(k, a));
            CHECK(prod == K->from_int(K->norm(a)));
        }
    }
}

TEST_CASE("ideal_from_element")
{
    const auto& K = q13();
    auto six = ideal_from_element(K, K.from_int(6));
    CHECK(six.matrix() == IntMatrix{{6, 0}, {0, 6}});
    CHECK(six.norm() == 36);
    auto big = ideal_from_element(K, K.sub(K.pow(eps13(), 12), K.one()));
    CHECK(big.norm() == 1684800);
    CHECK(ideal_from_element(K, eps13()).is_unit_ideal());
    CHECK_THROWS_AS(ideal_from_element(K, K.zero()), InvalidInput);
}

TEST_CASE("ideal_gcd")
{
    const auto& K = q13();
    auto g = ideal_gcd(K, ideal_from_element(K, K.from_int(6)), ideal_from_element(K, K.from_int(10)));
    CHECK(g.matrix() == IntMatrix{{2, 0}, {0, 2}});
    CHECK(g.norm() == 4);
    auto I = ideal_from_element(K, K.element({7, 3}));
    CHECK(ideal_gcd(K, I, unit_ideal(K)) == unit_ideal(K));
    CHECK(ideal_norm(unit_ideal(K)) == 1);
}

TEST_CASE("ideal properties")
{
    std::mt19937_64 rng(5);
    const NumberField C(irred::test::cyclotomic7_plus());
    for (const NumberField* K : {&q13(), &C}) {
        for (int i = 0; i < 100; ++i) {
            auto a = random_element(*K, rng, 30);
            auto b = random_element(*K, rng, 30);
            auto c = random_element(*K, rng, 30);
            if (K->is_zero(a) || K->is_zero(b) || K->is_zero(c))
                continue;
            auto I = ideal_from_element(*K, a);
            auto J = ideal_from_element(*K, b);
            auto L = ideal_from_element(*K, c);
            CHECK(I.norm() == abs(K->norm(a)));
            CHECK(I.contains(a));
            CHECK(I.contains(K->mul(a, b)));
            CHECK(ideal_gcd(*K, I, J) == ideal_gcd(*K, J, I));
            CHECK(ideal_gcd(*K, ideal_gcd(*K, I, J), L) == ideal_gcd(*K, I, ideal_gcd(*K, J, L)));
            CHECK(ideal_gcd(*K, I, I) == I);
            BigInt g = gcd(I.norm(), J.norm());
            CHECK(g % ideal_gcd(*K, I, J).norm() == 0);
        }
    }
}

TEST_CASE("split_prime in Q(sqrt 13)")
{
    const auto& K = q13();
    auto three = split_prime(K, 3);
    REQUIRE(three.size() == 2);
    for (const auto& P : three) {
        CHECK(P.norm() == 3);
        CHECK(P.ramification == 1);
        CHECK(P.residue_degree == 1);
    }
    auto thirteen = split_prime(K, 13);
    REQUIRE(thirteen.size() == 1);
    CHECK(thirteen[0].ramification == 2);
    CHECK(thirteen[0].norm() == 13);
    auto five = split_prime(K, 5);
    REQUIRE(five.size() == 1);
    CHECK(five[0].norm() == 25);
    CHECK(five[0].ramification == 1);
    CHECK_THROWS_AS(split_prime(K, 2), UnsupportedPrime);
    CHECK_THROWS_AS(split_prime(K, 9), InvalidInput);
}

TEST_CASE("split_prime degree identities")
{
    const NumberField C(irred::test::cyclotomic7_plus());
    const NumberField K5(make_quadratic_field(5));
    for (const NumberField* K : {&q13(), &C, &K5}) {
        for (std::uint64_t ell : {3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 29ul, 43ul, 97ul}) {
            if (K->index() % ell == 0)
                continue;
            unsigned sum = 0;
            BigInt prod = 1;
            for (const auto& P : split_prime(*K, ell)) {
                sum += P.ramification * P.residue_degree;
                prod *= pow_ui(P.norm(), P.ramification);
                CHECK(P.ideal.contains(K->from_int(static_cast<unsigned long>(ell))));
            }
            CHECK(sum == K->degree());
            CHECK(prod == pow_ui(static_cast<unsigned long>(ell), K->degree()));
        }
    }
    // 7 is totally ramified in the cubic field; 13 splits, 2 is inert.
    auto seven = split_prime(C, 7);
    REQUIRE(seven.size() == 1);
    CHECK(seven[0].ramification == 3);
    CHECK(split_prime(C, 13).size() == 3);
    auto two = split_prime(C, 2);
    REQUIRE(two.size() == 1);
    CHECK(two[0].residue_degree == 3);
}

TEST_CASE("residue_map")
{
    const auto& K = q13();
    auto three = split_prime(K, 3);
    // (3, t - 1) has local generator t + 2
    const PrimeIdeal* P = nullptr;
    for (const auto& q : three)
        if (q.local_generator == FpPoly{2, 1})
            P = &q;
    REQUIRE(P != nullptr);
    CHECK(residue_map(K.element({0, 1}), *P) == P->residue_field.one());
    CHECK(residue_map(K.zero(), *P) == P->residue_field.zero());

    auto five = split_prime(K, 5);
    const auto& F25 = five[0].residue_field;
    auto t = residue_map(K.theta(), five[0]);
    CHECK(t == F25.generator());
    CHECK(F25.mul(t, t) == F25.from_int(std::int64_t{3}));
}

TEST_CASE("residue_map is a ring homomorphism with kernel q")
{
    std::mt19937_64 rng(23);
    const NumberField C(irred::test::cyclotomic7_plus());
    for (const NumberField* K : {&q13(), &C}) {
        for (std::uint64_t ell : {3ul, 5ul, 7ul, 13ul}) {
            if (K->index() % ell == 0)
                continue;
            for (const auto& P : split_prime(*K, ell)) {
                const auto& F = P.residue_field;
                for (int i = 0; i < 100; ++i) {
                    auto a = random_element(*K, rng, 40);
                    auto b = random_element(*K, rng, 40);
                    CHECK(residue_map(K->add(a, b), P) == F.add(residue_map(a, P), residue_map(b, P)));
                    CHECK(residue_map(K->mul(a, b), P) == F.mul(residue_map(a, P), residue_map(b, P)));
                    CHECK(F.is_zero(residue_map(a, P)) == P.ideal.contains(a));
                }
                // every basis column of the ideal maps to zero
                for (unsigned c = 0; c < K->degree(); ++c) {
                    std::vector<BigInt> col;
                    for (unsigned r = 0; r < K->degree(); ++r)
                        col.push_back(P.ideal.matrix()[r][c]);
                    CHECK(F.is_zero(residue_map(AlgebraicInteger{col}, P)));
                }
            }
        }
    }
}

TEST_CASE("verify_field")
{
    CHECK(verify_field(make_quadratic_field(13)).passed());
    CHECK(verify_field(irred::test::cyclotomic7_plus()).passed());

    FieldDescriptor cube_root;
    cube_root.min_poly = IntPoly{-2, 0, 0, 1};
    cube_root.integral_basis = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    cube_root.automorphisms = {{0, 1, 0}};
    auto d = verify_field(cube_root);
    CHECK_FALSE(d.passed());
    CHECK(*find_check(d, "automorphism_count") == CheckStatus::fail);
    CHECK(*find_check(d, "totally_real") == CheckStatus::fail);
    CHECK(*find_check(d, "irreducible") == CheckStatus::pass);

    FieldDescriptor gaussian;
    gaussian.min_poly = IntPoly{1, 0, 1};
    gaussian.integral_basis = {{1, 0}, {0, 1}};
    gaussian.automorphisms = {{0, 1}, {0, -1}};
    auto g = verify_field(gaussian);
    CHECK_FALSE(g.passed());
    CHECK(*find_check(g, "totally_real") == CheckStatus::fail);
    CHECK(*find_check(g, "closed_under_composition") == CheckStatus::pass);

    FieldDescriptor broken = make_quadratic_field(13);
    broken.automorphisms = {{0, -1}};
    auto b = verify_field(broken);
    CHECK(*find_check(b, "closed_under_composition") == CheckStatus::fail);
    CHECK_THROWS_AS(NumberField{broken}, VerificationError);

    FieldDescriptor reducible;
    reducible.min_poly = IntPoly{6, 0, -5, 0, 1}; // (x^2 - 2)(x^2 - 3)
    reducible.integral_basis = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    CHECK(*find_check(verify_field(reducible), "irreducible") == CheckStatus::fail);

    FieldDescriptor biquadratic;
    biquadratic.min_poly = IntPoly{1, 0, -10, 0, 1}; // sqrt2 + sqrt3
    biquadratic.integral_basis = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    CHECK(*find_check(verify_field(biquadratic), "irreducible") == CheckStatus::pass);

    FieldDescriptor nonintegral = make_quadratic_field(13);
    nonintegral.integral_basis[1] = {Rational(1, 3), Rational(1, 3)};
    CHECK_FALSE(verify_field(nonintegral).passed());
}
