#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fields.hpp"
#include "irred/errors.hpp"
#include "irred/signature_bound.hpp"
#include "irred/units.hpp"

#include <random>

using namespace irred;

namespace {

// x + y sqrt D with rational coordinates, independent of NumberField.
struct QuadElt {
    Rational x, y;
};

QuadElt qmul(const QuadElt& a, const QuadElt& b, long D)
{
    return {a.x * b.x + D * a.y * b.y, a.x * b.y + a.y * b.x};
}

// |Norm(u^12 - 1)| * |Norm(u'^12 - 1)|^0 via conjugate products.
BigInt conjugate_product_oracle(long D, QuadElt u)
{
    QuadElt p{1, 0};
    for (int i = 0; i < 12; ++i)
        p = qmul(p, u, D);
    p.x -= 1;
    Rational n = p.x * p.x - D * p.y * p.y;
    REQUIRE(n.get_den() == 1);
    return abs(n.get_num());
}

UnitBasis fundamental_basis(const NumberField& K, long D)
{
    return verify_unit_basis(K, {fundamental_unit_quadratic(D)}, UnitProvenance::computed);
}

QuadElt as_quad(const NumberField& K, const AlgebraicInteger& a)
{
    auto pb = K.to_power_basis(a);
    return {pb[0], pb[1]};
}

} // namespace

TEST_CASE("signature enumeration")
{
    auto two = enumerate_nonconstant_signatures(2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].to_string() == "(12,0)");
    CHECK(two[1].to_string() == "(0,12)");
    CHECK(enumerate_nonconstant_signatures(3).size() == 6);
    for (const auto& s : enumerate_nonconstant_signatures(4))
        CHECK_FALSE(s.is_constant());
    CHECK(Signature({12, 12}).is_constant());
    CHECK_THROWS_AS(Signature({12, 5}), InvalidInput);
    CHECK_THROWS_AS(enumerate_nonconstant_signatures(21), SizeCapExceeded);
}

TEST_CASE("A_s over Q(sqrt 13), Q(sqrt 5), Q(sqrt 2)")
{
    struct Row {
        long D;
        BigInt expected;
    };
    for (auto [D, expected] : {Row{13, 1684800}, Row{5, 320}, Row{2, 39200}}) {
        NumberField K(make_quadratic_field(D));
        auto units = fundamental_basis(K, D);
        auto sb = compute_B(K, units);
        REQUIRE(sb.a_s.size() == 2);
        auto eps = as_quad(K, units.units[0]);
        BigInt oracle = conjugate_product_oracle(D, eps);
        CHECK(oracle == expected);
        for (const auto& [s, a] : sb.a_s)
            CHECK(a == expected);
        CHECK(sb.B == expected);
        CHECK(sb.factorization.value() == expected);
    }
    NumberField K13(make_quadratic_field(13));
    auto sb = compute_B(K13, fundamental_basis(K13, 13));
    CHECK(sb.factorization.to_string() == "2^6*3^4*5^2*13");
}

TEST_CASE("A_s is nonzero for every real quadratic field up to 100")
{
    for (long D = 2; D <= 100; ++D) {
        if (!is_squarefree(D))
            continue;
        NumberField K(make_quadratic_field(D));
        auto units = fundamental_basis(K, D);
        for (const auto& s : enumerate_nonconstant_signatures(2)) {
            INFO("D = " << D << " s = " << s.to_string());
            BigInt a = compute_A_s(K, s, units);
            CHECK(a != 0);
            // conjugate-product oracle on the fundamental unit
            auto eps = as_quad(K, units.units[0]);
            CHECK(a == conjugate_product_oracle(D, eps));
        }
    }
}

TEST_CASE("non-fundamental unit bases give multiples")
{
    const auto& K = irred::test::q13();
    auto eps = irred::test::eps13();
    auto base = verify_unit_basis(K, {eps});
    auto cubed = verify_unit_basis(K, {K.pow(eps, 3)});
    for (const auto& s : enumerate_nonconstant_signatures(2)) {
        BigInt a1 = compute_A_s(K, s, base);
        BigInt a3 = compute_A_s(K, s, cubed);
        CHECK(a3 != 0);
        CHECK(a3 % a1 == 0);
        CHECK(a3 != a1);
    }
}

TEST_CASE("constant signatures are rejected")
{
    const auto& K = irred::test::q13();
    auto units = verify_unit_basis(K, {irred::test::eps13()});
    CHECK_THROWS_AS(compute_A_s(K, Signature({12, 12}), units), InvalidInput);
    CHECK_THROWS_AS(compute_A_s(K, Signature({0, 0}), units), InvalidInput);
}

TEST_CASE("conjugation permutes A_s")
{
    const NumberField C(irred::test::cyclotomic7_plus());
    auto units = verify_unit_basis(C, {C.theta(), C.add(C.theta(), C.one())});
    auto sb = compute_B(C, units);
    REQUIRE(sb.a_s.size() == 6);

    // tau_j o tau_k as an index into the automorphism list
    const std::size_t d = C.degree();
    auto compose = [&](std::size_t j, std::size_t k) {
        auto img = C.apply_automorphism(j, C.apply_automorphism(k, C.theta()));
        for (std::size_t i = 0; i < d; ++i)
            if (C.apply_automorphism(i, C.theta()) == img)
                return i;
        FAIL("composition not in the list");
        return d;
    };
    std::map<Signature, BigInt> table(sb.a_s.begin(), sb.a_s.end());
    for (std::size_t j = 0; j < d; ++j) {
        for (const auto& [s, a] : sb.a_s) {
            // N_s(tau_j(e)) = prod_k (tau_k tau_j e)^{s_k}: signature t with t_{k o j} = s_k
            std::vector<int> t(d);
            for (std::size_t k = 0; k < d; ++k)
                t[compose(k, j)] = s.exponents()[k];
            CHECK(table.at(Signature(t)) == a);
        }
    }
    for (const auto& [s, a] : sb.a_s) {
        CHECK(a != 0);
        CHECK(sb.B % a == 0);
    }

    // quadratic: the two signatures are swapped by conjugation
    const auto& K = irred::test::q13();
    auto q = compute_B(K, verify_unit_basis(K, {irred::test::eps13()}));
    CHECK(q.a_s[0].second == q.a_s[1].second);
}

TEST_CASE("twisted_norm is multiplicative")
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> c(-9, 9);
    const NumberField C(irred::test::cyclotomic7_plus());
    for (const NumberField* K : {&irred::test::q13(), &C}) {
        for (const auto& s : enumerate_nonconstant_signatures(K->degree())) {
            for (int i = 0; i < 20; ++i) {
                std::vector<BigInt> x, y;
                for (unsigned k = 0; k < K->degree(); ++k) {
                    x.emplace_back(c(rng));
                    y.emplace_back(c(rng));
                }
                auto a = K->element(x);
                auto b = K->element(y);
                CHECK(twisted_norm(*K, s, K->mul(a, b)) == K->mul(twisted_norm(*K, s, a), twisted_norm(*K, s, b)));
            }
        }
    }
}

TEST_CASE("compute_B requires degree at least two")
{
    FieldDescriptor q;
    q.min_poly = IntPoly{0, 1};
    q.integral_basis = {{1}};
    q.automorphisms = {{0}};
    CHECK_THROWS(compute_B(NumberField(q), UnitBasis{}));
}
