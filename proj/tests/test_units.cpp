#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fields.hpp"
#include "irred/errors.hpp"
#include "irred/units.hpp"

#include <optional>

using namespace irred;

namespace {

bool is_square(long v, long& root)
{
    if (v < 0)
        return false;
    mpz_class z(v), s;
    mpz_sqrt(s.get_mpz_t(), z.get_mpz_t());
    root = s.get_si();
    return s * s == z;
}

// Smallest unit (x + y sqrt D)/2 or x + y sqrt D with y <= ymax, as power-basis
// rationals.
std::optional<std::pair<Rational, Rational>> pell_brute_force(long D, long ymax)
{
    const long k = (D % 4 == 1) ? 4 : 1;
    for (long y = 1; y <= ymax; ++y) {
        for (long sign : {-1L, 1L}) {
            long x;
            if (is_square(D * y * y + sign * k, x)) {
                if (k == 4) {
                    Rational rx(x, 2), ry(y, 2);
                    rx.canonicalize();
                    ry.canonicalize();
                    return std::pair{rx, ry};
                }
                return std::pair{Rational(x), Rational(y)};
            }
        }
    }
    return std::nullopt;
}

} // namespace

TEST_CASE("fundamental_unit_quadratic on known fields")
{
    CHECK(fundamental_unit_quadratic(13) == AlgebraicInteger{{1, 1}});
    CHECK(fundamental_unit_quadratic(2) == AlgebraicInteger{{1, 1}});
    CHECK(fundamental_unit_quadratic(5) == AlgebraicInteger{{0, 1}});
    CHECK(fundamental_unit_quadratic(3) == AlgebraicInteger{{2, 1}});

    NumberField K(make_quadratic_field(94));
    CHECK(K.to_power_basis(fundamental_unit_quadratic(94)) == std::vector<Rational>{2143295, 221064});
    CHECK_THROWS_AS(fundamental_unit_quadratic(4), InvalidInput);
}

TEST_CASE("fundamental units match a brute-force Pell search")
{
    int compared = 0;
    for (long D = 2; D <= 200; ++D) {
        if (!is_squarefree(D))
            continue;
        NumberField K(make_quadratic_field(D));
        auto eps = fundamental_unit_quadratic(D);

        // Pell check over the basis (1, omega)
        const Rational tr = K.trace(K.basis_element(1));
        const Rational nm = K.norm(K.basis_element(1));
        const BigInt& x = eps.coords[0];
        const BigInt& y = eps.coords[1];
        CHECK(abs(Rational(x * x) + Rational(x * y) * tr + Rational(y * y) * nm) == 1);

        auto oracle = pell_brute_force(D, 10000);
        if (!oracle)
            continue;
        ++compared;
        auto pb = K.to_power_basis(eps);
        INFO("D = " << D);
        CHECK(pb[0] == oracle->first);
        CHECK(pb[1] == oracle->second);
    }
    CHECK(compared > 100);
}

TEST_CASE("verify_unit_basis")
{
    const auto& K = irred::test::q13();
    auto eps = irred::test::eps13();
    auto ub = verify_unit_basis(K, {eps}, UnitProvenance::computed);
    CHECK(ub.provenance == UnitProvenance::computed);
    CHECK_FALSE(ub.log_determinant.empty());

    CHECK_NOTHROW(verify_unit_basis(K, {K.mul(eps, eps)}));
    CHECK_NOTHROW(verify_unit_basis(K, {K.neg(eps)}));
    CHECK_THROWS_AS(verify_unit_basis(K, {K.one()}), VerificationError);
    CHECK_THROWS_AS(verify_unit_basis(K, {K.neg(K.one())}), VerificationError);
    CHECK_THROWS_AS(verify_unit_basis(K, {K.from_int(2)}), VerificationError);
    CHECK_THROWS_AS(verify_unit_basis(K, {}), InvalidInput);
    CHECK_THROWS_AS(verify_unit_basis(K, {eps, eps}), InvalidInput);
}

TEST_CASE("verify_unit_basis on a cubic field")
{
    const NumberField C(irred::test::cyclotomic7_plus());
    auto t = C.theta();
    auto t1 = C.add(t, C.one());
    CHECK(abs(C.norm(t)) == 1);
    CHECK(abs(C.norm(t1)) == 1);
    CHECK_NOTHROW(verify_unit_basis(C, {t, t1}));
    CHECK_THROWS_AS(verify_unit_basis(C, {t, C.mul(t, t)}), VerificationError);
    auto u = C.mul(t, t1);
    CHECK_THROWS_AS(verify_unit_basis(C, {u, C.pow(u, 3)}), VerificationError);
}

TEST_CASE("unit provenance strings")
{
    CHECK(to_string(UnitProvenance::computed) == "computed");
    CHECK(to_string(UnitProvenance::user_supplied) == "user-supplied");
}
