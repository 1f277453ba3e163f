#pragma once

#include "irred/exact_arith.hpp"
#include "irred/finite_field.hpp"
#include "irred/number_field.hpp"
#include "irred/primes.hpp"

#include <array>
#include <string>

namespace irred {

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over O_K.
class WeierstrassCurve {
public:
    /// Throws InvalidInput for a singular model (discriminant zero).
    WeierstrassCurve(const NumberField& K, std::array<AlgebraicInteger, 5> a);

    const std::array<AlgebraicInteger, 5>& a_invariants() const { return a_; }
    const AlgebraicInteger& a1() const { return a_[0]; }
    const AlgebraicInteger& a2() const { return a_[1]; }
    const AlgebraicInteger& a3() const { return a_[2]; }
    const AlgebraicInteger& a4() const { return a_[3]; }
    const AlgebraicInteger& a6() const { return a_[4]; }
    const AlgebraicInteger& b2() const { return b2_; }
    const AlgebraicInteger& b4() const { return b4_; }
    const AlgebraicInteger& b6() const { return b6_; }
    const AlgebraicInteger& b8() const { return b8_; }
    const AlgebraicInteger& c4() const { return c4_; }
    const AlgebraicInteger& c6() const { return c6_; }
    const AlgebraicInteger& discriminant() const { return disc_; }

private:
    std::array<AlgebraicInteger, 5> a_;
    AlgebraicInteger b2_, b4_, b6_, b8_, c4_, c6_, disc_;
};

/// Weierstrass model over a residue field with nonzero discriminant.
struct ReducedCurve {
    ResidueField field;
    std::array<ResidueFieldElement, 5> a; // a1, a2, a3, a4, a6
    ResidueFieldElement discriminant;
};

/// Discriminant of a Weierstrass model over a finite field.
ResidueFieldElement weierstrass_discriminant(const ResidueField& F, const std::array<ResidueFieldElement, 5>& a);

/// Throws BadReduction if the discriminant vanishes.
ReducedCurve make_reduced_curve(ResidueField F, std::array<ResidueFieldElement, 5> a);

/// Coefficient-wise reduction; throws BadReduction naming q if the reduced
/// discriminant is zero. No minimal model is computed.
ReducedCurve reduce_curve(const WeierstrassCurve& E, const PrimeIdeal& q);

constexpr std::uint64_t default_count_cap = 1'000'000;

/// Number of projective points, including the point at infinity. Throws
/// SizeCapExceeded when the field has more than `cap` elements.
BigInt count_points(const ReducedCurve& C, std::uint64_t cap = default_count_cap);

struct FrobeniusData {
    std::string prime;   // label of q
    std::uint64_t ell = 0;
    BigInt norm;         // Norm(q)
    BigInt trace;        // a_q
    IntPoly charpoly;    // X^2 - a_q X + Norm(q)
};

/// a_q = Norm(q) + 1 - #C; Hasse bound enforced.
FrobeniusData frobenius_from_count(const std::string& label, std::uint64_t ell, const BigInt& norm,
                                   const BigInt& count);

namespace detail {
/// Element-by-element count without lookup tables; used above the table size
/// limit and as a cross-check.
BigInt count_points_direct(const ReducedCurve& C);
} // namespace detail

FrobeniusData frobenius_data(const WeierstrassCurve& E, const PrimeIdeal& q,
                             std::uint64_t cap = default_count_cap);

} // namespace irred
