#pragma once

#include "irred/exact_arith.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace irred {

/// Arithmetic in Z/pZ for a prime p < 2^63.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p);

    std::uint64_t characteristic() const { return p_; }
    std::uint64_t reduce(const BigInt& x) const;
    std::uint64_t reduce(std::int64_t x) const;
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;

private:
    std::uint64_t p_;
};

/// Polynomial over F_p, lowest degree first, no trailing zeros.
using FpPoly = std::vector<std::uint64_t>;

namespace fp_poly {

int degree(const FpPoly& a);
void trim(FpPoly& a);
FpPoly add(const PrimeField& F, const FpPoly& a, const FpPoly& b);
FpPoly sub(const PrimeField& F, const FpPoly& a, const FpPoly& b);
FpPoly mul(const PrimeField& F, const FpPoly& a, const FpPoly& b);
/// Quotient and remainder; b must be nonzero.
std::pair<FpPoly, FpPoly> divmod(const PrimeField& F, const FpPoly& a, const FpPoly& b);
FpPoly mod(const PrimeField& F, const FpPoly& a, const FpPoly& b);
FpPoly monic(const PrimeField& F, const FpPoly& a);
/// Monic gcd; gcd(0, 0) = 0.
FpPoly gcd(const PrimeField& F, FpPoly a, FpPoly b);
FpPoly powmod(const PrimeField& F, const FpPoly& base, const BigInt& exp, const FpPoly& modulus);
FpPoly derivative(const PrimeField& F, const FpPoly& a);
FpPoly from_int_poly(const PrimeField& F, const IntPoly& f);

/// Complete factorization of a nonzero polynomial into monic irreducibles with
/// multiplicities (squarefree decomposition, distinct-degree, then
/// Cantor-Zassenhaus equal-degree splitting). Sorted by (degree, coefficients).
std::vector<std::pair<FpPoly, unsigned>> factor(const PrimeField& F, const FpPoly& f);

bool is_irreducible(const PrimeField& F, const FpPoly& f);

} // namespace fp_poly

struct ResidueFieldElement {
    std::vector<std::uint64_t> coeffs; // exactly degree() entries

    friend bool operator==(const ResidueFieldElement&, const ResidueFieldElement&) = default;
};

/// F_{p^f} = F_p[t]/(g) for a monic irreducible g of degree f.
class ResidueField {
public:
    ResidueField(std::uint64_t p, FpPoly modulus);

    /// The field of size p^f defined by the lexicographically first monic
    /// irreducible polynomial of degree f.
    static ResidueField make(std::uint64_t p, unsigned f);

    std::uint64_t characteristic() const { return prime_.characteristic(); }
    unsigned degree() const { return degree_; }
    BigInt size() const;
    const FpPoly& modulus() const { return modulus_; }
    const PrimeField& prime_field() const { return prime_; }

    using Elem = ResidueFieldElement;

    Elem zero() const;
    Elem one() const;
    Elem from_int(std::int64_t x) const;
    Elem from_int(const BigInt& x) const;
    Elem from_poly(const FpPoly& a) const;
    /// The class of t.
    Elem generator() const;
    bool is_zero(const Elem& a) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem scale(const Elem& a, std::uint64_t c) const;
    Elem pow(const Elem& a, const BigInt& e) const;
    Elem inv(const Elem& a) const;

    /// +1, -1, or 0 (odd characteristic only).
    int quadratic_character(const Elem& a) const;
    /// Absolute trace to F_p.
    std::uint64_t trace(const Elem& a) const;

    /// Enumeration order: index i has base-p digits of i as coefficients.
    Elem element_at(std::uint64_t index) const;
    std::uint64_t index_of(const Elem& a) const;

    friend bool operator==(const ResidueField& a, const ResidueField& b)
    {
        return a.characteristic() == b.characteristic() && a.modulus_ == b.modulus_;
    }

private:
    PrimeField prime_;
    FpPoly modulus_;
    unsigned degree_;
    std::vector<std::uint64_t> basis_trace_;
};

} // namespace irred
