#pragma once

#include "irred/finite_field.hpp"
#include "irred/ideal.hpp"
#include "irred/number_field.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace irred {

/// Prime of O_K above a rational prime ell, described Kummer-Dedekind style as
/// (ell, g(theta)) for a monic irreducible factor g of the minimal polynomial.
struct PrimeIdeal {
    std::uint64_t ell = 0;
    FpPoly local_generator; // g mod ell
    unsigned residue_degree = 0;
    unsigned ramification = 0;
    IdealHNF ideal;
    ResidueField residue_field;
    // Image of omega_i in the residue field.
    std::vector<ResidueFieldElement> basis_images;

    BigInt norm() const { return pow_ui(BigInt(static_cast<unsigned long>(ell)), residue_degree); }
    /// e.g. "(3, t + 2)"
    std::string label() const;
};

/// All primes above ell, sorted by local generator. Throws UnsupportedPrime if
/// ell divides [O_K : Z[theta]].
std::vector<PrimeIdeal> split_prime(const NumberField& K, std::uint64_t ell);

/// The reduction O_K -> O_K / q.
ResidueFieldElement residue_map(const AlgebraicInteger& a, const PrimeIdeal& q);

/// Rational primes dividing the field discriminant.
std::vector<BigInt> ramified_primes(const NumberField& K);

} // namespace irred
