#pragma once

#include "irred/curves.hpp"
#include "irred/exact_arith.hpp"
#include "irred/number_field.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace irred {

struct CriterionResult {
    FrobeniusData frobenius;
    unsigned long r = 1;
    BigInt resultant;                       // Res(P_q, X^{12r} - 1), signed
    std::optional<Factorization> factorization; // of |resultant| when nonzero
};

/// Res(P_q, X^{12r} - 1) through the Lucas power sums. Factoring can be
/// switched off for large r, where it may be infeasible.
CriterionResult resultant_criterion(const FrobeniusData& F, unsigned long r, bool factor = true);

struct GeneralCriterion {
    AlgebraicInteger value; // Res(P_q, X^{12r} - gamma) in O_K
    BigInt norm;            // its field norm
};

/// Norm(q)^{12r} - gamma * s_{12r} + gamma^2, with gamma = N_s(alpha) for a
/// generator alpha of q^r.
GeneralCriterion general_resultant_criterion(const NumberField& K, const FrobeniusData& F, unsigned long r,
                                             const AlgebraicInteger& gamma);

/// (1 + 3^{6dh})^2
BigInt merel_bound(unsigned long d, unsigned long h);

enum class BadPrimeReason {
    small_prime,           // p < 17 and p != 11
    ramified,              // p ramifies in K
    divides_B,
    survives_resultants,   // divides R_ell (or equals ell) for every auxiliary ell
    additive_residue_char, // residue characteristic of a declared additive prime
    auxiliary_prime,
};

std::string to_string(BadPrimeReason r);

/// Divisibility evidence from one auxiliary rational prime: the gcd of the
/// resultants at the primes above ell (fixed curve) or R_ell (family sweep).
struct AuxiliaryEvidence {
    std::uint64_t ell = 0;
    BigInt value;
};

/// gcd of |resultant| over the criteria; throws ConfigError if the list is empty.
AuxiliaryEvidence evidence_from_criteria(std::uint64_t ell, const std::vector<CriterionResult>& criteria);

struct BadPrimeSet {
    std::map<BigInt, std::set<BadPrimeReason>> primes;

    std::vector<BigInt> sorted() const;
    /// Members that are not already excluded by the p >= 17 or p = 11 rule.
    std::vector<BigInt> beyond_baseline() const;
    bool contains(const BigInt& p) const { return primes.count(p) != 0; }
};

/// Baseline {p < 17, p != 11} together with ramified primes, divisors of B,
/// residue characteristics of additive primes, and the primes that survive
/// every auxiliary prime (intersection over ell of {p | R_ell} + {ell}).
/// Evidence with R_ell = 0 carries no information and is ignored; if all of it
/// is zero a DegeneracyError is raised.
BadPrimeSet assemble_bad_primes(const std::vector<BigInt>& ramified, const BigInt& B,
                                const std::vector<AuxiliaryEvidence>& evidence,
                                const std::vector<BigInt>& additive_residue_chars);

} // namespace irred
