#pragma once

#include "irred/curves.hpp"
#include "irred/exact_arith.hpp"
#include "irred/number_field.hpp"
#include "irred/primes.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace irred {

/// coeff * a^i * b^j
struct FamilyMonomial {
    unsigned i = 0;
    unsigned j = 0;
    AlgebraicInteger coeff;
};

using FamilyCoefficient = std::vector<FamilyMonomial>;

enum class SkipRule {
    both_zero,     // (a, b) = (0, 0) mod ell
    shared_factor, // ell divides a or b
};

std::string to_string(SkipRule rule);

/// Curves E_(a,b) whose Weierstrass coefficients are polynomials in (a, b)
/// over O_K, in the order a1, a2, a3, a4, a6.
struct CurveFamily {
    std::array<FamilyCoefficient, 5> coeffs;
    SkipRule skip = SkipRule::both_zero;
    std::vector<BigInt> additive_residue_chars;
};

bool is_skipped(SkipRule rule, std::uint64_t a, std::uint64_t b);

/// Evaluates the family at (a, b) inside the residue field of q. Throws
/// BadReduction when the specialization is singular there.
ReducedCurve specialize(const CurveFamily& family, const PrimeIdeal& q, std::uint64_t a, std::uint64_t b);

struct PairValue {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::vector<BigInt> traces; // a_q for each prime above ell, in split_prime order
    BigInt value;               // R_ell^{a,b}
};

struct SkippedPair {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::string reason;
    bool by_rule = false; // true: excluded by the skip rule; false: bad model reduction
};

struct SweepResult {
    std::uint64_t ell = 0;
    unsigned long r = 1;
    std::vector<std::string> primes; // labels of the primes above ell
    std::vector<PairValue> pairs;    // lexicographic in (a, b)
    std::vector<SkippedPair> skipped;
    BigInt R;
    Factorization factorization;

    /// Some pair was dropped for bad model reduction (not by the skip rule).
    bool partial() const;
};

/// For every residue pair (a, b) mod ell not excluded by the skip rule:
/// R^{a,b} = gcd over q | ell of Res(P_q^{(a,b)}, X^{12r} - 1); then
/// R_ell = lcm over pairs. Pairs are evaluated on `jobs` threads; the result is
/// independent of the thread count.
SweepResult sweep_prime(const NumberField& K, const CurveFamily& family, std::uint64_t ell, unsigned long r,
                        unsigned jobs = 1, std::uint64_t cap = default_count_cap);

} // namespace irred
