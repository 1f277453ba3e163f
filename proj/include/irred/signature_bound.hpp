#pragma once

#include "irred/exact_arith.hpp"
#include "irred/number_field.hpp"
#include "irred/units.hpp"

#include <string>
#include <vector>

namespace irred {

/// Isogeny signature: one exponent in {0, 12} per automorphism, in the
/// field's automorphism order.
class Signature {
public:
    explicit Signature(std::vector<int> exponents);

    const std::vector<int>& exponents() const { return s_; }
    std::size_t size() const { return s_.size(); }
    bool is_constant() const;
    /// "(12,0)"
    std::string to_string() const;

    friend bool operator==(const Signature&, const Signature&) = default;
    friend auto operator<=>(const Signature&, const Signature&) = default;

private:
    std::vector<int> s_;
};

/// The 2^d - 2 non-constant signatures; signature k (k = 1 .. 2^d - 2) has
/// s_i = 12 exactly when bit i of k is set.
std::vector<Signature> enumerate_nonconstant_signatures(unsigned d);

/// prod_k tau_k(a)^{s_k}
AlgebraicInteger twisted_norm(const NumberField& K, const Signature& s, const AlgebraicInteger& a);

/// Norm of the ideal gcd of (N_s(eps_i) - 1) O_K over the unit basis. Terms with
/// N_s(eps_i) = 1 are skipped; returns 0 if every term vanishes.
BigInt compute_A_s(const NumberField& K, const Signature& s, const UnitBasis& units);

struct SignatureBound {
    std::vector<std::pair<Signature, BigInt>> a_s; // enumeration order
    BigInt B;
    Factorization factorization;
};

/// lcm of A_s over all non-constant signatures. Throws DegeneracyError if some
/// A_s vanishes.
SignatureBound compute_B(const NumberField& K, const UnitBasis& units);

} // namespace irred
