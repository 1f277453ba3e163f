#pragma once

#include "irred/number_field.hpp"

#include <vector>

namespace irred {

/// Column Hermite normal form of an integer matrix of full row rank:
/// upper triangular, positive diagonal, entries right of the diagonal reduced
/// into [0, h_ii). Columns of the input are generators of the lattice.
IntMatrix hnf_columns(const IntMatrix& generators);

/// Nonzero integral ideal of O_K. The columns of the d x d matrix are a Z-basis
/// over the integral basis.
class IdealHNF {
public:
    /// Validates the HNF shape and closure under multiplication by every omega_i.
    IdealHNF(const NumberField& K, IntMatrix hnf);

    const IntMatrix& matrix() const { return hnf_; }
    BigInt norm() const;
    bool contains(const AlgebraicInteger& a) const;
    bool is_unit_ideal() const { return norm() == 1; }

    friend bool operator==(const IdealHNF&, const IdealHNF&) = default;

private:
    IntMatrix hnf_;
};

IdealHNF unit_ideal(const NumberField& K);
IdealHNF ideal_from_element(const NumberField& K, const AlgebraicInteger& a);
/// Ideal generated by the given elements (zero elements are ignored; at least
/// one must be nonzero).
IdealHNF ideal_from_generators(const NumberField& K, const std::vector<AlgebraicInteger>& gens);
/// I + J
IdealHNF ideal_gcd(const NumberField& K, const IdealHNF& I, const IdealHNF& J);
inline BigInt ideal_norm(const IdealHNF& I) { return I.norm(); }

} // namespace irred
