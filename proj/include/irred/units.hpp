#pragma once

#include "irred/number_field.hpp"

#include <string>
#include <vector>

namespace irred {

enum class UnitProvenance { computed, user_supplied };

std::string to_string(UnitProvenance p);

struct UnitBasis {
    std::vector<AlgebraicInteger> units;
    UnitProvenance provenance = UnitProvenance::computed;
    // Certified enclosure of the regulator-type determinant.
    std::string log_determinant;
};

/// Fundamental unit > 1 of Q(sqrt D) over the basis of make_quadratic_field(D),
/// read off the first continued-fraction convergent of norm +-1.
AlgebraicInteger fundamental_unit_quadratic(const BigInt& D);

/// Accepts iff every element has norm +-1 and the log-embedding determinant is
/// certified nonzero by interval arithmetic at >= 128 bits. Fundamentality is
/// not checked.
UnitBasis verify_unit_basis(const NumberField& K, const std::vector<AlgebraicInteger>& units,
                            UnitProvenance provenance = UnitProvenance::user_supplied);

} // namespace irred
