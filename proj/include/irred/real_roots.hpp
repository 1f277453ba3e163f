#pragma once

#include "irred/detail/qpoly.hpp"
#include "irred/exact_arith.hpp"

#include <vector>

namespace irred {

/// (lo, hi] contains exactly one real root; lo == hi means the root is exact.
struct RootInterval {
    Rational lo;
    Rational hi;
};

std::vector<qpoly::QPoly> sturm_sequence(const qpoly::QPoly& f);

/// Number of distinct real roots, by the Sturm sign-variation count at +-inf.
int count_real_roots(const IntPoly& f);

/// Isolating intervals for the real roots of a squarefree f, ascending.
std::vector<RootInterval> isolate_real_roots(const IntPoly& f);

/// Bisects until hi - lo <= 2^-bits.
RootInterval refine_root(const IntPoly& f, RootInterval iv, unsigned bits);

} // namespace irred
