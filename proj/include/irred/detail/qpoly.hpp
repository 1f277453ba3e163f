#pragma once

// Dense polynomials over Q, lowest degree first. Used for power-basis
// arithmetic modulo the minimal polynomial and for Sturm sequences.

#include "irred/exact_arith.hpp"

#include <vector>

namespace irred::qpoly {

using QPoly = std::vector<Rational>;

void trim(QPoly& a);
int degree(const QPoly& a);
QPoly from_int(const IntPoly& f);
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const Rational& c);
QPoly rem(const QPoly& a, const QPoly& b);
QPoly derivative(const QPoly& a);
Rational eval(const QPoly& a, const Rational& x);
/// a(b) mod m
QPoly compose_mod(const QPoly& a, const QPoly& b, const QPoly& m);
int sign_at(const QPoly& a, const Rational& x);

} // namespace irred::qpoly
