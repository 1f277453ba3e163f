#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace irred {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial over Z, coefficients lowest degree first.
/// The coefficient vector never carries trailing zeros, so the zero polynomial
/// is the empty vector and degree() == -1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    /// X^n - c
    static IntPoly binomial(unsigned n, const BigInt& c);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    BigInt coeff(int i) const;
    const BigInt& leading() const { return coeffs_.back(); }

    BigInt eval(const BigInt& x) const;
    IntPoly derivative() const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

    std::string to_string(const std::string& var = "X") const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
BigInt determinant(std::vector<std::vector<BigInt>> m);

/// Determinant of the Sylvester matrix with the deg(g) rows of f first, so
/// Res(f, g) = lc(f)^deg(g) * prod g(alpha) over the roots alpha of f.
BigInt resultant_sylvester(const IntPoly& f, const IntPoly& g);

/// s_0 = 2, s_1 = a, s_k = a s_{k-1} - n s_{k-2}: the power sums of the roots
/// of X^2 - aX + n.
BigInt lucas_power_sum(const BigInt& a, const BigInt& n, std::uint64_t k);

/// Res(X^2 - aX + n, X^m - 1) = n^m - s_m + 1.
BigInt resultant_quadratic_cyclotomic(const BigInt& a, const BigInt& n, std::uint64_t m);

struct Factorization {
    int sign = 1;
    std::map<BigInt, unsigned> primes;
    // Primes above the deterministic Miller-Rabin range; certified only as
    // probable primes (64 random bases).
    std::set<BigInt> probable;

    BigInt value() const;
    bool all_certified() const { return probable.empty(); }
    /// "2^6*3^4*5^2*13"; "1" for the empty product. The sign is not rendered.
    std::string to_string() const;
};

/// Deterministic for n < 3.3e14, 64-round Miller-Rabin above.
bool is_probable_prime(const BigInt& n);
bool is_certified_prime(const BigInt& n);

/// Trial division to 10^6, then Pollard rho with Brent cycle detection.
Factorization factorize(const BigInt& n);

enum class Reduce { gcd, lcm };

/// Nonnegative gcd or lcm of a nonempty list; gcd(0, 0) = 0.
BigInt gcd_lcm_set(std::span<const BigInt> values, Reduce mode);

BigInt pow_ui(const BigInt& base, unsigned long exp);

} // namespace irred
