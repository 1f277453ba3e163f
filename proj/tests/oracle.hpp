#pragma once

// Brute-force reference implementations, deliberately naive and independent
// of the library's field arithmetic.

#include "irred/exact_arith.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace irred::test {

// F_p[t]/(m) with schoolbook arithmetic on signed coefficient vectors.
struct NaiveField {
    long p;
    std::vector<long> modulus; // monic, low degree first, size f + 1

    std::size_t f() const { return modulus.size() - 1; }

    std::vector<long> norm(std::vector<long> a) const
    {
        for (auto& c : a)
            c = ((c % p) + p) % p;
        return a;
    }
    std::vector<long> add(const std::vector<long>& a, const std::vector<long>& b) const
    {
        std::vector<long> r(f());
        for (std::size_t i = 0; i < f(); ++i)
            r[i] = a[i] + b[i];
        return norm(r);
    }
    std::vector<long> mul(const std::vector<long>& a, const std::vector<long>& b) const
    {
        std::vector<long> prod(2 * f(), 0);
        for (std::size_t i = 0; i < f(); ++i)
            for (std::size_t j = 0; j < f(); ++j)
                prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
        for (std::size_t k = prod.size(); k-- > f();) {
            long c = prod[k];
            for (std::size_t i = 0; i <= f(); ++i)
                prod[k - f() + i] = (prod[k - f() + i] - c * modulus[i]) % p;
        }
        prod.resize(f());
        return norm(prod);
    }
    std::vector<std::vector<long>> elements() const
    {
        std::vector<std::vector<long>> out{std::vector<long>(f(), 0)};
        for (std::size_t k = 0; k < f(); ++k) {
            std::vector<std::vector<long>> next;
            for (const auto& e : out)
                for (long c = 0; c < p; ++c) {
                    auto x = e;
                    x[k] = c;
                    next.push_back(x);
                }
            out = std::move(next);
        }
        return out;
    }

    // Projective points of y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
    long count(const std::array<std::vector<long>, 5>& a) const
    {
        auto els = elements();
        long n = 1;
        for (const auto& x : els) {
            auto rhs = add(mul(add(mul(add(x, a[1]), x), a[3]), x), a[4]);
            auto h = add(mul(a[0], x), a[2]);
            for (const auto& y : els) {
                auto lhs = mul(add(y, h), y);
                if (lhs == rhs)
                    ++n;
            }
        }
        return n;
    }
};

// Res(X^2 - t X + n, X^m - 1) as a Sylvester determinant.
inline BigInt sylvester_oracle(const BigInt& t, const BigInt& n, unsigned long m)
{
    IntPoly P(std::vector<BigInt>{n, -t, 1});
    std::vector<BigInt> c(m + 1, 0);
    c[0] = -1;
    c[m] = 1;
    return resultant_sylvester(P, IntPoly(c));
}

} // namespace irred::test
