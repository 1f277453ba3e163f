#include "irred/detail/qpoly.hpp"
#include "irred/errors.hpp"

#include <algorithm>

namespace irred::qpoly {

void trim(QPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

int degree(const QPoly& a) { return static_cast<int>(a.size()) - 1; }

QPoly from_int(const IntPoly& f)
{
    QPoly r;
    for (const auto& c : f.coeffs())
        r.emplace_back(c);
    return r;
}

QPoly add(const QPoly& a, const QPoly& b)
{
    QPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

QPoly sub(const QPoly& a, const QPoly& b)
{
    QPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

QPoly mul(const QPoly& a, const QPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    QPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

QPoly scale(const QPoly& a, const Rational& c)
{
    QPoly r = a;
    for (auto& x : r)
        x *= c;
    trim(r);
    return r;
}

QPoly rem(const QPoly& a, const QPoly& b)
{
    if (b.empty())
        throw InvalidInput("qpoly::rem: division by zero polynomial");
    QPoly r = a;
    trim(r);
    const int db = degree(b);
    for (int i = degree(r); i >= db; --i) {
        if (r[i] == 0)
            continue;
        Rational c = r[i] / b.back();
        for (int j = 0; j <= db; ++j)
            r[i - db + j] -= c * b[j];
    }
    r.resize(std::min<std::size_t>(r.size(), static_cast<std::size_t>(db)));
    trim(r);
    return r;
}

QPoly derivative(const QPoly& a)
{
    QPoly r;
    for (std::size_t i = 1; i < a.size(); ++i)
        r.push_back(a[i] * static_cast<unsigned long>(i));
    trim(r);
    return r;
}

Rational eval(const QPoly& a, const Rational& x)
{
    Rational acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

QPoly compose_mod(const QPoly& a, const QPoly& b, const QPoly& m)
{
    QPoly acc;
    for (auto it = a.rbegin(); it != a.rend(); ++it)
        acc = rem(add(mul(acc, b), QPoly{*it}), m);
    return acc;
}

int sign_at(const QPoly& a, const Rational& x) { return sgn(eval(a, x)); }

} // namespace irred::qpoly
