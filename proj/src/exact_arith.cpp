#include "irred/exact_arith.hpp"
#include "irred/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace irred {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs)
{
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::binomial(unsigned n, const BigInt& c)
{
    std::vector<BigInt> v(n + 1, 0);
    v[0] = -c;
    v[n] += 1;
    return IntPoly(std::move(v));
}

void IntPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

BigInt IntPoly::coeff(int i) const
{
    if (i < 0 || i > degree())
        return 0;
    return coeffs_[i];
}

BigInt IntPoly::eval(const BigInt& x) const
{
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::derivative() const
{
    std::vector<BigInt> v;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        v.push_back(coeffs_[i] * static_cast<unsigned long>(i));
    return IntPoly(std::move(v));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b)
{
    std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b)
{
    std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(v));
}

std::string IntPoly::to_string(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = coeffs_[i];
        if (c == 0)
            continue;
        BigInt mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (mag != 1 || i == 0)
            os << mag.get_str();
        if (i > 0) {
            os << var;
            if (i > 1)
                os << '^' << i;
        }
    }
    return os.str();
}

BigInt determinant(std::vector<std::vector<BigInt>> m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0)
                ++piv;
            if (piv == n)
                return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

BigInt resultant_sylvester(const IntPoly& f, const IntPoly& g)
{
    if (f.is_zero() && g.is_zero())
        throw InvalidInput("resultant: both polynomials are zero");
    if (f.is_zero() || g.is_zero())
        return (f.degree() == 0 || g.degree() == 0) ? BigInt(1) : BigInt(0);
    const int m = f.degree();
    const int n = g.degree();
    if (m == 0)
        return pow_ui(f.leading(), n);
    if (n == 0)
        return pow_ui(g.leading(), m);
    const int size = m + n;
    std::vector<std::vector<BigInt>> s(size, std::vector<BigInt>(size, 0));
    // Row i of the f block holds the coefficients of X^(n-1-i) f, highest first.
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k)
            s[i][i + k] = f.coeff(m - k);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k)
            s[n + i][i + k] = g.coeff(n - k);
    return determinant(std::move(s));
}

BigInt lucas_power_sum(const BigInt& a, const BigInt& n, std::uint64_t k)
{
    if (k == 0)
        return 2;
    BigInt prev = 2, cur = a;
    for (std::uint64_t i = 1; i < k; ++i) {
        BigInt next = a * cur - n * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

BigInt resultant_quadratic_cyclotomic(const BigInt& a, const BigInt& n, std::uint64_t m)
{
    if (m == 0)
        throw InvalidInput("resultant_quadratic_cyclotomic: m must be positive");
    BigInt nm;
    mpz_pow_ui(nm.get_mpz_t(), n.get_mpz_t(), m);
    return nm - lucas_power_sum(a, n, m) + 1;
}

BigInt pow_ui(const BigInt& base, unsigned long exp)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

// ---------------------------------------------------------------------------
// Primality and factorization

namespace {

const std::vector<unsigned long>& small_primes()
{
    static const std::vector<unsigned long> primes = [] {
        constexpr unsigned long limit = 1'000'000;
        std::vector<bool> composite(limit + 1, false);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i <= limit; ++i) {
            if (composite[i])
                continue;
            out.push_back(i);
            for (unsigned long j = i * i; j <= limit; j += i)
                composite[j] = true;
        }
        return out;
    }();
    return primes;
}

const BigInt& deterministic_limit()
{
    static const BigInt limit("330000000000000");
    return limit;
}

bool miller_rabin_round(const BigInt& n, const BigInt& nm1, const BigInt& d, unsigned s,
                        const BigInt& base)
{
    BigInt x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1)
        return true;
    for (unsigned r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == nm1)
            return true;
        if (x == 1)
            return false;
    }
    return false;
}

} // namespace

bool is_probable_prime(const BigInt& n)
{
    if (n < 2)
        return false;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
        if (n == p)
            return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p))
            return false;
    }
    BigInt nm1 = n - 1;
    BigInt d = nm1;
    unsigned s = static_cast<unsigned>(mpz_scan1(d.get_mpz_t(), 0));
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    if (n < deterministic_limit()) {
        // Bases 2..17 are exact below 341550071728321.
        for (unsigned long b : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul})
            if (!miller_rabin_round(n, nm1, d, s, BigInt(b)))
                return false;
        return true;
    }

    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0x5eed);
    BigInt span = n - 3;
    for (int round = 0; round < 64; ++round) {
        BigInt base = rng.get_z_range(span) + 2;
        if (!miller_rabin_round(n, nm1, d, s, base))
            return false;
    }
    return true;
}

bool is_certified_prime(const BigInt& n)
{
    return n < deterministic_limit() && is_probable_prime(n);
}

namespace {

// Brent's variant of Pollard rho; returns a nontrivial factor or 0.
BigInt brent_rho(const BigInt& n, unsigned long c)
{
    BigInt y = 2, x, ys, q = 1, g = 1;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto step = [&](const BigInt& v) {
        BigInt t = v * v + c;
        mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
        return t;
    };
    do {
        x = y;
        for (unsigned long i = 0; i < r; ++i)
            y = step(y);
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                y = step(y);
                q = q * abs(x - y) % n;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += m;
        }
        r *= 2;
        if (r > (1ul << 40))
            return 0;
    } while (g == 1);

    if (g == n) {
        do {
            ys = step(ys);
            BigInt diff = abs(x - ys);
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g == n ? BigInt(0) : g;
}

void factor_into(const BigInt& n, Factorization& out)
{
    if (n == 1)
        return;
    if (is_probable_prime(n)) {
        out.primes[n] += 1;
        if (!is_certified_prime(n))
            out.probable.insert(n);
        return;
    }
    for (unsigned long c = 1;; ++c) {
        BigInt d = brent_rho(n, c);
        if (d != 0) {
            factor_into(d, out);
            factor_into(BigInt(n / d), out);
            return;
        }
    }
}

} // namespace

Factorization factorize(const BigInt& n)
{
    if (n == 0)
        throw InvalidInput("factorize: zero has no factorization");
    Factorization out;
    out.sign = sgn(n) < 0 ? -1 : 1;
    BigInt rest = abs(n);
    for (unsigned long p : small_primes()) {
        if (rest == 1)
            break;
        if (BigInt(p) * p > rest) {
            break;
        }
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            out.primes[BigInt(p)] += 1;
        }
    }
    factor_into(rest, out);
    return out;
}

BigInt Factorization::value() const
{
    BigInt v = sign;
    for (const auto& [p, e] : primes)
        v *= pow_ui(p, e);
    return v;
}

std::string Factorization::to_string() const
{
    if (primes.empty())
        return "1";
    std::string s;
    for (const auto& [p, e] : primes) {
        if (!s.empty())
            s += '*';
        s += p.get_str();
        if (e > 1)
            s += '^' + std::to_string(e);
    }
    return s;
}

BigInt gcd_lcm_set(std::span<const BigInt> values, Reduce mode)
{
    if (values.empty())
        throw InvalidInput("gcd_lcm_set: empty list");
    BigInt acc = abs(values[0]);
    if (mode == Reduce::lcm && acc == 0)
        throw InvalidInput("gcd_lcm_set: lcm of a list containing zero");
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (mode == Reduce::gcd) {
            mpz_gcd(acc.get_mpz_t(), acc.get_mpz_t(), values[i].get_mpz_t());
        } else {
            if (values[i] == 0)
                throw InvalidInput("gcd_lcm_set: lcm of a list containing zero");
            mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), values[i].get_mpz_t());
        }
    }
    return acc;
}

} // namespace irred
