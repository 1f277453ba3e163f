#include "irred/finite_field.hpp"
#include "irred/errors.hpp"

#include <algorithm>
#include <random>

namespace irred {

PrimeField::PrimeField(std::uint64_t p) : p_(p)
{
    if (p < 2 || p >= (std::uint64_t{1} << 63))
        throw InvalidInput("PrimeField: characteristic out of range");
}

std::uint64_t PrimeField::reduce(const BigInt& x) const
{
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), p_);
    return r.get_ui();
}

std::uint64_t PrimeField::reduce(std::int64_t x) const
{
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    return r < 0 ? static_cast<std::uint64_t>(r + static_cast<std::int64_t>(p_))
                 : static_cast<std::uint64_t>(r);
}

std::uint64_t PrimeField::add(std::uint64_t a, std::uint64_t b) const
{
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
}

std::uint64_t PrimeField::sub(std::uint64_t a, std::uint64_t b) const
{
    return a >= b ? a - b : a + (p_ - b);
}

std::uint64_t PrimeField::mul(std::uint64_t a, std::uint64_t b) const
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const
{
    std::uint64_t r = 1 % p_;
    while (e) {
        if (e & 1)
            r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const
{
    if (a % p_ == 0)
        throw InvalidInput("PrimeField: inverse of zero");
    return pow(a, p_ - 2);
}

namespace fp_poly {

int degree(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

void trim(FpPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

FpPoly add(const PrimeField& F, const FpPoly& a, const FpPoly& b)
{
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
}

FpPoly sub(const PrimeField& F, const FpPoly& a, const FpPoly& b)
{
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
}

FpPoly mul(const PrimeField& F, const FpPoly& a, const FpPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    trim(r);
    return r;
}

std::pair<FpPoly, FpPoly> divmod(const PrimeField& F, const FpPoly& a, const FpPoly& b)
{
    if (b.empty())
        throw InvalidInput("fp_poly::divmod: division by zero polynomial");
    FpPoly r = a;
    trim(r);
    const int db = degree(b);
    if (degree(r) < db)
        return {{}, r};
    FpPoly q(r.size() - b.size() + 1, 0);
    const std::uint64_t lead_inv = F.inv(b.back());
    for (int i = degree(r); i >= db; --i) {
        std::uint64_t c = F.mul(r[i], lead_inv);
        if (c == 0)
            continue;
        q[i - db] = c;
        for (int j = 0; j <= db; ++j)
            r[i - db + j] = F.sub(r[i - db + j], F.mul(c, b[j]));
    }
    trim(q);
    trim(r);
    return {q, r};
}

FpPoly mod(const PrimeField& F, const FpPoly& a, const FpPoly& b) { return divmod(F, a, b).second; }

FpPoly monic(const PrimeField& F, const FpPoly& a)
{
    if (a.empty())
        return a;
    std::uint64_t inv = F.inv(a.back());
    FpPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = F.mul(a[i], inv);
    return r;
}

FpPoly gcd(const PrimeField& F, FpPoly a, FpPoly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        FpPoly r = mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(F, a);
}

FpPoly powmod(const PrimeField& F, const FpPoly& base, const BigInt& exp, const FpPoly& modulus)
{
    FpPoly result = mod(F, FpPoly{1}, modulus);
    FpPoly b = mod(F, base, modulus);
    const auto bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = mod(F, mul(F, result, result), modulus);
        if (mpz_tstbit(exp.get_mpz_t(), i))
            result = mod(F, mul(F, result, b), modulus);
    }
    return result;
}

FpPoly derivative(const PrimeField& F, const FpPoly& a)
{
    FpPoly r;
    for (std::size_t i = 1; i < a.size(); ++i)
        r.push_back(F.mul(a[i], F.reduce(static_cast<std::int64_t>(i))));
    trim(r);
    return r;
}

FpPoly from_int_poly(const PrimeField& F, const IntPoly& f)
{
    FpPoly r;
    for (const auto& c : f.coeffs())
        r.push_back(F.reduce(c));
    trim(r);
    return r;
}

namespace {

bool poly_less(const FpPoly& a, const FpPoly& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

// p-th root of a polynomial whose exponents are all multiples of p.
FpPoly pth_root(const FpPoly& a, std::uint64_t p)
{
    FpPoly r;
    for (std::size_t i = 0; i < a.size(); i += p)
        r.push_back(a[i]);
    trim(r);
    return r;
}

void squarefree(const PrimeField& F, const FpPoly& f, unsigned mult,
                std::vector<std::pair<FpPoly, unsigned>>& out)
{
    const std::uint64_t p = F.characteristic();
    FpPoly c = gcd(F, f, derivative(F, f));
    FpPoly w = divmod(F, f, c).first;
    unsigned i = 1;
    while (degree(w) > 0) {
        FpPoly y = gcd(F, w, c);
        FpPoly fac = divmod(F, w, y).first;
        if (degree(fac) > 0)
            out.emplace_back(monic(F, fac), i * mult);
        w = y;
        c = divmod(F, c, y).first;
        ++i;
    }
    if (degree(c) > 0)
        squarefree(F, pth_root(c, p), static_cast<unsigned>(mult * p), out);
}

// Splits a squarefree product of irreducibles of common degree d.
void equal_degree(const PrimeField& F, const FpPoly& g, int d, std::mt19937_64& rng,
                  std::vector<FpPoly>& out)
{
    const int n = degree(g);
    if (n == d) {
        out.push_back(monic(F, g));
        return;
    }
    const std::uint64_t p = F.characteristic();
    BigInt exp = pow_ui(BigInt(static_cast<unsigned long>(p)), static_cast<unsigned long>(d));
    exp = (exp - 1) / 2;
    std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
    for (;;) {
        FpPoly a(n);
        for (auto& c : a)
            c = coeff(rng);
        trim(a);
        if (degree(a) < 1)
            continue;
        FpPoly b;
        if (p == 2) {
            // a + a^2 + ... + a^(2^(d-1))
            FpPoly term = a;
            b = a;
            for (int k = 1; k < d; ++k) {
                term = mod(F, mul(F, term, term), g);
                b = add(F, b, term);
            }
        } else {
            b = sub(F, powmod(F, a, exp, g), FpPoly{1});
        }
        FpPoly h = gcd(F, b, g);
        if (degree(h) > 0 && degree(h) < n) {
            equal_degree(F, h, d, rng, out);
            equal_degree(F, divmod(F, g, h).first, d, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<std::pair<FpPoly, unsigned>> factor(const PrimeField& F, const FpPoly& f_in)
{
    FpPoly f = f_in;
    trim(f);
    if (f.empty())
        throw InvalidInput("fp_poly::factor: zero polynomial");
    std::vector<std::pair<FpPoly, unsigned>> parts;
    squarefree(F, monic(F, f), 1, parts);

    std::mt19937_64 rng(0x1f2e3d4c);
    const BigInt p = static_cast<unsigned long>(F.characteristic());
    std::vector<std::pair<FpPoly, unsigned>> result;
    for (auto& [part, mult] : parts) {
        FpPoly rest = part;
        FpPoly h = {0, 1};
        const FpPoly x = {0, 1};
        for (int d = 1; 2 * d <= degree(rest); ++d) {
            h = powmod(F, h, p, rest);
            FpPoly g = gcd(F, sub(F, h, x), rest);
            if (degree(g) > 0) {
                std::vector<FpPoly> pieces;
                equal_degree(F, g, d, rng, pieces);
                for (auto& piece : pieces)
                    result.emplace_back(std::move(piece), mult);
                rest = divmod(F, rest, g).first;
                h = mod(F, h, rest);
            }
        }
        if (degree(rest) > 0)
            result.emplace_back(monic(F, rest), mult);
    }
    std::sort(result.begin(), result.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return result;
}

bool is_irreducible(const PrimeField& F, const FpPoly& f)
{
    if (degree(f) < 1)
        return false;
    auto parts = factor(F, f);
    return parts.size() == 1 && parts[0].second == 1;
}

} // namespace fp_poly

// ---------------------------------------------------------------------------

ResidueField::ResidueField(std::uint64_t p, FpPoly modulus) : prime_(p), modulus_(std::move(modulus))
{
    fp_poly::trim(modulus_);
    if (fp_poly::degree(modulus_) < 1 || modulus_.back() != 1)
        throw InvalidInput("ResidueField: modulus must be monic of positive degree");
    degree_ = static_cast<unsigned>(fp_poly::degree(modulus_));
    // The trace is F_p-linear, so its values on the basis t^i determine it.
    const BigInt pb = static_cast<unsigned long>(p);
    for (unsigned i = 0; i < degree_; ++i) {
        Elem term = zero();
        term.coeffs[i] = 1;
        Elem acc = term;
        for (unsigned k = 1; k < degree_; ++k) {
            term = pow(term, pb);
            acc = add(acc, term);
        }
        basis_trace_.push_back(acc.coeffs[0]);
    }
}

ResidueField ResidueField::make(std::uint64_t p, unsigned f)
{
    if (f == 0)
        throw InvalidInput("ResidueField::make: degree must be positive");
    PrimeField F(p);
    BigInt count = pow_ui(BigInt(static_cast<unsigned long>(p)), f);
    for (BigInt idx = 0; idx < count; ++idx) {
        FpPoly g(f + 1, 0);
        g[f] = 1;
        BigInt rest = idx;
        for (unsigned i = 0; i < f; ++i) {
            g[i] = F.reduce(rest);
            mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        }
        if (fp_poly::is_irreducible(F, g))
            return ResidueField(p, g);
    }
    throw InvalidInput("ResidueField::make: no irreducible polynomial found");
}

BigInt ResidueField::size() const
{
    return pow_ui(BigInt(static_cast<unsigned long>(characteristic())), degree_);
}

ResidueField::Elem ResidueField::zero() const { return Elem{std::vector<std::uint64_t>(degree_, 0)}; }

ResidueField::Elem ResidueField::one() const { return from_int(std::int64_t{1}); }

ResidueField::Elem ResidueField::from_int(std::int64_t x) const
{
    Elem e = zero();
    e.coeffs[0] = prime_.reduce(x);
    return e;
}

ResidueField::Elem ResidueField::from_int(const BigInt& x) const
{
    Elem e = zero();
    e.coeffs[0] = prime_.reduce(x);
    return e;
}

ResidueField::Elem ResidueField::from_poly(const FpPoly& a) const
{
    FpPoly r = fp_poly::mod(prime_, a, modulus_);
    Elem e = zero();
    std::copy(r.begin(), r.end(), e.coeffs.begin());
    return e;
}

ResidueField::Elem ResidueField::generator() const { return from_poly(FpPoly{0, 1}); }

bool ResidueField::is_zero(const Elem& a) const
{
    return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](std::uint64_t c) { return c == 0; });
}

ResidueField::Elem ResidueField::add(const Elem& a, const Elem& b) const
{
    Elem r = a;
    for (unsigned i = 0; i < degree_; ++i)
        r.coeffs[i] = prime_.add(a.coeffs[i], b.coeffs[i]);
    return r;
}

ResidueField::Elem ResidueField::sub(const Elem& a, const Elem& b) const
{
    Elem r = a;
    for (unsigned i = 0; i < degree_; ++i)
        r.coeffs[i] = prime_.sub(a.coeffs[i], b.coeffs[i]);
    return r;
}

ResidueField::Elem ResidueField::neg(const Elem& a) const
{
    Elem r = a;
    for (auto& c : r.coeffs)
        c = prime_.neg(c);
    return r;
}

ResidueField::Elem ResidueField::scale(const Elem& a, std::uint64_t c) const
{
    Elem r = a;
    for (auto& x : r.coeffs)
        x = prime_.mul(x, c);
    return r;
}

ResidueField::Elem ResidueField::mul(const Elem& a, const Elem& b) const
{
    if (degree_ == 1)
        return Elem{{prime_.mul(a.coeffs[0], b.coeffs[0])}};
    std::vector<std::uint64_t> prod(2 * degree_ - 1, 0);
    for (unsigned i = 0; i < degree_; ++i) {
        if (a.coeffs[i] == 0)
            continue;
        for (unsigned j = 0; j < degree_; ++j)
            prod[i + j] = prime_.add(prod[i + j], prime_.mul(a.coeffs[i], b.coeffs[j]));
    }
    // modulus is monic: t^f = -(g_0 + ... + g_{f-1} t^{f-1})
    for (unsigned k = 2 * degree_ - 1; k-- > degree_;) {
        const std::uint64_t c = prod[k];
        if (c == 0)
            continue;
        prod[k] = 0;
        for (unsigned j = 0; j < degree_; ++j)
            prod[k - degree_ + j] = prime_.sub(prod[k - degree_ + j], prime_.mul(c, modulus_[j]));
    }
    prod.resize(degree_);
    return Elem{std::move(prod)};
}

ResidueField::Elem ResidueField::pow(const Elem& a, const BigInt& e) const
{
    if (e < 0)
        return pow(inv(a), BigInt(-e));
    Elem r = one();
    const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = mul(r, r);
        if (mpz_tstbit(e.get_mpz_t(), i))
            r = mul(r, a);
    }
    return r;
}

ResidueField::Elem ResidueField::inv(const Elem& a) const
{
    if (is_zero(a))
        throw InvalidInput("ResidueField: inverse of zero");
    if (degree_ == 1)
        return Elem{{prime_.inv(a.coeffs[0])}};
    // extended Euclid: track u with u * a = r (mod g)
    FpPoly r0 = modulus_, r1 = a.coeffs, u0, u1{1};
    fp_poly::trim(r1);
    while (fp_poly::degree(r1) > 0) {
        auto [q, r] = fp_poly::divmod(prime_, r0, r1);
        FpPoly u = fp_poly::sub(prime_, u0, fp_poly::mul(prime_, q, u1));
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u);
    }
    const std::uint64_t c = prime_.inv(r1[0]);
    for (auto& x : u1)
        x = prime_.mul(x, c);
    return from_poly(u1);
}

int ResidueField::quadratic_character(const Elem& a) const
{
    if (characteristic() == 2)
        throw InvalidInput("quadratic_character: characteristic 2");
    if (is_zero(a))
        return 0;
    Elem r = pow(a, BigInt((size() - 1) / 2));
    return r == one() ? 1 : -1;
}

std::uint64_t ResidueField::trace(const Elem& a) const
{
    std::uint64_t t = 0;
    for (unsigned i = 0; i < degree_; ++i)
        t = prime_.add(t, prime_.mul(a.coeffs[i], basis_trace_[i]));
    return t;
}

ResidueField::Elem ResidueField::element_at(std::uint64_t index) const
{
    Elem e = zero();
    const std::uint64_t p = characteristic();
    for (unsigned i = 0; i < degree_; ++i) {
        e.coeffs[i] = index % p;
        index /= p;
    }
    return e;
}

std::uint64_t ResidueField::index_of(const Elem& a) const
{
    std::uint64_t idx = 0;
    for (unsigned i = degree_; i-- > 0;)
        idx = idx * characteristic() + a.coeffs[i];
    return idx;
}

} // namespace irred
