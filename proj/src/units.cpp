#include "irred/units.hpp"
#include "irred/errors.hpp"
#include "irred/real_roots.hpp"

#include <mpfr.h>

#include <functional>
#include <sstream>

namespace irred {

std::string to_string(UnitProvenance p)
{
    return p == UnitProvenance::computed ? "computed" : "user-supplied";
}

AlgebraicInteger fundamental_unit_quadratic(const BigInt& D)
{
    if (D <= 1 || !is_squarefree(D))
        throw InvalidInput("fundamental_unit_quadratic: D must be squarefree and > 1");
    const bool one_mod_four = D % 4 == 1;
    const BigInt s = sqrt(D);
    const BigInt omega_norm = one_mod_four ? BigInt((1 - D) / 4) : BigInt(-D);

    // x + y*omega has norm x^2 + x y Tr(omega) + y^2 N(omega).
    auto norm = [&](const BigInt& x, const BigInt& y) -> BigInt {
        return one_mod_four ? BigInt(x * x + x * y + y * y * omega_norm) : BigInt(x * x + y * y * omega_norm);
    };

    // Expand (P + sqrt D)/Q: sqrt D, or (sqrt D - 1)/2 = -conj(omega).
    BigInt P = one_mod_four ? -1 : 0;
    BigInt Q = one_mod_four ? 2 : 1;
    BigInt h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
    constexpr long step_cap = 1'000'000;
    for (long step = 0; step < step_cap; ++step) {
        BigInt a;
        if (Q > 0) {
            a = P + s;
            mpz_fdiv_q(a.get_mpz_t(), a.get_mpz_t(), Q.get_mpz_t());
        } else {
            BigInt q = -Q;
            a = P + s;
            mpz_fdiv_q(a.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t());
            a = -(a + 1);
        }
        BigInt h = a * h_prev + h_prev2;
        BigInt k = a * k_prev + k_prev2;
        if (k >= 1 && h >= 0 && abs(norm(h, k)) == 1)
            return AlgebraicInteger{{h, k}};
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
    throw SizeCapExceeded("fundamental_unit_quadratic: continued fraction exceeded 10^6 steps");
}

namespace {

constexpr mpfr_prec_t working_precision = 192;

// Closed interval with MPFR endpoints and outward rounding.
class Interval {
public:
    Interval()
    {
        mpfr_init2(lo_, working_precision);
        mpfr_init2(hi_, working_precision);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }
    Interval(const Rational& a, const Rational& b) : Interval()
    {
        mpfr_set_q(lo_, a.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(hi_, b.get_mpq_t(), MPFR_RNDU);
    }
    explicit Interval(const Rational& a) : Interval(a, a) {}
    Interval(const Interval& o) : Interval()
    {
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    Interval& operator=(const Interval& o)
    {
        if (this != &o) {
            mpfr_set(lo_, o.lo_, MPFR_RNDD);
            mpfr_set(hi_, o.hi_, MPFR_RNDU);
        }
        return *this;
    }
    ~Interval()
    {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    friend Interval operator+(const Interval& a, const Interval& b)
    {
        Interval r;
        mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }
    friend Interval operator-(const Interval& a, const Interval& b)
    {
        Interval r;
        mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
        return r;
    }
    friend Interval operator*(const Interval& a, const Interval& b)
    {
        Interval r;
        mpfr_t t;
        mpfr_init2(t, working_precision);
        bool first = true;
        for (auto x : {a.lo_, a.hi_}) {
            for (auto y : {b.lo_, b.hi_}) {
                mpfr_mul(t, x, y, MPFR_RNDD);
                if (first || mpfr_less_p(t, r.lo_))
                    mpfr_set(r.lo_, t, MPFR_RNDD);
                mpfr_mul(t, x, y, MPFR_RNDU);
                if (first || mpfr_greater_p(t, r.hi_))
                    mpfr_set(r.hi_, t, MPFR_RNDU);
                first = false;
            }
        }
        mpfr_clear(t);
        return r;
    }

    bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

    Interval abs() const
    {
        if (mpfr_sgn(lo_) >= 0)
            return *this;
        Interval r;
        if (mpfr_sgn(hi_) <= 0) {
            mpfr_neg(r.lo_, hi_, MPFR_RNDD);
            mpfr_neg(r.hi_, lo_, MPFR_RNDU);
        } else {
            mpfr_set_zero(r.lo_, 1);
            mpfr_neg(r.hi_, lo_, MPFR_RNDU);
            if (mpfr_greater_p(hi_, r.hi_))
                mpfr_set(r.hi_, hi_, MPFR_RNDU);
        }
        return r;
    }

    /// Requires a strictly positive interval.
    Interval log() const
    {
        if (mpfr_sgn(lo_) <= 0)
            throw VerificationError("unit basis: an embedding of a unit could not be separated from zero");
        Interval r;
        mpfr_log(r.lo_, lo_, MPFR_RNDD);
        mpfr_log(r.hi_, hi_, MPFR_RNDU);
        return r;
    }

    /// |midpoint| >= 2 * radius, i.e. the value is separated from zero by
    /// twice the accumulated error.
    bool certified_nonzero() const
    {
        mpfr_t mid, rad;
        mpfr_inits2(working_precision, mid, rad, static_cast<mpfr_ptr>(nullptr));
        mpfr_add(mid, lo_, hi_, MPFR_RNDN);
        mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
        mpfr_sub(rad, hi_, lo_, MPFR_RNDU);
        mpfr_div_2ui(rad, rad, 1, MPFR_RNDU);
        mpfr_abs(mid, mid, MPFR_RNDN);
        mpfr_mul_2ui(rad, rad, 1, MPFR_RNDU);
        bool ok = !contains_zero() && mpfr_greaterequal_p(mid, rad);
        mpfr_clears(mid, rad, static_cast<mpfr_ptr>(nullptr));
        return ok;
    }

    std::string to_string() const
    {
        auto fmt = [](mpfr_srcptr x) {
            char buf[64];
            mpfr_snprintf(buf, sizeof buf, "%.20Rg", x);
            return std::string(buf);
        };
        return "[" + fmt(lo_) + ", " + fmt(hi_) + "]";
    }

private:
    mpfr_t lo_, hi_;
};

Interval eval_at(const std::vector<Rational>& poly, const Interval& x)
{
    Interval acc;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it)
        acc = acc * x + Interval(*it);
    return acc;
}

Interval interval_det(const std::vector<std::vector<Interval>>& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return Interval(Rational(1));
    if (n == 1)
        return m[0][0];
    Interval acc;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Interval>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Interval> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c)
                    row.push_back(m[r][j]);
            minor.push_back(std::move(row));
        }
        Interval term = m[0][c] * interval_det(minor);
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

} // namespace

UnitBasis verify_unit_basis(const NumberField& K, const std::vector<AlgebraicInteger>& units,
                            UnitProvenance provenance)
{
    const unsigned d = K.degree();
    if (units.size() + 1 != d)
        throw InvalidInput("unit basis must contain d - 1 = " + std::to_string(d - 1) + " elements, got " +
                           std::to_string(units.size()));
    for (std::size_t i = 0; i < units.size(); ++i) {
        BigInt n = K.norm(units[i]);
        if (abs(n) != 1)
            throw VerificationError("unit basis element " + std::to_string(i) + " has norm " + n.get_str() +
                                    ", not a unit");
    }

    auto roots = isolate_real_roots(K.descriptor().min_poly);
    if (roots.size() != d)
        throw VerificationError("unit basis: field is not totally real");
    std::vector<Interval> embeddings;
    for (unsigned j = 0; j + 1 < d; ++j) {
        RootInterval iv = refine_root(K.descriptor().min_poly, roots[j], working_precision + 16);
        embeddings.emplace_back(iv.lo, iv.hi);
    }

    std::vector<std::vector<Interval>> logs(units.size());
    for (std::size_t i = 0; i < units.size(); ++i) {
        auto poly = K.to_power_basis(units[i]);
        for (const auto& x : embeddings)
            logs[i].push_back(eval_at(poly, x).abs().log());
    }
    Interval det = interval_det(logs);
    if (!det.certified_nonzero())
        throw VerificationError("unit basis: log-embedding determinant " + det.to_string() +
                                " is not certified nonzero; units are possibly dependent");
    return UnitBasis{units, provenance, det.to_string()};
}

} // namespace irred
