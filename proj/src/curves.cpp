#include "irred/curves.hpp"
#include "irred/errors.hpp"

#include <bit>
#include <vector>

namespace irred {

WeierstrassCurve::WeierstrassCurve(const NumberField& K, std::array<AlgebraicInteger, 5> a) : a_(std::move(a))
{
    auto c = [&](long n) { return K.from_int(n); };
    const auto &a1 = a_[0], &a2 = a_[1], &a3 = a_[2], &a4 = a_[3], &a6 = a_[4];
    b2_ = K.add(K.mul(a1, a1), K.mul(c(4), a2));
    b4_ = K.add(K.mul(c(2), a4), K.mul(a1, a3));
    b6_ = K.add(K.mul(a3, a3), K.mul(c(4), a6));
    // b8 = a1^2 a6 + 4 a2 a6 - a1 a3 a4 + a2 a3^2 - a4^2
    b8_ = K.mul(K.mul(a1, a1), a6);
    b8_ = K.add(b8_, K.mul(c(4), K.mul(a2, a6)));
    b8_ = K.sub(b8_, K.mul(K.mul(a1, a3), a4));
    b8_ = K.add(b8_, K.mul(a2, K.mul(a3, a3)));
    b8_ = K.sub(b8_, K.mul(a4, a4));
    c4_ = K.sub(K.mul(b2_, b2_), K.mul(c(24), b4_));
    c6_ = K.add(K.neg(K.mul(b2_, K.mul(b2_, b2_))), K.sub(K.mul(c(36), K.mul(b2_, b4_)), K.mul(c(216), b6_)));
    // Delta = -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6
    disc_ = K.neg(K.mul(K.mul(b2_, b2_), b8_));
    disc_ = K.sub(disc_, K.mul(c(8), K.mul(b4_, K.mul(b4_, b4_))));
    disc_ = K.sub(disc_, K.mul(c(27), K.mul(b6_, b6_)));
    disc_ = K.add(disc_, K.mul(c(9), K.mul(b2_, K.mul(b4_, b6_))));
    if (K.is_zero(disc_))
        throw InvalidInput("WeierstrassCurve: singular model (discriminant 0)");
}

ResidueFieldElement weierstrass_discriminant(const ResidueField& F, const std::array<ResidueFieldElement, 5>& a)
{
    const auto &a1 = a[0], &a2 = a[1], &a3 = a[2], &a4 = a[3], &a6 = a[4];
    auto k = [&](std::int64_t n) { return F.from_int(n); };
    auto b2 = F.add(F.mul(a1, a1), F.mul(k(4), a2));
    auto b4 = F.add(F.mul(k(2), a4), F.mul(a1, a3));
    auto b6 = F.add(F.mul(a3, a3), F.mul(k(4), a6));
    auto b8 = F.mul(F.mul(a1, a1), a6);
    b8 = F.add(b8, F.mul(k(4), F.mul(a2, a6)));
    b8 = F.sub(b8, F.mul(F.mul(a1, a3), a4));
    b8 = F.add(b8, F.mul(a2, F.mul(a3, a3)));
    b8 = F.sub(b8, F.mul(a4, a4));
    auto disc = F.neg(F.mul(F.mul(b2, b2), b8));
    disc = F.sub(disc, F.mul(k(8), F.mul(b4, F.mul(b4, b4))));
    disc = F.sub(disc, F.mul(k(27), F.mul(b6, b6)));
    disc = F.add(disc, F.mul(k(9), F.mul(b2, F.mul(b4, b6))));
    return disc;
}

ReducedCurve make_reduced_curve(ResidueField F, std::array<ResidueFieldElement, 5> a)
{
    auto disc = weierstrass_discriminant(F, a);
    if (F.is_zero(disc))
        throw BadReduction("reduced discriminant is zero");
    return ReducedCurve{std::move(F), std::move(a), std::move(disc)};
}

ReducedCurve reduce_curve(const WeierstrassCurve& E, const PrimeIdeal& q)
{
    std::array<ResidueFieldElement, 5> a;
    for (std::size_t i = 0; i < 5; ++i)
        a[i] = residue_map(E.a_invariants()[i], q);
    try {
        return make_reduced_curve(q.residue_field, std::move(a));
    } catch (const BadReduction&) {
        throw BadReduction("model has bad reduction at " + q.label());
    }
}

namespace {

// Elements as enumeration indices, multiplication through discrete logs.
class IndexedField {
public:
    explicit IndexedField(const ResidueField& F)
        : p_(F.characteristic()), f_(F.degree()), q_(F.size().get_ui()), log_(q_), exp_(q_ - 1)
    {
        const BigInt order = static_cast<unsigned long>(q_ - 1);
        const auto factors = factorize(order).primes;
        ResidueFieldElement g;
        for (std::uint64_t i = 1;; ++i) {
            g = F.element_at(i);
            bool primitive = true;
            for (const auto& [r, e] : factors)
                if (F.pow(g, BigInt(order / r)) == F.one()) {
                    primitive = false;
                    break;
                }
            if (primitive)
                break;
        }
        ResidueFieldElement x = F.one();
        for (std::uint64_t k = 0; k + 1 < q_; ++k) {
            const std::uint64_t idx = F.index_of(x);
            exp_[k] = static_cast<std::uint32_t>(idx);
            log_[idx] = static_cast<std::uint32_t>(k);
            x = F.mul(x, g);
        }
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const
    {
        if (f_ == 1) {
            const std::uint64_t s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        if (p_ == 2)
            return a ^ b;
        std::uint64_t r = 0, place = 1;
        for (unsigned i = 0; i < f_; ++i) {
            std::uint64_t s = a % p_ + b % p_;
            if (s >= p_)
                s -= p_;
            r += s * place;
            place *= p_;
            a /= p_;
            b /= p_;
        }
        return r;
    }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const
    {
        if (a == 0 || b == 0)
            return 0;
        std::uint64_t e = std::uint64_t{log_[a]} + log_[b];
        if (e >= q_ - 1)
            e -= q_ - 1;
        return exp_[e];
    }

    std::uint64_t inv(std::uint64_t a) const { return exp_[(q_ - 1 - log_[a]) % (q_ - 1)]; }

    // Odd q only.
    int chi(std::uint64_t a) const { return a == 0 ? 0 : (log_[a] % 2 == 0 ? 1 : -1); }

private:
    std::uint64_t p_;
    unsigned f_;
    std::uint64_t q_;
    std::vector<std::uint32_t> log_, exp_;
};

// Above this size the log tables cost more memory than they save time.
constexpr std::uint64_t table_limit = std::uint64_t{1} << 24;

std::uint64_t count_affine_direct(const ReducedCurve& C, std::uint64_t q)
{
    const ResidueField& F = C.field;
    const auto &a1 = C.a[0], &a2 = C.a[1], &a3 = C.a[2], &a4 = C.a[3], &a6 = C.a[4];

    std::uint64_t affine = 0;
    if (F.characteristic() != 2) {
        // y^2 + h y - R = 0 has 1 + chi(h^2 + 4R) solutions.
        const auto four = F.from_int(std::int64_t{4});
        for (std::uint64_t i = 0; i < q; ++i) {
            auto x = F.element_at(i);
            auto h = F.add(F.mul(a1, x), a3);
            auto r = F.add(F.mul(F.add(F.mul(F.add(x, a2), x), a4), x), a6);
            auto disc = F.add(F.mul(h, h), F.mul(four, r));
            affine += static_cast<std::uint64_t>(1 + F.quadratic_character(disc));
        }
    } else {
        // h = 0: y^2 = R has one root. Otherwise y = h z gives z^2 + z = R / h^2,
        // solvable (twice) iff the absolute trace vanishes.
        for (std::uint64_t i = 0; i < q; ++i) {
            auto x = F.element_at(i);
            auto h = F.add(F.mul(a1, x), a3);
            auto r = F.add(F.mul(F.add(F.mul(F.add(x, a2), x), a4), x), a6);
            if (F.is_zero(h)) {
                affine += 1;
                continue;
            }
            auto c = F.mul(r, F.inv(F.mul(h, h)));
            affine += F.trace(c) == 0 ? 2 : 0;
        }
    }
    return affine;
}

} // namespace

BigInt detail::count_points_direct(const ReducedCurve& C)
{
    return BigInt(static_cast<unsigned long>(count_affine_direct(C, C.field.size().get_ui()))) + 1;
}

BigInt count_points(const ReducedCurve& C, std::uint64_t cap)
{
    const ResidueField& F = C.field;
    const BigInt size = F.size();
    if (size > cap)
        throw SizeCapExceeded("point count: residue field of size " + size.get_str() + " exceeds the cap " +
                              std::to_string(cap));
    const std::uint64_t q = size.get_ui();
    if (q > table_limit)
        return BigInt(static_cast<unsigned long>(count_affine_direct(C, q))) + 1;

    const IndexedField T(F);
    const std::uint64_t a1 = F.index_of(C.a[0]), a2 = F.index_of(C.a[1]), a3 = F.index_of(C.a[2]),
                        a4 = F.index_of(C.a[3]), a6 = F.index_of(C.a[4]);
    std::uint64_t affine = 0;
    if (F.characteristic() != 2) {
        // y^2 + h y - R = 0 has 1 + chi(h^2 + 4R) solutions.
        const std::uint64_t four = F.index_of(F.from_int(std::int64_t{4}));
        for (std::uint64_t x = 0; x < q; ++x) {
            const std::uint64_t h = T.add(T.mul(a1, x), a3);
            const std::uint64_t r = T.add(T.mul(T.add(T.mul(T.add(x, a2), x), a4), x), a6);
            affine += static_cast<std::uint64_t>(1 + T.chi(T.add(T.mul(h, h), T.mul(four, r))));
        }
    } else {
        // h = 0: y^2 = R has one root. Otherwise y = h z gives z^2 + z = R / h^2,
        // solvable (twice) iff the absolute trace vanishes; the trace is the
        // parity of the bits selected by mask.
        std::uint64_t mask = 0;
        for (unsigned i = 0; i < F.degree(); ++i)
            mask |= F.trace(F.element_at(std::uint64_t{1} << i)) << i;
        for (std::uint64_t x = 0; x < q; ++x) {
            const std::uint64_t h = T.add(T.mul(a1, x), a3);
            const std::uint64_t r = T.add(T.mul(T.add(T.mul(T.add(x, a2), x), a4), x), a6);
            if (h == 0) {
                affine += 1;
                continue;
            }
            const std::uint64_t c = T.mul(r, T.inv(T.mul(h, h)));
            affine += std::popcount(c & mask) % 2 == 0 ? 2 : 0;
        }
    }
    return BigInt(static_cast<unsigned long>(affine)) + 1;
}

FrobeniusData frobenius_from_count(const std::string& label, std::uint64_t ell, const BigInt& norm,
                                   const BigInt& count)
{
    BigInt a = norm + 1 - count;
    if (a * a > 4 * norm)
        throw DegeneracyError("Hasse bound violated at " + label + ": a_q = " + a.get_str());
    return FrobeniusData{label, ell, norm, a, IntPoly(std::vector<BigInt>{norm, BigInt(-a), 1})};
}

FrobeniusData frobenius_data(const WeierstrassCurve& E, const PrimeIdeal& q, std::uint64_t cap)
{
    ReducedCurve C = reduce_curve(E, q);
    return frobenius_from_count(q.label(), q.ell, q.norm(), count_points(C, cap));
}

} // namespace irred
