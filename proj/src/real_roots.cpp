#include "irred/real_roots.hpp"
#include "irred/errors.hpp"

#include <functional>

namespace irred {

using qpoly::QPoly;

std::vector<QPoly> sturm_sequence(const QPoly& f)
{
    std::vector<QPoly> seq{f, qpoly::derivative(f)};
    while (qpoly::degree(seq.back()) > 0) {
        QPoly r = qpoly::rem(seq[seq.size() - 2], seq.back());
        if (r.empty())
            break;
        seq.push_back(qpoly::scale(r, -1));
    }
    return seq;
}

namespace {

int variations(const std::vector<int>& signs)
{
    int count = 0, last = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++count;
        last = s;
    }
    return count;
}

int variations_at(const std::vector<QPoly>& seq, const Rational& x)
{
    std::vector<int> signs;
    for (const auto& p : seq)
        signs.push_back(qpoly::sign_at(p, x));
    return variations(signs);
}

int variations_at_infinity(const std::vector<QPoly>& seq, bool positive)
{
    std::vector<int> signs;
    for (const auto& p : seq) {
        if (p.empty()) {
            signs.push_back(0);
            continue;
        }
        int s = sgn(p.back());
        if (!positive && qpoly::degree(p) % 2 == 1)
            s = -s;
        signs.push_back(s);
    }
    return variations(signs);
}

} // namespace

int count_real_roots(const IntPoly& f)
{
    if (f.degree() < 1)
        return 0;
    auto seq = sturm_sequence(qpoly::from_int(f));
    return variations_at_infinity(seq, false) - variations_at_infinity(seq, true);
}

std::vector<RootInterval> isolate_real_roots(const IntPoly& f)
{
    if (f.degree() < 1)
        return {};
    const QPoly qf = qpoly::from_int(f);
    auto seq = sturm_sequence(qf);

    // Cauchy bound
    Rational bound = 0;
    for (int i = 0; i < f.degree(); ++i) {
        Rational r = Rational(abs(f.coeff(i))) / Rational(abs(f.leading()));
        if (r > bound)
            bound = r;
    }
    bound += 1;

    std::vector<RootInterval> out;
    std::function<void(const Rational&, const Rational&, int, int)> split =
        [&](const Rational& lo, const Rational& hi, int v_lo, int v_hi) {
            const int n = v_lo - v_hi;
            if (n == 0)
                return;
            if (n == 1) {
                out.push_back({lo, hi});
                return;
            }
            Rational mid = (lo + hi) / 2;
            int v_mid = variations_at(seq, mid);
            split(lo, mid, v_lo, v_mid);
            split(mid, hi, v_mid, v_hi);
        };
    Rational lo = -bound, hi = bound;
    split(lo, hi, variations_at(seq, lo), variations_at(seq, hi));
    return out;
}

RootInterval refine_root(const IntPoly& f, RootInterval iv, unsigned bits)
{
    const QPoly qf = qpoly::from_int(f);
    Rational width_cap = 1;
    mpq_div_2exp(width_cap.get_mpq_t(), width_cap.get_mpq_t(), bits);
    if (qpoly::sign_at(qf, iv.hi) == 0)
        return {iv.hi, iv.hi};
    const int s_hi = qpoly::sign_at(qf, iv.hi);
    while (iv.hi - iv.lo > width_cap) {
        Rational mid = (iv.lo + iv.hi) / 2;
        int s = qpoly::sign_at(qf, mid);
        if (s == 0)
            return {mid, mid};
        if (s != s_hi)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
    return iv;
}

} // namespace irred
