#include "irred/signature_bound.hpp"
#include "irred/errors.hpp"
#include "irred/ideal.hpp"

#include <algorithm>
#include <optional>

namespace irred {

Signature::Signature(std::vector<int> exponents) : s_(std::move(exponents))
{
    for (int e : s_)
        if (e != 0 && e != 12)
            throw InvalidInput("signature entries must be 0 or 12");
}

bool Signature::is_constant() const
{
    return std::adjacent_find(s_.begin(), s_.end(), std::not_equal_to<>()) == s_.end();
}

std::string Signature::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < s_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(s_[i]);
    }
    return out + ")";
}

std::vector<Signature> enumerate_nonconstant_signatures(unsigned d)
{
    if (d == 0)
        throw InvalidInput("enumerate_nonconstant_signatures: degree must be positive");
    if (d > 20)
        throw SizeCapExceeded("enumerate_nonconstant_signatures: 2^d signatures is too many");
    std::vector<Signature> out;
    const unsigned long total = 1ul << d;
    for (unsigned long k = 1; k + 1 < total; ++k) {
        std::vector<int> s(d);
        for (unsigned i = 0; i < d; ++i)
            s[i] = (k >> i) & 1 ? 12 : 0;
        out.emplace_back(std::move(s));
    }
    return out;
}

AlgebraicInteger twisted_norm(const NumberField& K, const Signature& s, const AlgebraicInteger& a)
{
    if (s.size() != K.automorphism_count())
        throw InvalidInput("twisted_norm: signature length does not match the automorphism count");
    AlgebraicInteger acc = K.one();
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s.exponents()[k] == 0)
            continue;
        AlgebraicInteger conj = K.apply_automorphism(k, a);
        acc = K.mul(acc, K.pow(conj, static_cast<unsigned long>(s.exponents()[k])));
    }
    return acc;
}

BigInt compute_A_s(const NumberField& K, const Signature& s, const UnitBasis& units)
{
    if (s.is_constant())
        throw InvalidInput("compute_A_s: constant signature " + s.to_string() + " has no bound");
    std::optional<IdealHNF> acc;
    for (const auto& eps : units.units) {
        AlgebraicInteger term = K.sub(twisted_norm(K, s, eps), K.one());
        if (K.is_zero(term))
            continue;
        IdealHNF I = ideal_from_element(K, term);
        acc = acc ? ideal_gcd(K, *acc, I) : I;
        if (acc->is_unit_ideal())
            break;
    }
    return acc ? acc->norm() : BigInt(0);
}

SignatureBound compute_B(const NumberField& K, const UnitBasis& units)
{
    if (K.degree() < 2)
        throw InvalidInput("compute_B: degree must be at least 2");
    SignatureBound out;
    std::vector<BigInt> values;
    for (auto& s : enumerate_nonconstant_signatures(K.degree())) {
        BigInt a = compute_A_s(K, s, units);
        if (a == 0)
            throw DegeneracyError("A_s vanishes for signature " + s.to_string() +
                                  "; the unit basis cannot be independent in a totally real field");
        values.push_back(a);
        out.a_s.emplace_back(std::move(s), std::move(a));
    }
    out.B = gcd_lcm_set(values, Reduce::lcm);
    out.factorization = factorize(out.B);
    return out;
}

} // namespace irred
