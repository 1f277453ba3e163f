#include "irred/irreducibility.hpp"
#include "irred/errors.hpp"

#include <algorithm>
#include <iterator>

namespace irred {

CriterionResult resultant_criterion(const FrobeniusData& F, unsigned long r, bool factor)
{
    if (r == 0)
        throw InvalidInput("resultant_criterion: r must be positive");
    CriterionResult out{F, r, resultant_quadratic_cyclotomic(F.trace, F.norm, 12 * r), std::nullopt};
    if (factor && out.resultant != 0)
        out.factorization = factorize(abs(out.resultant));
    return out;
}

GeneralCriterion general_resultant_criterion(const NumberField& K, const FrobeniusData& F, unsigned long r,
                                             const AlgebraicInteger& gamma)
{
    if (r == 0)
        throw InvalidInput("general_resultant_criterion: r must be positive");
    const unsigned long m = 12 * r;
    BigInt nm = pow_ui(F.norm, m);
    BigInt sm = lucas_power_sum(F.trace, F.norm, m);
    AlgebraicInteger value = K.from_int(nm);
    value = K.sub(value, K.scale(gamma, sm));
    value = K.add(value, K.mul(gamma, gamma));
    BigInt n = K.norm(value);
    return {std::move(value), std::move(n)};
}

BigInt merel_bound(unsigned long d, unsigned long h)
{
    if (d == 0 || h == 0)
        throw InvalidInput("merel_bound: degree and class number must be positive");
    BigInt t = pow_ui(BigInt(3), 6 * d * h) + 1;
    return t * t;
}

std::string to_string(BadPrimeReason r)
{
    switch (r) {
    case BadPrimeReason::small_prime: return "small prime (p < 17, p != 11)";
    case BadPrimeReason::ramified: return "ramified in K";
    case BadPrimeReason::divides_B: return "divides B";
    case BadPrimeReason::survives_resultants: return "survives all resultants";
    case BadPrimeReason::additive_residue_char: return "residue characteristic of an additive prime";
    case BadPrimeReason::auxiliary_prime: return "auxiliary prime";
    }
    return "unknown";
}

AuxiliaryEvidence evidence_from_criteria(std::uint64_t ell, const std::vector<CriterionResult>& criteria)
{
    if (criteria.empty())
        throw ConfigError("auxiliary prime " + std::to_string(ell) + " has no usable prime of good reduction");
    std::vector<BigInt> values;
    for (const auto& c : criteria)
        values.push_back(c.resultant);
    return {ell, gcd_lcm_set(values, Reduce::gcd)};
}

std::vector<BigInt> BadPrimeSet::sorted() const
{
    std::vector<BigInt> out;
    for (const auto& [p, reasons] : primes)
        out.push_back(p);
    return out;
}

std::vector<BigInt> BadPrimeSet::beyond_baseline() const
{
    std::vector<BigInt> out;
    for (const auto& [p, reasons] : primes)
        if (!reasons.count(BadPrimeReason::small_prime))
            out.push_back(p);
    return out;
}

BadPrimeSet assemble_bad_primes(const std::vector<BigInt>& ramified, const BigInt& B,
                                const std::vector<AuxiliaryEvidence>& evidence,
                                const std::vector<BigInt>& additive_residue_chars)
{
    BadPrimeSet out;
    for (long p : {2, 3, 5, 7, 13})
        out.primes[BigInt(p)].insert(BadPrimeReason::small_prime);
    for (const auto& p : ramified)
        out.primes[p].insert(BadPrimeReason::ramified);
    if (B != 0)
        for (const auto& [p, e] : factorize(B).primes)
            out.primes[p].insert(BadPrimeReason::divides_B);
    for (const auto& p : additive_residue_chars)
        out.primes[p].insert(BadPrimeReason::additive_residue_char);

    std::optional<std::set<BigInt>> survivors;
    std::set<BigInt> aux;
    for (const auto& ev : evidence) {
        const BigInt ell = static_cast<unsigned long>(ev.ell);
        aux.insert(ell);
        if (ev.value == 0)
            continue;
        std::set<BigInt> candidates{ell};
        for (const auto& [p, e] : factorize(ev.value).primes)
            candidates.insert(p);
        if (!survivors) {
            survivors = std::move(candidates);
        } else {
            std::set<BigInt> next;
            std::set_intersection(survivors->begin(), survivors->end(), candidates.begin(), candidates.end(),
                                  std::inserter(next, next.begin()));
            survivors = std::move(next);
        }
    }
    if (!evidence.empty() && !survivors)
        throw DegeneracyError("every auxiliary resultant vanishes; no prime can be excluded");
    if (survivors) {
        for (const auto& p : *survivors) {
            out.primes[p].insert(BadPrimeReason::survives_resultants);
            if (aux.count(p))
                out.primes[p].insert(BadPrimeReason::auxiliary_prime);
        }
    }
    return out;
}

} // namespace irred
