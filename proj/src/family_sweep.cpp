#include "irred/family_sweep.hpp"
#include "irred/errors.hpp"
#include "irred/irreducibility.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <variant>

namespace irred {

std::string to_string(SkipRule rule)
{
    return rule == SkipRule::both_zero ? "both_zero" : "shared_factor";
}

bool is_skipped(SkipRule rule, std::uint64_t a, std::uint64_t b)
{
    return rule == SkipRule::both_zero ? (a == 0 && b == 0) : (a == 0 || b == 0);
}

namespace {

struct ReducedMonomial {
    unsigned i, j;
    ResidueFieldElement coeff;
};

using ReducedFamily = std::array<std::vector<ReducedMonomial>, 5>;

ReducedFamily reduce_family(const CurveFamily& family, const PrimeIdeal& q)
{
    ReducedFamily out;
    for (std::size_t k = 0; k < 5; ++k)
        for (const auto& m : family.coeffs[k])
            out[k].push_back({m.i, m.j, residue_map(m.coeff, q)});
    return out;
}

ReducedCurve specialize_reduced(const ReducedFamily& fam, const ResidueField& F, std::uint64_t a, std::uint64_t b)
{
    const PrimeField& Fp = F.prime_field();
    std::array<ResidueFieldElement, 5> coeffs;
    for (std::size_t k = 0; k < 5; ++k) {
        ResidueFieldElement acc = F.zero();
        for (const auto& m : fam[k]) {
            std::uint64_t scalar = Fp.mul(Fp.pow(a, m.i), Fp.pow(b, m.j));
            if (scalar != 0)
                acc = F.add(acc, F.scale(m.coeff, scalar));
        }
        coeffs[k] = std::move(acc);
    }
    return make_reduced_curve(F, std::move(coeffs));
}

} // namespace

ReducedCurve specialize(const CurveFamily& family, const PrimeIdeal& q, std::uint64_t a, std::uint64_t b)
{
    if (a >= q.ell || b >= q.ell)
        throw InvalidInput("specialize: pair entries must be residues modulo " + std::to_string(q.ell));
    try {
        return specialize_reduced(reduce_family(family, q), q.residue_field, a, b);
    } catch (const BadReduction&) {
        throw BadReduction("specialization (" + std::to_string(a) + "," + std::to_string(b) +
                           ") is singular at " + q.label());
    }
}

bool SweepResult::partial() const
{
    return std::any_of(skipped.begin(), skipped.end(), [](const SkippedPair& s) { return !s.by_rule; });
}

SweepResult sweep_prime(const NumberField& K, const CurveFamily& family, std::uint64_t ell, unsigned long r,
                        unsigned jobs, std::uint64_t cap)
{
    if (r == 0)
        throw InvalidInput("sweep_prime: r must be positive");
    const std::vector<PrimeIdeal> primes = split_prime(K, ell);
    for (const auto& q : primes)
        if (q.ramification > 1)
            throw ConfigError("auxiliary prime " + std::to_string(ell) + " ramifies in K");
    for (const auto& q : primes)
        if (q.norm() > cap)
            throw SizeCapExceeded("residue field of " + q.label() + " exceeds the point-count cap");

    std::vector<ReducedFamily> reduced;
    for (const auto& q : primes)
        reduced.push_back(reduce_family(family, q));

    const std::uint64_t total = ell * ell;
    using Outcome = std::variant<std::monostate, PairValue, SkippedPair>;
    std::vector<Outcome> outcomes(total);

    auto evaluate = [&](std::uint64_t idx) -> Outcome {
        const std::uint64_t a = idx / ell, b = idx % ell;
        if (is_skipped(family.skip, a, b))
            return SkippedPair{a, b, "skip rule " + to_string(family.skip), true};
        PairValue pv{a, b, {}, 0};
        std::vector<BigInt> values;
        for (std::size_t k = 0; k < primes.size(); ++k) {
            std::optional<ReducedCurve> C;
            try {
                C = specialize_reduced(reduced[k], primes[k].residue_field, a, b);
            } catch (const BadReduction&) {
                return SkippedPair{a, b, "bad reduction of the model at " + primes[k].label(), false};
            }
            FrobeniusData F = frobenius_from_count(primes[k].label(), ell, primes[k].norm(), count_points(*C, cap));
            pv.traces.push_back(F.trace);
            values.push_back(resultant_quadratic_cyclotomic(F.trace, F.norm, 12 * r));
        }
        pv.value = gcd_lcm_set(values, Reduce::gcd);
        return pv;
    };

    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            std::uint64_t idx = next.fetch_add(1);
            if (idx >= total)
                return;
            try {
                outcomes[idx] = evaluate(idx);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next = total;
                return;
            }
        }
    };
    const unsigned n_threads = std::max(1u, jobs);
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n_threads; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);

    SweepResult out;
    out.ell = ell;
    out.r = r;
    for (const auto& q : primes)
        out.primes.push_back(q.label());
    std::vector<BigInt> values;
    for (auto& o : outcomes) {
        if (auto* pv = std::get_if<PairValue>(&o)) {
            values.push_back(pv->value);
            out.pairs.push_back(std::move(*pv));
        } else if (auto* sp = std::get_if<SkippedPair>(&o)) {
            out.skipped.push_back(std::move(*sp));
        }
    }
    if (out.pairs.empty())
        throw ConfigError("sweep at " + std::to_string(ell) + ": every residue pair was skipped");
    out.R = gcd_lcm_set(values, Reduce::lcm);
    out.factorization = factorize(out.R);
    return out;
}

} // namespace irred
