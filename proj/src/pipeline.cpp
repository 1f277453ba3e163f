#include "irred/pipeline.hpp"
#include "irred/errors.hpp"
#include "irred/primes.hpp"

namespace irred {

bool Report::partial() const
{
    return std::any_of(per_prime.begin(), per_prime.end(),
                       [](const PerPrimeResult& p) { return p.sweep && p.sweep->partial(); });
}

namespace {

std::string ell_str(std::uint64_t ell) { return std::to_string(ell); }

PerPrimeResult fixed_curve_prime(const NumberField& K, const WeierstrassCurve& E, std::uint64_t ell, unsigned long r,
                                 std::uint64_t cap)
{
    PerPrimeResult out;
    out.ell = ell;
    out.r = r;
    for (const auto& q : split_prime(K, ell)) {
        try {
            out.criteria.push_back(resultant_criterion(frobenius_data(E, q, cap), r));
        } catch (const BadReduction&) {
            out.skipped_primes.push_back({q.label(), "bad reduction of the given model"});
        }
    }
    if (out.criteria.empty())
        throw ConfigError("aux_primes: the curve has bad reduction at every prime above " + ell_str(ell));
    out.R = evidence_from_criteria(ell, out.criteria).value;
    if (out.R != 0)
        out.factorization = factorize(out.R);
    return out;
}

void add_factorization_notes(const Factorization& f, const std::string& what, std::vector<std::string>& h)
{
    for (const auto& p : f.probable)
        h.push_back("factor " + p.get_str() + " of " + what + " is a probable prime (64 Miller-Rabin rounds), not certified");
}

} // namespace

Report run_pipeline(const RunConfig& config, const RunOptions& options)
{
    Report rep;
    rep.config = config;
    rep.options = options;
    auto& hyp = rep.hypotheses;

    const FieldDescriptor& desc = config.field.descriptor;
    rep.diagnostics = verify_field(desc);
    if (!rep.diagnostics.passed())
        throw VerificationError("field verification failed: " + rep.diagnostics.failure_summary());
    const NumberField K(desc);
    rep.discriminant = K.discriminant();
    for (const auto& c : rep.diagnostics.checks)
        if (c.status == CheckStatus::assumed)
            hyp.push_back("field check " + c.name + " assumed, not verified: " + c.detail);

    const std::string h = desc.class_number.get_str();
    if (config.field.class_number_given)
        hyp.push_back("class number h = " + h + " taken from the config, not computed");
    else
        hyp.push_back("class number h = 1 assumed: none was supplied and it is not computed");

    if (config.field.unit_basis) {
        try {
            rep.units = verify_unit_basis(K, *config.field.unit_basis, UnitProvenance::user_supplied);
        } catch (const InvalidInput& e) {
            throw ConfigError(std::string("field.unit_basis: ") + e.what());
        }
        hyp.push_back("unit basis user-supplied: independence certified, fundamentality not checked, so B may be "
                      "a multiple of the minimal value");
    } else if (config.field.quadratic) {
        rep.units = verify_unit_basis(K, {fundamental_unit_quadratic(*config.field.quadratic)},
                                      UnitProvenance::computed);
    } else {
        throw ConfigError("field.unit_basis: required for a field given by its minimal polynomial");
    }

    rep.bound = compute_B(K, rep.units);
    add_factorization_notes(rep.bound.factorization, "B", hyp);
    rep.merel = merel_bound(K.degree(), desc.class_number.get_ui());

    hyp.push_back("E is assumed semistable at every prime of K above p; primes of additive reduction must be "
                  "declared through additive_residue_chars");
    if (options.bound_only) {
        hyp.push_back("bound-only run: no auxiliary primes were evaluated; for p not dividing B, unramified in K, "
                      "with p >= 17 or p = 11, reducibility forces p < merel_bound");
        return rep;
    }

    if (!config.curve && !config.family)
        throw ConfigError("curve: a curve or a family is required unless --bound-only is given");
    if (config.aux_primes.empty())
        throw ConfigError("aux_primes: at least one auxiliary prime is required unless --bound-only is given");

    std::optional<WeierstrassCurve> E;
    if (config.curve) {
        try {
            E.emplace(K, config.curve->a);
        } catch (const InvalidInput& e) {
            throw ConfigError(std::string("curve: ") + e.what());
        }
    }

    std::vector<AuxiliaryEvidence> evidence;
    for (std::uint64_t ell : config.aux_primes) {
        auto it = config.r_overrides.find(ell);
        const unsigned long r = it != config.r_overrides.end() ? it->second : desc.class_number.get_ui();
        hyp.push_back("r = " + std::to_string(r) + " at ell = " + ell_str(ell) +
                      (it != config.r_overrides.end() ? " (override)" : " (class number)") +
                      ": requires q^r principal for every prime q above ell");
        PerPrimeResult pp;
        try {
            if (E) {
                pp = fixed_curve_prime(K, *E, ell, r, config.count_cap);
            } else {
                SweepResult s = sweep_prime(K, *config.family, ell, r, options.jobs, config.count_cap);
                pp.ell = ell;
                pp.r = r;
                pp.R = s.R;
                pp.factorization = s.factorization;
                pp.sweep = std::move(s);
            }
        } catch (const UnsupportedPrime& e) {
            throw ConfigError("aux_primes: " + ell_str(ell) + ": " + e.what());
        } catch (const ConfigError& e) {
            throw ConfigError(std::string("aux_primes: ") + e.what());
        }
        for (const auto& sp : pp.skipped_primes)
            hyp.push_back("model has bad reduction at " + sp.prime + "; that prime was not used");
        if (pp.sweep) {
            std::size_t by_rule = 0, bad = 0;
            for (const auto& s : pp.sweep->skipped)
                (s.by_rule ? by_rule : bad)++;
            if (by_rule)
                hyp.push_back("sweep at ell = " + ell_str(ell) + ": " + std::to_string(by_rule) +
                              " residue pairs excluded by skip rule " + to_string(config.family->skip));
            if (bad)
                hyp.push_back("sweep at ell = " + ell_str(ell) + " is partial: " + std::to_string(bad) +
                              " residue pairs skipped for bad model reduction are not covered and must be ruled "
                              "out separately");
        }
        add_factorization_notes(pp.factorization, "R_" + ell_str(ell), hyp);
        evidence.push_back({ell, pp.R});
        rep.per_prime.push_back(std::move(pp));
    }

    const auto& additive = config.curve ? config.curve->additive_residue_chars : config.family->additive_residue_chars;
    rep.bad_primes = assemble_bad_primes(ramified_primes(K), rep.bound.B, evidence, additive);
    return rep;
}

} // namespace irred
