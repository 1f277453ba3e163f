#pragma once

#include "irred/config.hpp"
#include "irred/irreducibility.hpp"
#include "irred/signature_bound.hpp"
#include "irred/units.hpp"

namespace irred {

struct RunOptions {
    unsigned jobs = 1;
    bool emit_pairs = false;
    bool bound_only = false;
};

/// A prime above ell that could not be used for a fixed curve.
struct SkippedPrime {
    std::string prime;
    std::string reason;
};

struct PerPrimeResult {
    std::uint64_t ell = 0;
    unsigned long r = 1;
    BigInt R;
    Factorization factorization;
    std::vector<CriterionResult> criteria; // fixed curve
    std::vector<SkippedPrime> skipped_primes;
    std::optional<SweepResult> sweep;      // family
};

struct Report {
    RunConfig config;
    RunOptions options;
    FieldDiagnostics diagnostics;
    BigInt discriminant;
    UnitBasis units;
    SignatureBound bound;
    BigInt merel;
    std::vector<PerPrimeResult> per_prime; // in aux_primes order
    std::optional<BadPrimeSet> bad_primes; // absent in bound-only runs
    std::vector<std::string> hypotheses;

    /// A sweep dropped pairs for bad model reduction.
    bool partial() const;
};

/// verify_field -> units -> compute_B -> merel_bound -> criteria or sweep ->
/// assemble_bad_primes. Every assumption made on the way is recorded in
/// Report::hypotheses.
Report run_pipeline(const RunConfig& config, const RunOptions& options);

enum class ReportFormat { json, text };

nlohmann::json report_to_json(const Report& r);
/// Byte-stable for a given config, independent of RunOptions::jobs.
std::string emit_report(const Report& r, ReportFormat format);

} // namespace irred
