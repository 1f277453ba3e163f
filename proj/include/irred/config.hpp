#pragma once

#include "irred/curves.hpp"
#include "irred/family_sweep.hpp"
#include "irred/number_field.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <optional>

namespace irred {

struct FieldConfig {
    std::optional<BigInt> quadratic; // D for Q(sqrt D)
    FieldDescriptor descriptor;
    std::optional<std::vector<AlgebraicInteger>> unit_basis;
    bool class_number_given = false;
};

struct CurveConfig {
    std::array<AlgebraicInteger, 5> a; // a1, a2, a3, a4, a6 over the integral basis
    std::vector<BigInt> additive_residue_chars;
};

struct RunConfig {
    FieldConfig field;
    std::optional<CurveConfig> curve;
    std::optional<CurveFamily> family;
    std::vector<std::uint64_t> aux_primes;
    std::map<std::uint64_t, unsigned long> r_overrides;
    std::uint64_t count_cap = default_count_cap;
};

/// Validates the document; errors are ConfigError with a JSON-pointer-like
/// path ("field.integral_basis[1][0]: ...").
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::filesystem::path& path);

/// Canonical form of a parsed config. parse_config(config_to_json(c)) gives
/// back c.
nlohmann::json config_to_json(const RunConfig& c);

} // namespace irred
