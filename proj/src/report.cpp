#include "irred/pipeline.hpp"

#include <sstream>

namespace irred {

using nlohmann::json;

namespace {

std::string status_str(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::assumed: return "assumed";
    }
    return "unknown";
}

json factored(const BigInt& v, const Factorization& f)
{
    json out;
    out["value"] = v.get_str();
    out["factorization"] = v == 0 ? "0" : f.to_string();
    return out;
}

json str_array(const std::vector<BigInt>& v)
{
    json out = json::array();
    for (const auto& x : v)
        out.push_back(x.get_str());
    return out;
}

std::string join(const std::vector<BigInt>& v)
{
    std::string out;
    for (const auto& x : v)
        out += (out.empty() ? "" : ", ") + x.get_str();
    return out.empty() ? "(none)" : out;
}

std::string with_factors(const BigInt& v, const Factorization& f)
{
    if (v == 0)
        return "0";
    const std::string s = f.to_string();
    return s == v.get_str() ? s : v.get_str() + " = " + s;
}

} // namespace

json report_to_json(const Report& r)
{
    json out;
    out["config"] = config_to_json(r.config);

    const auto& desc = r.config.field.descriptor;
    json diag;
    diag["min_poly"] = desc.min_poly.to_string();
    diag["degree"] = desc.integral_basis.size();
    diag["discriminant"] = r.discriminant.get_str();
    diag["class_number"] = desc.class_number.get_str();
    diag["passed"] = r.diagnostics.passed();
    json checks = json::array();
    for (const auto& c : r.diagnostics.checks)
        checks.push_back({{"name", c.name}, {"status", status_str(c.status)}, {"detail", c.detail}});
    diag["checks"] = std::move(checks);
    out["field_diagnostics"] = std::move(diag);

    json units;
    units["provenance"] = to_string(r.units.provenance);
    units["log_determinant"] = r.units.log_determinant;
    json elems = json::array();
    for (const auto& u : r.units.units)
        elems.push_back(str_array(u.coords));
    units["units"] = std::move(elems);
    out["unit_basis"] = std::move(units);

    json as = json::object();
    for (const auto& [s, v] : r.bound.a_s)
        as[s.to_string()] = factored(v, factorize(v));
    out["A_s"] = std::move(as);
    out["B"] = factored(r.bound.B, r.bound.factorization);
    out["merel_bound"] = r.merel.get_str();

    json per = json::object();
    for (const auto& pp : r.per_prime) {
        json e = factored(pp.R, pp.factorization);
        e["r"] = pp.r;
        if (pp.sweep) {
            const auto& s = *pp.sweep;
            e["mode"] = "family";
            e["primes"] = s.primes;
            e["pairs_evaluated"] = s.pairs.size();
            e["partial"] = s.partial();
            json skipped = json::array();
            for (const auto& sp : s.skipped)
                skipped.push_back({{"a", sp.a}, {"b", sp.b}, {"reason", sp.reason}, {"by_rule", sp.by_rule}});
            e["skipped_pairs"] = std::move(skipped);
            if (r.options.emit_pairs) {
                json pairs = json::array();
                for (const auto& pv : s.pairs)
                    pairs.push_back({{"a", pv.a}, {"b", pv.b}, {"traces", str_array(pv.traces)}, {"value", pv.value.get_str()}});
                e["pairs"] = std::move(pairs);
            }
        } else {
            e["mode"] = "curve";
            json primes = json::array();
            for (const auto& c : pp.criteria)
                primes.push_back({{"prime", c.frobenius.prime},
                                  {"norm", c.frobenius.norm.get_str()},
                                  {"trace", c.frobenius.trace.get_str()},
                                  {"resultant", c.resultant.get_str()}});
            e["primes"] = std::move(primes);
            json skipped = json::array();
            for (const auto& sp : pp.skipped_primes)
                skipped.push_back({{"prime", sp.prime}, {"reason", sp.reason}});
            e["skipped_primes"] = std::move(skipped);
        }
        per[std::to_string(pp.ell)] = std::move(e);
    }
    out["per_prime"] = std::move(per);

    if (r.bad_primes) {
        json bad = json::array();
        for (const auto& [p, reasons] : r.bad_primes->primes) {
            json rs = json::array();
            for (auto reason : reasons)
                rs.push_back(to_string(reason));
            bad.push_back({{"p", p.get_str()}, {"reasons", std::move(rs)}});
        }
        out["bad_primes"] = std::move(bad);
        out["bad_primes_beyond_baseline"] = str_array(r.bad_primes->beyond_baseline());
    }
    out["status"] = r.options.bound_only ? "bound-only" : (r.partial() ? "partial" : "complete");
    out["hypotheses"] = r.hypotheses;
    return out;
}

std::string emit_report(const Report& r, ReportFormat format)
{
    if (format == ReportFormat::json)
        return report_to_json(r).dump(2) + "\n";

    std::ostringstream os;
    const auto& desc = r.config.field.descriptor;
    os << "field: min poly " << desc.min_poly.to_string() << ", degree " << desc.integral_basis.size()
       << ", discriminant " << r.discriminant << ", class number " << desc.class_number << "\n";
    for (const auto& c : r.diagnostics.checks)
        os << "  " << status_str(c.status) << "  " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    os << "unit basis (" << to_string(r.units.provenance) << "), log determinant " << r.units.log_determinant << "\n";
    for (const auto& u : r.units.units) {
        os << "  [";
        for (std::size_t i = 0; i < u.coords.size(); ++i)
            os << (i ? ", " : "") << u.coords[i];
        os << "]\n";
    }
    os << "A_s:\n";
    for (const auto& [s, v] : r.bound.a_s)
        os << "  " << s.to_string() << "  " << with_factors(v, factorize(v)) << "\n";
    os << "B = " << with_factors(r.bound.B, r.bound.factorization) << "\n";
    os << "merel bound = " << r.merel << "\n";
    for (const auto& pp : r.per_prime) {
        os << "auxiliary prime " << pp.ell << " (r = " << pp.r << "):\n";
        if (pp.sweep) {
            const auto& s = *pp.sweep;
            os << "  " << s.pairs.size() << " pairs evaluated, " << s.skipped.size() << " skipped"
               << (s.partial() ? " (partial)" : "") << "\n";
            for (const auto& sp : s.skipped)
                os << "  skipped (" << sp.a << "," << sp.b << "): " << sp.reason << "\n";
            if (r.options.emit_pairs)
                for (const auto& pv : s.pairs)
                    os << "  (" << pv.a << "," << pv.b << ")  " << pv.value << "\n";
        } else {
            for (const auto& c : pp.criteria)
                os << "  " << c.frobenius.prime << "  norm " << c.frobenius.norm << "  a_q " << c.frobenius.trace
                   << "  resultant " << c.resultant << "\n";
            for (const auto& sp : pp.skipped_primes)
                os << "  skipped " << sp.prime << ": " << sp.reason << "\n";
        }
        os << "  R_" << pp.ell << " = " << with_factors(pp.R, pp.factorization) << "\n";
    }
    if (r.bad_primes) {
        os << "bad primes:\n";
        for (const auto& [p, reasons] : r.bad_primes->primes) {
            os << "  " << p << ":";
            bool first = true;
            for (auto reason : reasons) {
                os << (first ? " " : "; ") << to_string(reason);
                first = false;
            }
            os << "\n";
        }
        os << "bad primes beyond the baseline: " << join(r.bad_primes->beyond_baseline()) << "\n";
    }
    os << "status: " << (r.options.bound_only ? "bound-only" : (r.partial() ? "partial" : "complete")) << "\n";
    os << "hypotheses:\n";
    for (const auto& h : r.hypotheses)
        os << "  - " << h << "\n";
    return os.str();
}

} // namespace irred
