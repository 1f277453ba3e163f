#include "irred/config.hpp"
#include "irred/errors.hpp"

#include <fstream>
#include <set>

namespace irred {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg)
{
    throw ConfigError(path + ": " + msg);
}

std::string at(const std::string& path, const std::string& key)
{
    return path.empty() ? key : path + "." + key;
}

std::string at(const std::string& path, std::size_t i)
{
    return path + "[" + std::to_string(i) + "]";
}

void reject_unknown(const json& obj, const std::string& path, std::initializer_list<const char*> allowed)
{
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed)
            ok = ok || key == a;
        if (!ok)
            fail(at(path, key), "unknown key");
    }
}

const json& object(const json& j, const std::string& path)
{
    if (!j.is_object())
        fail(path, "expected an object");
    return j;
}

const json& array(const json& j, const std::string& path)
{
    if (!j.is_array())
        fail(path, "expected an array");
    return j;
}

// Integers may be JSON numbers or decimal strings.
BigInt integer(const json& j, const std::string& path)
{
    if (j.is_number_integer())
        return j.is_number_unsigned() ? BigInt(std::to_string(j.get<std::uint64_t>()))
                                      : BigInt(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        BigInt v;
        if (v.set_str(j.get<std::string>(), 10) != 0)
            fail(path, "not an integer: \"" + j.get<std::string>() + "\"");
        return v;
    }
    fail(path, "expected an integer");
}

Rational rational(const json& j, const std::string& path)
{
    if (j.is_number_integer())
        return Rational(integer(j, path));
    if (j.is_string()) {
        Rational v;
        if (v.set_str(j.get<std::string>(), 10) != 0 || v.get_den() == 0)
            fail(path, "not a rational: \"" + j.get<std::string>() + "\"");
        v.canonicalize();
        return v;
    }
    fail(path, "expected a rational (integer or \"p/q\" string)");
}

std::uint64_t small(const json& j, const std::string& path, std::uint64_t lo, std::uint64_t hi)
{
    BigInt v = integer(j, path);
    if (v < BigInt(std::to_string(lo)) || v > BigInt(std::to_string(hi)))
        fail(path, "out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return std::stoull(v.get_str());
}

std::vector<BigInt> int_vector(const json& j, const std::string& path)
{
    std::vector<BigInt> out;
    const auto& a = array(j, path);
    for (std::size_t i = 0; i < a.size(); ++i)
        out.push_back(integer(a[i], at(path, i)));
    return out;
}

std::vector<Rational> rat_vector(const json& j, const std::string& path)
{
    std::vector<Rational> out;
    const auto& a = array(j, path);
    for (std::size_t i = 0; i < a.size(); ++i)
        out.push_back(rational(a[i], at(path, i)));
    return out;
}

AlgebraicInteger coords(const json& j, const std::string& path, std::size_t d)
{
    auto v = int_vector(j, path);
    if (v.size() != d)
        fail(path, "expected " + std::to_string(d) + " coordinates, got " + std::to_string(v.size()));
    return AlgebraicInteger{std::move(v)};
}

std::vector<BigInt> residue_chars(const json& j, const std::string& path)
{
    std::vector<BigInt> out;
    const auto& a = array(j, path);
    for (std::size_t i = 0; i < a.size(); ++i) {
        BigInt p = integer(a[i], at(path, i));
        if (p < 2 || !is_certified_prime(p))
            fail(at(path, i), "not a prime: " + p.get_str());
        out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

FieldConfig parse_field(const json& j, const std::string& path)
{
    object(j, path);
    FieldConfig f;
    if (j.contains("quadratic")) {
        reject_unknown(j, path, {"quadratic", "unit_basis", "class_number"});
        BigInt D = integer(j["quadratic"], at(path, "quadratic"));
        try {
            f.descriptor = make_quadratic_field(D);
        } catch (const InvalidInput& e) {
            fail(at(path, "quadratic"), e.what());
        }
        f.quadratic = D;
    } else {
        reject_unknown(j, path, {"min_poly", "integral_basis", "automorphisms", "unit_basis", "class_number"});
        for (const char* key : {"min_poly", "integral_basis", "automorphisms", "unit_basis", "class_number"})
            if (!j.contains(key))
                fail(at(path, key), "required for a field given by its minimal polynomial");
        auto mp = int_vector(j["min_poly"], at(path, "min_poly"));
        if (mp.size() < 2)
            fail(at(path, "min_poly"), "degree must be at least 1");
        f.descriptor.min_poly = IntPoly(mp);
        const std::size_t d = mp.size() - 1;
        for (const char* key : {"integral_basis", "automorphisms"}) {
            const std::string p = at(path, key);
            const auto& rows = array(j[key], p);
            std::vector<std::vector<Rational>> m;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                auto row = rat_vector(rows[i], at(p, i));
                if (row.size() != d)
                    fail(at(p, i), "expected " + std::to_string(d) + " power-basis coordinates");
                m.push_back(std::move(row));
            }
            if (m.size() != d)
                fail(p, "expected " + std::to_string(d) + " rows");
            (std::string(key) == "integral_basis" ? f.descriptor.integral_basis : f.descriptor.automorphisms) =
                std::move(m);
        }
    }
    const std::size_t d = f.descriptor.integral_basis.size();
    if (j.contains("class_number")) {
        f.descriptor.class_number = small(j["class_number"], at(path, "class_number"), 1, 1'000'000);
        f.descriptor.class_number_confirmed = true;
        f.class_number_given = true;
    } else {
        f.descriptor.class_number = 1;
        f.descriptor.class_number_confirmed = false;
    }
    if (j.contains("unit_basis")) {
        const std::string p = at(path, "unit_basis");
        const auto& rows = array(j["unit_basis"], p);
        std::vector<AlgebraicInteger> units;
        for (std::size_t i = 0; i < rows.size(); ++i)
            units.push_back(coords(rows[i], at(p, i), d));
        f.unit_basis = std::move(units);
    }
    return f;
}

constexpr const char* coeff_names[5] = {"a1", "a2", "a3", "a4", "a6"};

CurveConfig parse_curve(const json& j, const std::string& path, std::size_t d)
{
    object(j, path);
    reject_unknown(j, path, {"a1", "a2", "a3", "a4", "a6", "additive_residue_chars"});
    CurveConfig c;
    for (int k = 0; k < 5; ++k) {
        if (j.contains(coeff_names[k]))
            c.a[k] = coords(j[coeff_names[k]], at(path, coeff_names[k]), d);
        else
            c.a[k] = AlgebraicInteger{std::vector<BigInt>(d, 0)};
    }
    if (j.contains("additive_residue_chars"))
        c.additive_residue_chars = residue_chars(j["additive_residue_chars"], at(path, "additive_residue_chars"));
    return c;
}

CurveFamily parse_family(const json& j, const std::string& path, std::size_t d)
{
    object(j, path);
    reject_unknown(j, path,
                   {"coeff_a1", "coeff_a2", "coeff_a3", "coeff_a4", "coeff_a6", "skip", "additive_residue_chars"});
    CurveFamily f;
    for (int k = 0; k < 5; ++k) {
        const std::string key = std::string("coeff_") + coeff_names[k];
        if (!j.contains(key))
            continue;
        const std::string p = at(path, key);
        const auto& terms = array(j[key], p);
        for (std::size_t t = 0; t < terms.size(); ++t) {
            const std::string tp = at(p, t);
            const auto& term = array(terms[t], tp);
            if (term.size() != 3)
                fail(tp, "expected [i, j, [coordinates]]");
            FamilyMonomial m;
            m.i = static_cast<unsigned>(small(term[0], at(tp, 0), 0, 64));
            m.j = static_cast<unsigned>(small(term[1], at(tp, 1), 0, 64));
            m.coeff = coords(term[2], at(tp, 2), d);
            f.coeffs[k].push_back(std::move(m));
        }
    }
    if (j.contains("skip")) {
        const auto& s = j["skip"];
        if (s == "both_zero")
            f.skip = SkipRule::both_zero;
        else if (s == "shared_factor")
            f.skip = SkipRule::shared_factor;
        else
            fail(at(path, "skip"), "expected \"both_zero\" or \"shared_factor\"");
    }
    if (j.contains("additive_residue_chars"))
        f.additive_residue_chars = residue_chars(j["additive_residue_chars"], at(path, "additive_residue_chars"));
    return f;
}

json int_array(const std::vector<BigInt>& v)
{
    json out = json::array();
    for (const auto& x : v)
        out.push_back(x.get_str());
    return out;
}

json rat_matrix(const std::vector<std::vector<Rational>>& m)
{
    json out = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& x : row)
            r.push_back(x.get_str());
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace

RunConfig parse_config(const json& doc)
{
    object(doc, "config");
    reject_unknown(doc, "", {"field", "curve", "family", "aux_primes", "r_overrides", "count_cap"});
    if (!doc.contains("field"))
        fail("field", "required");
    RunConfig c;
    c.field = parse_field(doc["field"], "field");
    const std::size_t d = c.field.descriptor.integral_basis.size();

    if (doc.contains("curve") && doc.contains("family"))
        fail("curve", "give either a curve or a family, not both");
    if (doc.contains("curve"))
        c.curve = parse_curve(doc["curve"], "curve", d);
    if (doc.contains("family"))
        c.family = parse_family(doc["family"], "family", d);

    if (doc.contains("aux_primes")) {
        const auto& a = array(doc["aux_primes"], "aux_primes");
        std::set<std::uint64_t> seen;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const std::string p = at("aux_primes", i);
            std::uint64_t ell = small(a[i], p, 2, std::uint64_t{1} << 62);
            if (!is_certified_prime(BigInt(std::to_string(ell))))
                fail(p, std::to_string(ell) + " is not prime");
            if (!seen.insert(ell).second)
                fail(p, "duplicate auxiliary prime " + std::to_string(ell));
            c.aux_primes.push_back(ell);
        }
    }
    if (doc.contains("r_overrides")) {
        const auto& o = object(doc["r_overrides"], "r_overrides");
        for (const auto& [key, value] : o.items()) {
            const std::string p = at("r_overrides", key);
            std::uint64_t ell = small(json(key), p, 2, std::uint64_t{1} << 62);
            if (std::find(c.aux_primes.begin(), c.aux_primes.end(), ell) == c.aux_primes.end())
                fail(p, "not one of aux_primes");
            c.r_overrides[ell] = small(value, p, 1, 1'000'000);
        }
    }
    if (doc.contains("count_cap"))
        c.count_cap = small(doc["count_cap"], "count_cap", 1, std::uint64_t{1} << 40);
    return c;
}

RunConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError(path.string() + ": cannot open");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    return parse_config(doc);
}

json config_to_json(const RunConfig& c)
{
    json out;
    json field;
    const auto& desc = c.field.descriptor;
    if (c.field.quadratic) {
        field["quadratic"] = c.field.quadratic->get_str();
    } else {
        std::vector<BigInt> mp;
        for (int i = 0; i <= desc.min_poly.degree(); ++i)
            mp.push_back(desc.min_poly.coeff(i));
        field["min_poly"] = int_array(mp);
        field["integral_basis"] = rat_matrix(desc.integral_basis);
        field["automorphisms"] = rat_matrix(desc.automorphisms);
    }
    if (c.field.class_number_given)
        field["class_number"] = desc.class_number.get_ui();
    if (c.field.unit_basis) {
        json units = json::array();
        for (const auto& u : *c.field.unit_basis)
            units.push_back(int_array(u.coords));
        field["unit_basis"] = std::move(units);
    }
    out["field"] = std::move(field);

    if (c.curve) {
        json curve;
        for (int k = 0; k < 5; ++k)
            curve[coeff_names[k]] = int_array(c.curve->a[k].coords);
        curve["additive_residue_chars"] = int_array(c.curve->additive_residue_chars);
        out["curve"] = std::move(curve);
    }
    if (c.family) {
        json fam;
        for (int k = 0; k < 5; ++k) {
            json terms = json::array();
            for (const auto& m : c.family->coeffs[k])
                terms.push_back(json::array({m.i, m.j, int_array(m.coeff.coords)}));
            fam[std::string("coeff_") + coeff_names[k]] = std::move(terms);
        }
        fam["skip"] = to_string(c.family->skip);
        fam["additive_residue_chars"] = int_array(c.family->additive_residue_chars);
        out["family"] = std::move(fam);
    }
    out["aux_primes"] = c.aux_primes;
    json r = json::object();
    for (const auto& [ell, v] : c.r_overrides)
        r[std::to_string(ell)] = v;
    out["r_overrides"] = std::move(r);
    out["count_cap"] = c.count_cap;
    return out;
}

} // namespace irred
