#include "irred/number_field.hpp"
#include "irred/detail/qpoly.hpp"
#include "irred/errors.hpp"
#include "irred/real_roots.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace irred {

using qpoly::QPoly;

namespace {

using RatMatrix = std::vector<std::vector<Rational>>;

std::optional<RatMatrix> invert(RatMatrix m)
{
    const std::size_t n = m.size();
    RatMatrix inv(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0)
            ++piv;
        if (piv == n)
            return std::nullopt;
        std::swap(m[c], m[piv]);
        std::swap(inv[c], inv[piv]);
        Rational scale = 1 / m[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            m[c][j] *= scale;
            inv[c][j] *= scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0)
                continue;
            Rational f = m[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

Rational rat_determinant(RatMatrix m)
{
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != c) {
            std::swap(m[c], m[piv]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0)
                continue;
            Rational f = m[r][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j)
                m[r][j] -= f * m[c][j];
        }
    }
    return det;
}

QPoly padded(const std::vector<Rational>& v)
{
    QPoly p(v.begin(), v.end());
    qpoly::trim(p);
    return p;
}

// Power-basis vector (length d) times the inverse basis matrix; nullopt if
// any coordinate is non-integral.
std::optional<std::vector<BigInt>> to_basis_coords(const QPoly& p, const RatMatrix& winv, unsigned d)
{
    std::vector<BigInt> out(d, 0);
    for (unsigned i = 0; i < d; ++i) {
        Rational acc = 0;
        for (unsigned j = 0; j < d && j < p.size(); ++j)
            acc += p[j] * winv[j][i];
        if (acc.get_den() != 1)
            return std::nullopt;
        out[i] = acc.get_num();
    }
    return out;
}

std::vector<BigInt> divisors(const BigInt& n)
{
    std::vector<BigInt> divs{1};
    if (n == 0)
        return divs;
    for (const auto& [p, e] : factorize(n).primes) {
        std::size_t base = divs.size();
        BigInt pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

// Irreducibility over Q of a monic integer polynomial of degree <= 4.
bool monic_irreducible_small(const IntPoly& f)
{
    const int d = f.degree();
    if (d <= 1)
        return d == 1;
    const BigInt a0 = f.coeff(0);
    if (a0 == 0)
        return false;
    for (const auto& c : divisors(abs(a0))) {
        if (f.eval(c) == 0 || f.eval(BigInt(-c)) == 0)
            return false;
    }
    if (d < 4)
        return true;
    // (x^2 + b x + c)(x^2 + b' x + c')
    const BigInt a1 = f.coeff(1), a2 = f.coeff(2), a3 = f.coeff(3);
    for (const auto& dv : divisors(abs(a0))) {
        for (int sign : {1, -1}) {
            BigInt c = sign * dv;
            BigInt cp = a0 / c;
            // b^2 - a3 b + (a2 - c - c') = 0
            BigInt disc = a3 * a3 - 4 * (a2 - c - cp);
            if (disc < 0)
                continue;
            BigInt root = sqrt(disc);
            if (root * root != disc)
                continue;
            for (const BigInt& num : {BigInt(a3 + root), BigInt(a3 - root)}) {
                if (!mpz_even_p(num.get_mpz_t()))
                    continue;
                BigInt b = num / 2;
                BigInt bp = a3 - b;
                if (b * cp + bp * c == a1)
                    return false;
            }
        }
    }
    return true;
}

struct Tables {
    RatMatrix winv;
    std::vector<std::vector<std::vector<BigInt>>> mult;
    std::vector<std::vector<std::vector<BigInt>>> aut;
    BigInt discriminant;
    BigInt index;
};

void add_check(FieldDiagnostics& diag, std::string name, bool ok, std::string detail = {})
{
    diag.checks.push_back({std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)});
}

std::string poly_repr(const QPoly& p)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < p.size(); ++i)
        os << (i ? "," : "") << p[i].get_str();
    os << ']';
    return os.str();
}

std::optional<Tables> analyze(const FieldDescriptor& desc, FieldDiagnostics& diag)
{
    const IntPoly& f = desc.min_poly;
    const int deg = f.degree();

    // structure
    {
        std::string why;
        if (deg < 1)
            why = "minimal polynomial must have positive degree";
        else if (f.leading() != 1)
            why = "minimal polynomial must be monic";
        else if (desc.integral_basis.size() != static_cast<std::size_t>(deg))
            why = "integral basis must have " + std::to_string(deg) + " elements";
        else if (desc.class_number < 1)
            why = "class number must be a positive integer";
        else {
            for (std::size_t i = 0; i < desc.integral_basis.size(); ++i)
                if (desc.integral_basis[i].size() != static_cast<std::size_t>(deg))
                    why = "integral basis element " + std::to_string(i) + " has wrong length";
            for (std::size_t k = 0; k < desc.automorphisms.size(); ++k)
                if (desc.automorphisms[k].size() > static_cast<std::size_t>(deg))
                    why = "automorphism " + std::to_string(k) + " has degree >= d";
        }
        add_check(diag, "structure", why.empty(), why);
        if (!why.empty())
            return std::nullopt;
    }
    const unsigned d = static_cast<unsigned>(deg);
    const QPoly qf = qpoly::from_int(f);

    // irreducibility and total reality
    if (d <= 4) {
        add_check(diag, "irreducible", monic_irreducible_small(f));
    } else {
        diag.checks.push_back({"irreducible", CheckStatus::assumed,
                               "degree > 4: irreducibility taken from the configuration"});
    }
    const int real_roots = count_real_roots(f);
    add_check(diag, "totally_real", real_roots == deg,
              std::to_string(real_roots) + " real roots for degree " + std::to_string(deg));

    bool first_one = desc.integral_basis[0][0] == 1;
    for (unsigned j = 1; j < d; ++j)
        first_one = first_one && desc.integral_basis[0][j] == 0;
    add_check(diag, "first_basis_element_is_one", first_one);

    Tables t;
    auto winv = invert(desc.integral_basis);
    if (!winv) {
        add_check(diag, "basis_nonsingular", false, "integral basis is linearly dependent");
        return std::nullopt;
    }
    add_check(diag, "basis_nonsingular", true);
    t.winv = *winv;

    bool power_integral = true;
    for (const auto& row : t.winv)
        for (const auto& x : row)
            power_integral = power_integral && x.get_den() == 1;
    add_check(diag, "order_contains_theta", power_integral,
              power_integral ? "" : "theta^j is not an integral combination of the basis");

    bool mult_ok = true;
    std::string mult_detail;
    t.mult.assign(d, std::vector<std::vector<BigInt>>(d));
    for (unsigned i = 0; i < d && mult_ok; ++i) {
        for (unsigned j = 0; j < d && mult_ok; ++j) {
            QPoly prod = qpoly::rem(qpoly::mul(padded(desc.integral_basis[i]), padded(desc.integral_basis[j])), qf);
            auto coords = to_basis_coords(prod, t.winv, d);
            if (!coords) {
                mult_ok = false;
                mult_detail = "omega_" + std::to_string(i + 1) + " * omega_" + std::to_string(j + 1) +
                              " is not integral over the basis";
            } else {
                t.mult[i][j] = std::move(*coords);
            }
        }
    }
    add_check(diag, "multiplication_table_integral", mult_ok, mult_detail);
    if (!power_integral || !mult_ok)
        return std::nullopt;

    // Automorphisms
    std::vector<QPoly> auts;
    for (const auto& a : desc.automorphisms)
        auts.push_back(padded(a));

    bool roots_ok = true;
    std::string roots_detail;
    for (std::size_t k = 0; k < auts.size(); ++k) {
        if (!qpoly::compose_mod(qf, auts[k], qf).empty()) {
            roots_ok = false;
            roots_detail = "automorphism " + std::to_string(k) + " does not map theta to a root";
            break;
        }
    }
    add_check(diag, "automorphisms_are_roots", roots_ok, roots_detail);

    bool distinct = true;
    for (std::size_t i = 0; i < auts.size(); ++i)
        for (std::size_t j = i + 1; j < auts.size(); ++j)
            if (auts[i] == auts[j]) {
                distinct = false;
            }
    add_check(diag, "automorphisms_distinct", distinct);

    add_check(diag, "automorphism_count", auts.size() == d,
              std::to_string(auts.size()) + " automorphisms for degree " + std::to_string(d));

    const QPoly identity = padded(d > 1 ? std::vector<Rational>{0, 1} : std::vector<Rational>{0});
    bool has_identity = false;
    for (const auto& a : auts)
        has_identity = has_identity || (d > 1 ? a == identity : true);
    add_check(diag, "identity_present", has_identity);

    bool closed = roots_ok;
    std::string closure_detail;
    if (roots_ok) {
        for (std::size_t i = 0; i < auts.size() && closed; ++i) {
            for (std::size_t j = 0; j < auts.size() && closed; ++j) {
                // (tau_i o tau_j)(theta) = u_j(u_i(theta))
                QPoly comp = qpoly::compose_mod(auts[j], auts[i], qf);
                if (std::find(auts.begin(), auts.end(), comp) == auts.end()) {
                    closed = false;
                    closure_detail = "composition of automorphisms " + std::to_string(i) + " and " +
                                     std::to_string(j) + " gives " + poly_repr(comp) + ", not in the list";
                }
            }
        }
    } else {
        closure_detail = "skipped: automorphisms are not all roots";
    }
    add_check(diag, "closed_under_composition", closed, closure_detail);

    bool preserve = roots_ok;
    if (roots_ok) {
        t.aut.assign(auts.size(), std::vector<std::vector<BigInt>>(d));
        for (std::size_t k = 0; k < auts.size() && preserve; ++k) {
            for (unsigned i = 0; i < d && preserve; ++i) {
                QPoly img = qpoly::compose_mod(padded(desc.integral_basis[i]), auts[k], qf);
                auto coords = to_basis_coords(img, t.winv, d);
                if (!coords)
                    preserve = false;
                else
                    t.aut[k][i] = std::move(*coords);
            }
        }
    }
    add_check(diag, "automorphisms_preserve_order", preserve);

    if (!desc.basis_computed)
        diag.checks.push_back({"integral_basis_maximal", CheckStatus::assumed,
                               "maximality of the configured integral basis is not verified"});

    // discriminant = det(Tr(omega_i omega_j)), Tr(x) = trace of multiplication by x
    std::vector<BigInt> basis_trace(d, 0);
    for (unsigned k = 0; k < d; ++k)
        for (unsigned j = 0; j < d; ++j)
            basis_trace[k] += t.mult[k][j][j];
    IntMatrix tr(d, std::vector<BigInt>(d, 0));
    for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j)
            for (unsigned k = 0; k < d; ++k)
                tr[i][j] += t.mult[i][j][k] * basis_trace[k];
    t.discriminant = determinant(tr);
    Rational det_w = rat_determinant(desc.integral_basis);
    Rational idx = 1 / abs(det_w);
    t.index = idx.get_num();
    return t;
}

} // namespace

bool is_squarefree(const BigInt& n)
{
    if (n == 0)
        return false;
    for (const auto& [p, e] : factorize(n).primes)
        if (e > 1)
            return false;
    return true;
}

FieldDescriptor make_quadratic_field(const BigInt& D, const BigInt& class_number)
{
    if (D <= 1)
        throw InvalidInput("make_quadratic_field: D must exceed 1, got " + D.get_str());
    if (!is_squarefree(D))
        throw InvalidInput("make_quadratic_field: D = " + D.get_str() + " is not squarefree");
    FieldDescriptor desc;
    desc.min_poly = IntPoly(std::vector<BigInt>{BigInt(-D), 0, 1});
    desc.integral_basis.push_back({1, 0});
    if (D % 4 == 1)
        desc.integral_basis.push_back({Rational(1, 2), Rational(1, 2)});
    else
        desc.integral_basis.push_back({0, 1});
    desc.automorphisms = {{0, 1}, {0, -1}};
    desc.class_number = class_number;
    desc.basis_computed = true;
    return desc;
}

bool FieldDiagnostics::passed() const
{
    return std::none_of(checks.begin(), checks.end(),
                        [](const FieldCheck& c) { return c.status == CheckStatus::fail; });
}

std::string FieldDiagnostics::failure_summary() const
{
    std::string out;
    for (const auto& c : checks) {
        if (c.status != CheckStatus::fail)
            continue;
        if (!out.empty())
            out += "; ";
        out += c.name;
        if (!c.detail.empty())
            out += " (" + c.detail + ")";
    }
    return out;
}

FieldDiagnostics verify_field(const FieldDescriptor& desc)
{
    FieldDiagnostics diag;
    analyze(desc, diag);
    return diag;
}

NumberField::NumberField(FieldDescriptor desc) : desc_(std::move(desc))
{
    auto tables = analyze(desc_, diagnostics_);
    if (!tables || !diagnostics_.passed())
        throw VerificationError("field verification failed: " + diagnostics_.failure_summary());
    degree_ = static_cast<unsigned>(desc_.min_poly.degree());
    mult_ = std::move(tables->mult);
    aut_matrices_ = std::move(tables->aut);
    discriminant_ = tables->discriminant;
    index_ = tables->index;
    power_to_basis_.assign(degree_, std::vector<BigInt>(degree_));
    for (unsigned j = 0; j < degree_; ++j)
        for (unsigned i = 0; i < degree_; ++i)
            power_to_basis_[j][i] = tables->winv[j][i].get_num();
    theta_ = degree_ > 1 ? AlgebraicInteger{power_to_basis_[1]}
                         : from_int(BigInt(-desc_.min_poly.coeff(0)));
}

void NumberField::check_dim(const AlgebraicInteger& a) const
{
    if (a.coords.size() != degree_)
        throw InvalidInput("algebraic integer has " + std::to_string(a.coords.size()) +
                           " coordinates, field degree is " + std::to_string(degree_));
}

AlgebraicInteger NumberField::zero() const { return {std::vector<BigInt>(degree_, 0)}; }

AlgebraicInteger NumberField::one() const { return from_int(1); }

AlgebraicInteger NumberField::from_int(const BigInt& n) const
{
    AlgebraicInteger a = zero();
    a.coords[0] = n;
    return a;
}

AlgebraicInteger NumberField::element(std::vector<BigInt> coords) const
{
    AlgebraicInteger a{std::move(coords)};
    check_dim(a);
    return a;
}

AlgebraicInteger NumberField::basis_element(unsigned i) const
{
    AlgebraicInteger a = zero();
    a.coords.at(i) = 1;
    return a;
}

bool NumberField::is_zero(const AlgebraicInteger& a) const
{
    return std::all_of(a.coords.begin(), a.coords.end(), [](const BigInt& c) { return c == 0; });
}

AlgebraicInteger NumberField::add(const AlgebraicInteger& a, const AlgebraicInteger& b) const
{
    check_dim(a);
    check_dim(b);
    AlgebraicInteger r = a;
    for (unsigned i = 0; i < degree_; ++i)
        r.coords[i] += b.coords[i];
    return r;
}

AlgebraicInteger NumberField::sub(const AlgebraicInteger& a, const AlgebraicInteger& b) const
{
    check_dim(a);
    check_dim(b);
    AlgebraicInteger r = a;
    for (unsigned i = 0; i < degree_; ++i)
        r.coords[i] -= b.coords[i];
    return r;
}

AlgebraicInteger NumberField::neg(const AlgebraicInteger& a) const { return scale(a, -1); }

AlgebraicInteger NumberField::scale(const AlgebraicInteger& a, const BigInt& c) const
{
    check_dim(a);
    AlgebraicInteger r = a;
    for (auto& x : r.coords)
        x *= c;
    return r;
}

AlgebraicInteger NumberField::mul(const AlgebraicInteger& a, const AlgebraicInteger& b) const
{
    check_dim(a);
    check_dim(b);
    AlgebraicInteger r = zero();
    BigInt t;
    for (unsigned i = 0; i < degree_; ++i) {
        if (a.coords[i] == 0)
            continue;
        for (unsigned j = 0; j < degree_; ++j) {
            if (b.coords[j] == 0)
                continue;
            t = a.coords[i] * b.coords[j];
            const auto& m = mult_[i][j];
            for (unsigned k = 0; k < degree_; ++k)
                if (m[k] != 0)
                    r.coords[k] += t * m[k];
        }
    }
    return r;
}

AlgebraicInteger NumberField::pow(const AlgebraicInteger& a, unsigned long e) const
{
    constexpr std::size_t digit_cap = 1'000'000;
    auto guard = [&](const AlgebraicInteger& x) {
        for (const auto& c : x.coords)
            if (mpz_sizeinbase(c.get_mpz_t(), 10) > digit_cap)
                throw SizeCapExceeded("element power exceeds 10^6 decimal digits");
    };
    AlgebraicInteger result = one();
    AlgebraicInteger base = a;
    while (e) {
        if (e & 1) {
            result = mul(result, base);
            guard(result);
        }
        e >>= 1;
        if (e) {
            base = mul(base, base);
            guard(base);
        }
    }
    return result;
}

AlgebraicInteger NumberField::apply_automorphism(std::size_t k, const AlgebraicInteger& a) const
{
    check_dim(a);
    const auto& m = aut_matrices_.at(k);
    AlgebraicInteger r = zero();
    for (unsigned i = 0; i < degree_; ++i) {
        if (a.coords[i] == 0)
            continue;
        for (unsigned j = 0; j < degree_; ++j)
            r.coords[j] += a.coords[i] * m[i][j];
    }
    return r;
}

IntMatrix NumberField::multiplication_matrix(const AlgebraicInteger& a) const
{
    IntMatrix m(degree_, std::vector<BigInt>(degree_, 0));
    for (unsigned j = 0; j < degree_; ++j) {
        AlgebraicInteger col = mul(a, basis_element(j));
        for (unsigned i = 0; i < degree_; ++i)
            m[i][j] = col.coords[i];
    }
    return m;
}

BigInt NumberField::norm(const AlgebraicInteger& a) const { return determinant(multiplication_matrix(a)); }

BigInt NumberField::trace(const AlgebraicInteger& a) const
{
    IntMatrix m = multiplication_matrix(a);
    BigInt t = 0;
    for (unsigned i = 0; i < degree_; ++i)
        t += m[i][i];
    return t;
}

std::vector<Rational> NumberField::to_power_basis(const AlgebraicInteger& a) const
{
    check_dim(a);
    std::vector<Rational> v(degree_, 0);
    for (unsigned i = 0; i < degree_; ++i)
        for (unsigned j = 0; j < degree_; ++j)
            v[j] += Rational(a.coords[i]) * desc_.integral_basis[i][j];
    return v;
}

AlgebraicInteger NumberField::from_power_basis(const std::vector<Rational>& v) const
{
    if (v.size() > degree_)
        throw InvalidInput("from_power_basis: vector longer than the degree");
    std::vector<Rational> acc(degree_, 0);
    for (unsigned j = 0; j < v.size(); ++j)
        for (unsigned i = 0; i < degree_; ++i)
            acc[i] += v[j] * power_to_basis_[j][i];
    AlgebraicInteger r = zero();
    for (unsigned i = 0; i < degree_; ++i) {
        if (acc[i].get_den() != 1)
            throw InvalidInput("from_power_basis: element is not in O_K");
        r.coords[i] = acc[i].get_num();
    }
    return r;
}

std::string NumberField::to_string(const AlgebraicInteger& a) const
{
    auto v = to_power_basis(a);
    std::string out;
    for (unsigned j = 0; j < degree_; ++j) {
        if (v[j] == 0)
            continue;
        if (!out.empty())
            out += sgn(v[j]) < 0 ? " - " : " + ";
        else if (sgn(v[j]) < 0)
            out += "-";
        Rational mag = abs(v[j]);
        if (j == 0)
            out += mag.get_str();
        else {
            if (mag != 1)
                out += mag.get_str() + "*";
            out += "t";
            if (j > 1)
                out += "^" + std::to_string(j);
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace irred
