#include "irred/primes.hpp"
#include "irred/errors.hpp"

#include <sstream>

namespace irred {

std::string PrimeIdeal::label() const
{
    std::ostringstream os;
    os << '(' << ell << ", ";
    bool first = true;
    for (int i = fp_poly::degree(local_generator); i >= 0; --i) {
        std::uint64_t c = local_generator[i];
        if (c == 0)
            continue;
        if (!first)
            os << " + ";
        first = false;
        if (i == 0 || c != 1)
            os << c;
        if (i > 0)
            os << (c != 1 ? "*t" : "t");
        if (i > 1)
            os << '^' << i;
    }
    os << ')';
    return os.str();
}

std::vector<PrimeIdeal> split_prime(const NumberField& K, std::uint64_t ell)
{
    const BigInt ell_z = static_cast<unsigned long>(ell);
    if (ell < 2 || !is_probable_prime(ell_z))
        throw InvalidInput("split_prime: " + ell_z.get_str() + " is not prime");
    if (mpz_divisible_ui_p(K.index().get_mpz_t(), ell))
        throw UnsupportedPrime("prime " + ell_z.get_str() + " divides the index [O_K : Z[theta]] = " +
                               K.index().get_str() + "; choose another auxiliary prime");

    const PrimeField F(ell);
    const unsigned d = K.degree();
    const auto& W = K.basis_matrix();

    std::vector<PrimeIdeal> out;
    for (auto& [g, e] : fp_poly::factor(F, fp_poly::from_int_poly(F, K.descriptor().min_poly))) {
        // g(theta) in O_K
        AlgebraicInteger gt = K.zero();
        AlgebraicInteger power = K.one();
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (g[i] != 0)
                gt = K.add(gt, K.scale(power, BigInt(static_cast<unsigned long>(g[i]))));
            power = K.mul(power, K.theta());
        }
        IdealHNF ideal = ideal_from_generators(K, {K.from_int(ell_z), gt});

        ResidueField rf(ell, g);
        std::vector<ResidueFieldElement> images;
        for (unsigned i = 0; i < d; ++i) {
            FpPoly img(d, 0);
            for (unsigned j = 0; j < d; ++j) {
                const Rational& w = W[i][j];
                std::uint64_t num = F.reduce(w.get_num());
                std::uint64_t den = F.reduce(w.get_den());
                img[j] = F.mul(num, F.inv(den));
            }
            fp_poly::trim(img);
            images.push_back(rf.from_poly(img));
        }
        const unsigned f = static_cast<unsigned>(fp_poly::degree(g));
        PrimeIdeal P{ell, g, f, e, std::move(ideal), std::move(rf), std::move(images)};
        if (P.ideal.norm() != P.norm())
            throw DegeneracyError("split_prime: ideal norm mismatch for " + P.label());
        out.push_back(std::move(P));
    }
    return out;
}

ResidueFieldElement residue_map(const AlgebraicInteger& a, const PrimeIdeal& q)
{
    const ResidueField& rf = q.residue_field;
    if (a.coords.size() != q.basis_images.size())
        throw InvalidInput("residue_map: dimension mismatch");
    const PrimeField& F = rf.prime_field();
    ResidueFieldElement acc = rf.zero();
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        std::uint64_t c = F.reduce(a.coords[i]);
        if (c != 0)
            acc = rf.add(acc, rf.scale(q.basis_images[i], c));
    }
    return acc;
}

std::vector<BigInt> ramified_primes(const NumberField& K)
{
    std::vector<BigInt> out;
    for (const auto& [p, e] : factorize(K.discriminant()).primes)
        out.push_back(p);
    return out;
}

} // namespace irred
