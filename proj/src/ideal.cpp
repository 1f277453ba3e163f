#include "irred/ideal.hpp"
#include "irred/errors.hpp"

#include <algorithm>

namespace irred {

IntMatrix hnf_columns(const IntMatrix& generators)
{
    const std::size_t d = generators.size();
    if (d == 0)
        return {};
    const std::size_t k = generators[0].size();
    std::vector<std::vector<BigInt>> work; // each entry is a column vector of length d
    for (std::size_t c = 0; c < k; ++c) {
        std::vector<BigInt> col(d);
        bool nonzero = false;
        for (std::size_t r = 0; r < d; ++r) {
            col[r] = generators[r][c];
            nonzero = nonzero || col[r] != 0;
        }
        if (nonzero)
            work.push_back(std::move(col));
    }

    std::vector<std::vector<BigInt>> basis(d);
    for (std::size_t row = d; row-- > 0;) {
        for (;;) {
            std::size_t pivot = work.size();
            for (std::size_t i = 0; i < work.size(); ++i) {
                if (work[i][row] == 0)
                    continue;
                if (pivot == work.size() || abs(work[i][row]) < abs(work[pivot][row]))
                    pivot = i;
            }
            if (pivot == work.size())
                throw InvalidInput("hnf_columns: generators do not span a full-rank lattice");
            bool done = true;
            BigInt q;
            for (std::size_t i = 0; i < work.size(); ++i) {
                if (i == pivot || work[i][row] == 0)
                    continue;
                mpz_fdiv_q(q.get_mpz_t(), work[i][row].get_mpz_t(), work[pivot][row].get_mpz_t());
                for (std::size_t r = 0; r <= row; ++r)
                    work[i][r] -= q * work[pivot][r];
                if (work[i][row] != 0)
                    done = false;
            }
            if (done) {
                std::vector<BigInt> b = std::move(work[pivot]);
                work.erase(work.begin() + static_cast<std::ptrdiff_t>(pivot));
                if (b[row] < 0)
                    for (auto& x : b)
                        x = -x;
                basis[row] = std::move(b);
                break;
            }
        }
        // Drop columns that became zero.
        std::erase_if(work, [](const std::vector<BigInt>& v) {
            return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
        });
    }

    // Reduce entries right of the diagonal, bottom row first.
    BigInt q;
    for (std::size_t row = d; row-- > 0;) {
        for (std::size_t col = row + 1; col < d; ++col) {
            mpz_fdiv_q(q.get_mpz_t(), basis[col][row].get_mpz_t(), basis[row][row].get_mpz_t());
            if (q == 0)
                continue;
            for (std::size_t r = 0; r <= row; ++r)
                basis[col][r] -= q * basis[row][r];
        }
    }

    IntMatrix h(d, std::vector<BigInt>(d, 0));
    for (std::size_t c = 0; c < d; ++c)
        for (std::size_t r = 0; r < d; ++r)
            h[r][c] = basis[c][r];
    return h;
}

namespace {

bool lattice_contains(const IntMatrix& h, std::vector<BigInt> v)
{
    const std::size_t d = h.size();
    BigInt q;
    for (std::size_t row = d; row-- > 0;) {
        if (!mpz_divisible_p(v[row].get_mpz_t(), h[row][row].get_mpz_t()))
            return false;
        mpz_divexact(q.get_mpz_t(), v[row].get_mpz_t(), h[row][row].get_mpz_t());
        for (std::size_t r = 0; r <= row; ++r)
            v[r] -= q * h[r][row];
    }
    return true;
}

} // namespace

IdealHNF::IdealHNF(const NumberField& K, IntMatrix hnf) : hnf_(std::move(hnf))
{
    const unsigned d = K.degree();
    if (hnf_.size() != d)
        throw InvalidInput("IdealHNF: matrix dimension does not match the field degree");
    for (unsigned r = 0; r < d; ++r) {
        if (hnf_[r].size() != d)
            throw InvalidInput("IdealHNF: matrix is not square");
        if (hnf_[r][r] <= 0)
            throw InvalidInput("IdealHNF: diagonal entries must be positive");
        for (unsigned c = 0; c < d; ++c) {
            if (c < r && hnf_[r][c] != 0)
                throw InvalidInput("IdealHNF: matrix is not upper triangular");
            if (c > r && (hnf_[r][c] < 0 || hnf_[r][c] >= hnf_[r][r]))
                throw InvalidInput("IdealHNF: off-diagonal entry not reduced");
        }
    }
    for (unsigned c = 0; c < d; ++c) {
        std::vector<BigInt> col(d);
        for (unsigned r = 0; r < d; ++r)
            col[r] = hnf_[r][c];
        for (unsigned i = 0; i < d; ++i) {
            AlgebraicInteger prod = K.mul(K.basis_element(i), AlgebraicInteger{col});
            if (!lattice_contains(hnf_, prod.coords))
                throw InvalidInput("IdealHNF: lattice is not closed under multiplication by O_K");
        }
    }
}

BigInt IdealHNF::norm() const
{
    BigInt n = 1;
    for (std::size_t i = 0; i < hnf_.size(); ++i)
        n *= hnf_[i][i];
    return n;
}

bool IdealHNF::contains(const AlgebraicInteger& a) const
{
    if (a.coords.size() != hnf_.size())
        throw InvalidInput("IdealHNF::contains: dimension mismatch");
    return lattice_contains(hnf_, a.coords);
}

IdealHNF unit_ideal(const NumberField& K)
{
    IntMatrix id(K.degree(), std::vector<BigInt>(K.degree(), 0));
    for (unsigned i = 0; i < K.degree(); ++i)
        id[i][i] = 1;
    return IdealHNF(K, std::move(id));
}

IdealHNF ideal_from_generators(const NumberField& K, const std::vector<AlgebraicInteger>& gens)
{
    const unsigned d = K.degree();
    IntMatrix cols(d);
    bool any = false;
    for (const auto& g : gens) {
        if (K.is_zero(g))
            continue;
        any = true;
        for (unsigned j = 0; j < d; ++j) {
            AlgebraicInteger v = K.mul(g, K.basis_element(j));
            for (unsigned r = 0; r < d; ++r)
                cols[r].push_back(v.coords[r]);
        }
    }
    if (!any)
        throw InvalidInput("ideal: the zero ideal has no Hermite normal form");
    return IdealHNF(K, hnf_columns(cols));
}

IdealHNF ideal_from_element(const NumberField& K, const AlgebraicInteger& a)
{
    if (K.is_zero(a))
        throw InvalidInput("ideal_from_element: zero element");
    return IdealHNF(K, hnf_columns(K.multiplication_matrix(a)));
}

IdealHNF ideal_gcd(const NumberField& K, const IdealHNF& I, const IdealHNF& J)
{
    const unsigned d = K.degree();
    IntMatrix cols(d);
    for (unsigned r = 0; r < d; ++r) {
        cols[r] = I.matrix()[r];
        cols[r].insert(cols[r].end(), J.matrix()[r].begin(), J.matrix()[r].end());
    }
    return IdealHNF(K, hnf_columns(cols));
}

} // namespace irred
