#pragma once

#include "irred/exact_arith.hpp"

#include <memory>
#include <string>
#include <vector>

namespace irred {

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Element of O_K as coordinates over the integral basis.
struct AlgebraicInteger {
    std::vector<BigInt> coords;

    friend bool operator==(const AlgebraicInteger&, const AlgebraicInteger&) = default;
};

/// User-facing description of a totally real Galois field K = Q(theta).
struct FieldDescriptor {
    IntPoly min_poly;                                 // monic
    std::vector<std::vector<Rational>> integral_basis; // omega_i in the power basis of theta
    std::vector<std::vector<Rational>> automorphisms;  // tau_k(theta) as a polynomial in theta
    BigInt class_number = 1;
    bool class_number_confirmed = false;
    // Set by make_quadratic_field; general descriptors trust the integral basis
    // to be maximal.
    bool basis_computed = false;
};

/// K = Q(sqrt D), theta = sqrt D, integral basis (1, (1+sqrt D)/2) or (1, sqrt D).
FieldDescriptor make_quadratic_field(const BigInt& D, const BigInt& class_number = 1);

bool is_squarefree(const BigInt& n);

enum class CheckStatus { pass, fail, assumed };

struct FieldCheck {
    std::string name;
    CheckStatus status;
    std::string detail;
};

struct FieldDiagnostics {
    std::vector<FieldCheck> checks;

    bool passed() const;
    std::string failure_summary() const;
};

/// Runs every descriptor invariant: structure, integrality of the
/// multiplication table, irreducibility (exact for degree <= 4), Sturm count of
/// real roots, and the automorphism group axioms.
FieldDiagnostics verify_field(const FieldDescriptor& desc);

/// A verified field with precomputed multiplication and automorphism tables.
/// Immutable after construction.
class NumberField {
public:
    /// Throws VerificationError when verify_field reports a failure.
    explicit NumberField(FieldDescriptor desc);

    unsigned degree() const { return degree_; }
    const FieldDescriptor& descriptor() const { return desc_; }
    const FieldDiagnostics& diagnostics() const { return diagnostics_; }
    const BigInt& class_number() const { return desc_.class_number; }
    const BigInt& discriminant() const { return discriminant_; }
    /// [O_K : Z[theta]]
    const BigInt& index() const { return index_; }
    std::size_t automorphism_count() const { return aut_matrices_.size(); }

    AlgebraicInteger zero() const;
    AlgebraicInteger one() const;
    AlgebraicInteger from_int(const BigInt& n) const;
    AlgebraicInteger element(std::vector<BigInt> coords) const;
    AlgebraicInteger theta() const { return theta_; }
    /// omega_i
    AlgebraicInteger basis_element(unsigned i) const;
    bool is_zero(const AlgebraicInteger& a) const;

    AlgebraicInteger add(const AlgebraicInteger& a, const AlgebraicInteger& b) const;
    AlgebraicInteger sub(const AlgebraicInteger& a, const AlgebraicInteger& b) const;
    AlgebraicInteger neg(const AlgebraicInteger& a) const;
    AlgebraicInteger mul(const AlgebraicInteger& a, const AlgebraicInteger& b) const;
    AlgebraicInteger scale(const AlgebraicInteger& a, const BigInt& c) const;
    /// Square-and-multiply; aborts with SizeCapExceeded past 10^6 decimal digits.
    AlgebraicInteger pow(const AlgebraicInteger& a, unsigned long e) const;

    /// tau_k(a), k in automorphism order.
    AlgebraicInteger apply_automorphism(std::size_t k, const AlgebraicInteger& a) const;

    /// Column j holds the coordinates of a * omega_j.
    IntMatrix multiplication_matrix(const AlgebraicInteger& a) const;
    BigInt norm(const AlgebraicInteger& a) const;
    BigInt trace(const AlgebraicInteger& a) const;

    std::vector<Rational> to_power_basis(const AlgebraicInteger& a) const;
    /// Throws InvalidInput if the element is not in O_K.
    AlgebraicInteger from_power_basis(const std::vector<Rational>& v) const;

    /// Human-readable power-basis form, e.g. "3/2 + 1/2*t".
    std::string to_string(const AlgebraicInteger& a) const;

    /// Rows are omega_i in the power basis.
    const std::vector<std::vector<Rational>>& basis_matrix() const { return desc_.integral_basis; }

private:
    void check_dim(const AlgebraicInteger& a) const;

    FieldDescriptor desc_;
    FieldDiagnostics diagnostics_;
    unsigned degree_ = 0;
    // mult_[i][j] = omega_i * omega_j over the integral basis
    std::vector<std::vector<std::vector<BigInt>>> mult_;
    // aut_matrices_[k][i] = tau_k(omega_i) over the integral basis
    std::vector<std::vector<std::vector<BigInt>>> aut_matrices_;
    // power_to_basis_[j] = theta^j over the integral basis
    std::vector<std::vector<BigInt>> power_to_basis_;
    AlgebraicInteger theta_;
    BigInt discriminant_;
    BigInt index_;
};

using NumberFieldPtr = std::shared_ptr<const NumberField>;

} // namespace irred
