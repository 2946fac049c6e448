#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

namespace ncdisc {

/// Exact element of the cyclotomic field Q(zeta_N).
///
/// The value is stored as a polynomial in zeta of degree below phi(N),
/// i.e. reduced modulo the N-th cyclotomic polynomial. Values that reduce
/// to a rational number always carry order 1, so rationals compare equal
/// regardless of which field they were computed in. Mixed-order arithmetic
/// embeds both operands into Q(zeta_lcm).
class Scalar {
   public:
    Scalar() = default;
    Scalar(long value) : head_(value) {}  // NOLINT(google-explicit-constructor)
    Scalar(mpq_class value);              // NOLINT(google-explicit-constructor)

    /// zeta_order^power.
    static Scalar root_of_unity(int order, long power = 1);
    /// Sum of coeffs[i] * zeta_order^i; coeffs may be longer than phi(order).
    static Scalar from_powers(int order, std::vector<mpq_class> coeffs);

    int order() const { return order_; }
    bool is_zero() const { return tail_.empty() && sgn(head_) == 0; }
    bool is_one() const { return tail_.empty() && head_ == 1; }
    bool is_rational() const { return tail_.empty(); }
    /// Rational value; throws std::domain_error when the value is irrational.
    const mpq_class& rational() const;
    /// Coefficient vector of length phi(order()).
    std::vector<mpq_class> coefficients() const;
    /// Number of nonzero zeta-power coefficients.
    std::size_t term_count() const;

    Scalar inverse() const;
    Scalar pow(long exponent) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
    friend bool operator==(const Scalar& lhs, const Scalar& rhs);
    friend bool operator!=(const Scalar& lhs, const Scalar& rhs) { return !(lhs == rhs); }

    /// True when the printed form needs parentheses inside a product.
    bool is_compound() const { return term_count() > 1; }
    /// Single-term value whose leading sign is negative (for pretty printing).
    bool is_negative_term() const;
    /// Canonical text, e.g. "3/2", "z3", "2*z3^2 - 1".
    std::string str() const;

   private:
    void normalize();
    void embed(int new_order);
    std::vector<mpq_class> full() const;
    void assign_full(int order, std::vector<mpq_class> coeffs);

    int order_ = 1;
    mpq_class head_;                // coefficient of zeta^0
    std::vector<mpq_class> tail_;   // coefficients of zeta^1..; empty iff rational
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<mpz_class>& cyclotomic_polynomial(int n);
/// Euler's totient.
int euler_phi(int n);

}  // namespace ncdisc
