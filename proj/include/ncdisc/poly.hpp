#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncdisc/scalar.hpp"

namespace ncdisc {

/// Ordered variable names with positive degree weights.
struct Variables {
    std::vector<std::string> names;
    std::vector<int> weights;

    std::size_t size() const { return names.size(); }
    int index_of(std::string_view name) const;
};

using VarsPtr = std::shared_ptr<const Variables>;

/// Weights default to 1.
VarsPtr make_vars(std::vector<std::string> names, std::vector<int> weights = {});
/// Same names and weights.
bool same_vars(const Variables& a, const Variables& b);

/// Exponent vector with cached weighted degree.
///
/// The defaulted ordering compares weighted degree first and then the
/// exponent vectors lexicographically, which is deglex with x1 highest.
struct Monomial {
    long degree = 0;
    std::vector<int> exps;

    auto operator<=>(const Monomial&) const = default;
    bool is_one() const { return degree == 0; }
};

Monomial make_monomial(const Variables& vars, std::vector<int> exps);
Monomial mono_one(const Variables& vars);
Monomial mono_var(const Variables& vars, int index, int power = 1);
Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);
/// b / a; requires mono_divides(a, b).
Monomial mono_div(const Monomial& b, const Monomial& a);
/// All monomials of exact weighted degree d, in descending deglex order.
std::vector<Monomial> monomials_of_degree(const Variables& vars, long d);
std::string mono_str(const Variables& vars, const Monomial& m);

/// Sparse commutative polynomial over Q(zeta_N).
///
/// Terms iterate in descending deglex order. Also used as the coefficient
/// container for noncommutative normal forms, whose multiplication lives in
/// the algebra objects.
class Poly {
   public:
    using Terms = std::map<Monomial, Scalar, std::greater<>>;

    Poly() = default;
    explicit Poly(VarsPtr vars) : vars_(std::move(vars)) {}
    Poly(VarsPtr vars, const Scalar& c);

    static Poly variable(VarsPtr vars, int index);
    static Poly term(VarsPtr vars, Monomial m, const Scalar& c = Scalar(1));

    const VarsPtr& vars() const { return vars_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Scalar constant_term() const;
    Scalar coefficient(const Monomial& m) const;
    /// Weighted degree of the leading term, -1 for zero.
    long degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree; }
    const Monomial& leading_monomial() const { return terms_.begin()->first; }
    const Scalar& leading_coefficient() const { return terms_.begin()->second; }
    /// Terms of weighted degree exactly d.
    Poly component(long d) const;
    bool is_homogeneous() const;

    void add_term(const Monomial& m, const Scalar& c);
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Scalar& c);
    Poly operator-() const;
    Poly pow(unsigned long e) const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
    friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b);

    std::string str() const;

   private:
    void check_vars(const Poly& other) const;

    VarsPtr vars_;
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

using PolyMatrix = std::vector<std::vector<Poly>>;

/// Ring homomorphism sending variable i to images[i]; images share target vars.
Poly substitute(const Poly& p, const std::vector<Poly>& images, VarsPtr target);
/// Re-expresses p over target by matching variable names.
Poly remap(const Poly& p, VarsPtr target);
/// Quotient a / b; throws Error when the division is not exact.
Poly exact_div(const Poly& a, const Poly& b);
/// p divided by its deglex-leading coefficient (zero stays zero).
Poly normalize(const Poly& p);
/// c with a = c * b, if one exists (both zero gives 1).
std::optional<Scalar> eq_up_to_scalar(const Poly& a, const Poly& b);
/// Sum of f_k t^(deg f - k) over the homogeneous components f_k, where t
/// is the variable named t_name in target (weight 1).
Poly homogenize(const Poly& p, VarsPtr target, std::string_view t_name);

/// Fraction-free Bareiss determinant.
Poly bareiss_det(const PolyMatrix& m);
/// Laplace expansion; only for cross-checking small matrices.
Poly cofactor_det(const PolyMatrix& m);
PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix transpose(const PolyMatrix& m);

/// Scalar named by a root-of-unity literal zK with K | order.
std::optional<Scalar> root_literal(std::string_view name, int order);

/// Parses the polynomial grammar; zK literals need K | order.
Poly parse_poly(std::string_view text, VarsPtr vars, int order = 1);

}  // namespace ncdisc
