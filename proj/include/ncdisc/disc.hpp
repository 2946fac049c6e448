#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ncdisc/freemod.hpp"

namespace ncdisc {

/// Determinant of a trace form, kept both in the variables of R (raw) and
/// with the f-variables replaced by their ambient expressions.
struct Discriminant {
    Poly raw;
    Poly normalized;          // raw divided by its leading coefficient
    Poly ambient;             // ambient form, unnormalized
    Poly ambient_normalized;  // ambient form divided by its leading coefficient
    std::string method;
    std::vector<std::string> certificates;
};

Discriminant make_discriminant(Poly raw, Poly ambient, std::string method, std::vector<std::string> certificates = {});

using ElementMap = std::function<TElem(const TElem&)>;

/// Applies a base automorphism to every tensor part.
ElementMap base_map(const TwistedAlgebra& t, const AlgebraMap& sigma);

/// Column j holds the coordinates of b z_j.
PolyMatrix left_mult_matrix(const FreeModule& f, const TElem& b);
/// (tr(z_i sigma(z_j))); sigma must fix every f_k (HypothesisError otherwise).
PolyMatrix trace_form(const FreeModule& f, const ElementMap* sigma = nullptr);

struct SigmaMatrix {
    PolyMatrix x;  // column j holds the coordinates of sigma(z_j)
    Poly det;
};
/// Throws HypothesisError unless the determinant is a nonzero scalar.
SigmaMatrix sigma_matrix(const FreeModule& f, const ElementMap& sigma);

Discriminant discriminant_direct(const FreeModule& f);

/// Product of polynomials over different variable sets, on the union.
Poly merge_mul(const Poly& a, const Poly& b);

/// d(A/A cap R)^l d(kM/kH)^n.
Discriminant formula_twist(const Discriminant& da, const Discriminant& dm, long n, long l);
/// d(A/B)^m (t^(m-1))^(mn); in R the central power t^m is the variable
/// r_name, in the ambient t is t_name with weight t_weight.
Discriminant formula_ore(const Discriminant& dab, long m, long n, const std::string& t_name, int t_weight = 1,
                         const std::string& r_name = "T");
/// d(A/R)^|G|.
Discriminant formula_skgrp(const Discriminant& dar, long group_order);

struct Reflection {
    Poly form;   // linear form f with sigma(f) = xi f
    Scalar xi;   // trace(sigma) - (n - 1)
    long order;  // of sigma
};
/// Throws HypothesisError unless sigma is a linear reflection of finite order.
Reflection analyze_reflection(const AlgebraMap& sigma);
/// f^((m-1)m) for a reflection of order m on a commutative polynomial ring.
Discriminant reflection_disc(const AlgebraMap& sigma);

struct ReflectionTrick {
    PolyMatrix m;  // (g_i(z_j)) in ambient variables
    Poly det;
    Discriminant disc;
};
/// M = (g_i(z_j)) over all group elements g_i, d = (det M)^2; checks M^T M
/// against the trace form entrywise (HypothesisError on mismatch) unless
/// cross_check is off.
ReflectionTrick reflection_trick(const FreeModule& f, const std::vector<AlgebraMap>& group, bool cross_check = true);

/// H(d) with the homogenizing variable named t_name in target.
Discriminant homogenize_disc(const Discriminant& d, VarsPtr target, const std::string& t_name);

/// d(kM/kH) for a numerical monoid over H = dN cap M, computed directly.
Discriminant monoid_algebra_disc(const Monoid& m, long modulus);
/// d(kG/k) for a finite group, computed directly.
Discriminant group_algebra_disc(const Monoid& g);

/// Runs fn(i) for i in [0, n) on the available cores; rethrows the first error.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace ncdisc
