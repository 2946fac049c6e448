#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ncdisc/poly.hpp"

namespace ncdisc {

/// Ordered generators x_1 < ... < x_n with rewriting rules
/// x_j x_i -> q_ji x_i x_j + p_ji for j > i. Unset pairs commute.
/// Elements are Polys over the generator variables holding standard
/// monomials x_1^a1 ... x_n^an.
class PBWPresentation {
   public:
    explicit PBWPresentation(VarsPtr gens, int cyclotomic_order = 1);

    /// Throws SchemaError when upper <= lower or a tail term is not
    /// deglex-smaller than x_lower x_upper.
    void set_relation(int upper, int lower, const Scalar& q, const Poly& tail);

    const VarsPtr& vars() const { return vars_; }
    std::size_t size() const { return vars_->size(); }
    int order() const { return order_; }
    const Scalar& q(int upper, int lower) const { return q_[index(upper, lower)]; }
    const Poly& tail(int upper, int lower) const { return tail_[index(upper, lower)]; }
    bool has_tails() const;
    /// Every tail is zero or homogeneous of its relation's degree.
    bool is_graded() const;
    /// Largest drop in degree from a relation's degree to a tail term.
    long max_tail_defect() const;

   private:
    std::size_t index(int upper, int lower) const { return static_cast<std::size_t>(upper) * size() + lower; }

    VarsPtr vars_;
    int order_;
    std::vector<Scalar> q_;
    std::vector<Poly> tail_;
};

struct ConfluenceReport {
    bool ok = true;
    int upper = -1, middle = -1, lower = -1;  // generator indices of the failing overlap
    Poly route_a, route_b;                     // x_k x_j reduced first / x_j x_i reduced first
    std::string str() const;
};

class PBWAlgebra;
using AlgebraPtr = std::shared_ptr<const PBWAlgebra>;

/// Checks all overlaps x_k x_j x_i (k > j > i).
ConfluenceReport check_confluence(const PBWPresentation& p);

/// Normal-form arithmetic over a presentation whose confluence was verified.
class PBWAlgebra {
   public:
    /// Throws NonConfluent with the overlap witness.
    static AlgebraPtr create(PBWPresentation p);

    const PBWPresentation& presentation() const { return pres_; }
    const VarsPtr& vars() const { return pres_.vars(); }
    std::size_t ngens() const { return pres_.size(); }
    int order() const { return pres_.order(); }
    bool is_commutative() const;

    Poly zero() const { return Poly(vars()); }
    Poly one() const { return Poly(vars(), Scalar(1)); }
    Poly scalar(const Scalar& c) const { return Poly(vars(), c); }
    Poly gen(int i) const { return Poly::variable(vars(), i); }

    Poly mul(const Poly& a, const Poly& b) const;
    Poly pow(const Poly& a, unsigned long e) const;
    /// a b - b a
    Poly commutator(const Poly& a, const Poly& b) const;
    /// Parses an expression whose products are taken in this algebra.
    Poly parse(std::string_view text) const;
    /// Parses with extra identifiers bound to scalars.
    Poly parse(std::string_view text, const std::map<std::string, Scalar>& params) const;

   private:
    explicit PBWAlgebra(PBWPresentation p);
    friend ConfluenceReport check_confluence(const PBWPresentation& p);

    Poly mono_times_gen(const Monomial& m, int i) const;
    Poly elem_times_gen(const Poly& a, int i) const;
    Poly mono_times_mono(const Monomial& a, const Monomial& b) const;

    PBWPresentation pres_;
    bool has_tails_;
    mutable std::mutex memo_mutex_;
    mutable std::map<std::pair<Monomial, int>, Poly> gen_memo_;
    mutable std::map<std::pair<Monomial, Monomial>, Poly> mono_memo_;
};

/// H_B(t)/H_R(t) at t = 1 where B has the PBW basis of p and R is a
/// polynomial ring on the given weights; nullopt when the quotient is not
/// a polynomial (infinite rank). Requires a graded presentation.
std::optional<long> hilbert_rank(const PBWPresentation& p, const std::vector<int>& sub_weights);

/// Adds a central weight-1 generator t (last in the order) and homogenizes tails.
PBWPresentation homogenize_presentation(const PBWPresentation& p, const std::string& t_name = "t");

}  // namespace ncdisc
