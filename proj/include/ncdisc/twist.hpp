#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ncdisc/action.hpp"

namespace ncdisc {

/// Finite sum of a_m (x) m keyed by monoid element; zero parts are dropped.
struct TElem {
    std::map<long, Poly> parts;

    bool is_zero() const { return parts.empty(); }
    TElem& operator+=(const TElem& rhs);
    TElem& operator-=(const TElem& rhs);
    TElem& operator*=(const Scalar& c);
    TElem operator-() const;
    friend TElem operator+(TElem a, const TElem& b) { return a += b; }
    friend TElem operator-(TElem a, const TElem& b) { return a -= b; }
    friend TElem operator*(TElem a, const Scalar& c) { return a *= c; }
    friend bool operator==(const TElem& a, const TElem& b) { return a.parts == b.parts; }
};

class TwistedAlgebra;
using TwistedPtr = std::shared_ptr<const TwistedAlgebra>;

/// Twisted tensor product A (x)_tau kM with (a (x) g)(b (x) h) = a g.b (x) gh.
/// A plain PBW algebra is the case of the trivial group.
class TwistedAlgebra {
   public:
    explicit TwistedAlgebra(MonoidAction action);
    static TwistedPtr create(MonoidAction action);
    static TwistedPtr plain(AlgebraPtr base);

    const AlgebraPtr& base() const { return action_.base(); }
    const Monoid& monoid() const { return action_.monoid(); }
    const MonoidAction& action() const { return action_; }
    bool is_plain() const { return monoid().is_trivial(); }
    bool is_graded() const { return base()->presentation().is_graded(); }

    TElem zero() const { return {}; }
    TElem one() const { return embed(base()->one()); }
    TElem scalar(const Scalar& c) const { return embed(base()->scalar(c)); }
    /// a (x) e.
    TElem embed(const Poly& a) const { return element(a, 0); }
    /// a (x) m.
    TElem element(const Poly& a, long m) const;
    /// 1 (x) m.
    TElem monoid_element(long m) const { return element(base()->one(), m); }

    TElem mul(const TElem& a, const TElem& b) const;
    TElem pow(const TElem& a, unsigned long e) const;
    TElem commutator(const TElem& a, const TElem& b) const { return mul(a, b) - mul(b, a); }

    /// Base generators (x) e, then 1 (x) m for each monoid generator.
    std::vector<TElem> generators() const;
    std::vector<std::string> generator_names() const;

    /// Degree of a (x) m for a base monomial: base degree plus m times the
    /// monoid variable weight (group elements have degree 0).
    long term_degree(const Monomial& a, long m) const;
    /// Largest term degree, -1 for zero.
    long degree(const TElem& e) const;
    TElem component(const TElem& e, long d) const;
    /// Basis monomials (a, m) of degree exactly d.
    std::vector<std::pair<Monomial, long>> monomials_of_degree(long d) const;

    /// Base variables, plus the monoid variable for numerical monoids.
    const VarsPtr& ambient_vars() const { return ambient_; }
    /// Reads a (x) t^k as a t^k; group elements must lie in A (x) e.
    Poly commutative_image(const TElem& e) const;

    std::string str(const TElem& e) const;
    /// Expression grammar with '#' for the tensor sign; identifiers are base
    /// generators, monoid labels, parameters, then root-of-unity literals.
    TElem parse(std::string_view text, const std::map<std::string, Scalar>& params = {}) const;

   private:
    MonoidAction action_;
    VarsPtr ambient_;
};

/// First nonzero commutator of e with a generator, if any.
std::optional<TElem> central_violation(const TwistedAlgebra& t, const TElem& e);

struct CenterComponent {
    long power;               // i in a t^i
    std::vector<Poly> basis;  // of N(sigma^i) fixed by the monoid, base degree <= cap
};

/// Components a t^i of the center for a numerical monoid, i <= power_cap.
/// Partial: only elements up to the caps are found.
std::vector<CenterComponent> ore_center_decompose(const TwistedAlgebra& t, long degree_cap, long power_cap);

}  // namespace ncdisc
