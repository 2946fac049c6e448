#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncdisc/disc.hpp"

namespace ncdisc {

/// Candidate endomorphism of a twisted algebra, given by the images of its
/// generators (base generators, then t for M = N or the group generators).
class TwistedMap {
   public:
    TwistedMap(TwistedPtr t, std::vector<TElem> images);
    static TwistedMap identity(TwistedPtr t);
    /// Images by generator name; unnamed generators are fixed. Parameter
    /// names must not collide with generators or group labels.
    static TwistedMap parse(TwistedPtr t, const std::map<std::string, std::string>& images,
                            const std::map<std::string, Scalar>& params = {});

    const TwistedPtr& algebra() const { return t_; }
    const std::vector<TElem>& images() const { return images_; }
    TElem apply(const TElem& e) const;
    /// this after inner.
    TwistedMap compose(const TwistedMap& inner) const;
    std::string str() const;

   private:
    TElem monoid_image(long m) const;

    TwistedPtr t_;
    std::vector<TElem> images_;
};

struct Residue {
    std::string relation;
    TElem value;
};

/// First defining relation (PBW relations, t x = sigma(x) t, g x = (g.x) g,
/// group table) whose image is nonzero.
std::optional<Residue> endomorphism_residue(const TwistedMap& phi);

struct AutomorphismReport {
    bool ok = false;
    std::string reason;
    Scalar det;  // of the action on the span of monomials up to generator degree
    std::optional<TwistedMap> inverse;
};
/// Affine invertibility: the map must preserve the span V of monomials of
/// degree <= the largest generator degree; the inverse is built from the
/// inverse matrix on V and verified.
AutomorphismReport check_automorphism(const TwistedMap& phi);

struct DiscReport {
    bool ok = false;
    std::string detail;
    std::optional<Scalar> witness;  // phi(d) = witness * d
    Poly image;                     // phi(d) in R variables
};
/// Expresses phi(f_k) in R and compares phi(d) with d up to a scalar.
DiscReport preserves_disc_ideal(const TwistedMap& phi, const FreeModule& f, const Discriminant& d);

struct SampleResult {
    std::map<std::string, std::string> params;
    bool expect_pass = true;
    bool endomorphism = false;
    bool automorphism = false;
    bool disc = false;
    std::string detail;
    bool passed() const { return endomorphism && automorphism && disc; }
    bool as_expected() const { return passed() == expect_pass; }
};

struct Sample {
    std::map<std::string, std::string> params;
    bool expect_pass = true;
};

/// Instantiates the image templates at every sample and runs all checks.
std::vector<SampleResult> family_verify(const FreeModule& f, const Discriminant& d,
                                        const std::map<std::string, std::string>& images,
                                        const std::vector<Sample>& samples);

/// Scalar expression such as "-3/2" or "z6^2 + 1".
Scalar parse_scalar(std::string_view text, int order);

}  // namespace ncdisc
