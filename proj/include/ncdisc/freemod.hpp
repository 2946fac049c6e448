#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ncdisc/linalg.hpp"
#include "ncdisc/twist.hpp"

namespace ncdisc {

/// R = k[f_1..f_k] inside the center, with formal variables whose weights
/// are the degrees of the f_i.
struct CentralSubalgebra {
    TwistedPtr ambient;
    VarsPtr vars;
    std::vector<TElem> gens;
};

/// Throws HypothesisError (with the commutator) when some f_i is not central.
CentralSubalgebra make_central(TwistedPtr ambient, std::vector<std::string> names, std::vector<TElem> elements);
CentralSubalgebra parse_central(TwistedPtr ambient, std::vector<std::string> names,
                                const std::vector<std::string>& elements);

struct BasisReport {
    bool ok = true;
    long degree = -1;  // first failing degree
    std::string kind;  // "dependent" or "missing"
    std::string witness;
    long checked_degree = -1;
    std::string str() const;
};

/// B free over R with basis Z, checked degree by degree.
class FreeModule {
   public:
    /// slack < 0 selects twice the largest tail defect of the base presentation.
    FreeModule(CentralSubalgebra r, std::vector<TElem> basis, long cap = 24, long slack = -1);
    FreeModule(const FreeModule&) = delete;
    FreeModule& operator=(const FreeModule&) = delete;

    const TwistedPtr& ambient() const { return r_.ambient; }
    const CentralSubalgebra& central() const { return r_; }
    const VarsPtr& rvars() const { return r_.vars; }
    const std::vector<TElem>& basis() const { return basis_; }
    std::size_t rank() const { return basis_.size(); }
    long cap() const { return cap_; }
    long slack() const { return slack_; }

    /// Coordinates r_i (polynomials in the f-variables) with b = sum r_i z_i.
    /// Throws NoSolution, AmbiguousSolution or CapExceeded.
    std::vector<Poly> express(const TElem& b) const;
    /// Dimension count and independence for every degree <= d.
    BasisReport verify(long d) const;
    Poly trace(const TElem& b) const;

    /// sum c f^mu as an ambient element.
    TElem r_image(const Poly& r) const;
    /// The f-variables replaced by the commutative images of the f_i.
    Poly ambient_image(const Poly& r) const;

   private:
    struct Column {
        Monomial mu;
        std::size_t index;
    };
    struct DegreeSystem {
        std::vector<Column> columns;
        std::map<std::pair<long, Monomial>, std::size_t> rows;
        LinearSolver solver;
    };

    const DegreeSystem& system(long d) const;
    TElem f_power(const Monomial& mu) const;
    TElem column(const Column& c) const;
    std::vector<Column> columns_up_to(long d) const;
    std::vector<Poly> express_global(const TElem& b) const;
    std::string column_combination(const std::vector<Column>& cols, const Vec& v) const;

    CentralSubalgebra r_;
    std::vector<TElem> basis_;
    std::vector<long> basis_degree_;
    long cap_;
    long slack_;
    std::vector<Poly> f_images_;

    mutable std::mutex mutex_;
    mutable std::map<long, std::unique_ptr<DegreeSystem>> systems_;
    mutable std::map<Monomial, TElem> f_powers_;
    mutable std::map<std::pair<Monomial, std::size_t>, TElem> columns_;
    mutable std::map<std::pair<long, Monomial>, Poly> mono_traces_;
};

/// Greedy choice of `rank` standard monomials of a commutative algebra that
/// stay R-independent degree by degree, descending deglex within a degree.
/// Throws CapExceeded when the rank is not reached by degree d.
std::vector<TElem> invariant_basis_suggest(const CentralSubalgebra& r, std::size_t rank, long d);

}  // namespace ncdisc
