#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ncdisc/pbw.hpp"

namespace ncdisc {

/// Algebra endomorphism given by the images of the generators.
class AlgebraMap {
   public:
    AlgebraMap(AlgebraPtr algebra, std::vector<Poly> images);
    static AlgebraMap identity(AlgebraPtr algebra);
    /// Images by generator name; unnamed generators are fixed.
    static AlgebraMap parse(AlgebraPtr algebra, const std::map<std::string, std::string>& images,
                            const std::map<std::string, Scalar>& params = {});

    const AlgebraPtr& algebra() const { return alg_; }
    const std::vector<Poly>& images() const { return images_; }
    Poly apply(const Poly& e) const;
    /// this after inner.
    AlgebraMap compose(const AlgebraMap& inner) const;
    AlgebraMap pow(long k) const;
    bool is_identity() const;
    /// Each image is homogeneous of its generator's weight.
    bool is_graded() const;
    /// First defining relation whose image is nonzero, as (relation text, residue).
    std::optional<std::pair<std::string, Poly>> relation_residue() const;
    std::string str() const;

    friend bool operator==(const AlgebraMap& a, const AlgebraMap& b) { return a.images_ == b.images_; }

   private:
    struct Cache;
    AlgebraPtr alg_;
    std::vector<Poly> images_;
    std::shared_ptr<Cache> cache_;
};

/// Least m in [1, cap] with map^m = id.
std::optional<long> order_of(const AlgebraMap& map, long cap);

/// Basis of { a : x a = a sigma(x) for every generator x } up to degree_cap,
/// intersected with the fixed points of each map in fixed_by. Returned in
/// reduced echelon form with respect to descending deglex.
std::vector<Poly> normal_space(const AlgebraMap& sigma, long degree_cap, const std::vector<AlgebraMap>& fixed_by = {});
/// Basis of { a : sigma(a) = a } up to degree_cap.
std::vector<Poly> fixed_space(const AlgebraMap& sigma, long degree_cap);
/// A nonzero element of the normal space, if one exists up to degree_cap.
std::optional<Poly> inner_witness(const AlgebraMap& sigma, long degree_cap);

/// Numerical monoid (submonoid of N given by generators) or finite group
/// given by a multiplication table. Elements are integers: the natural number
/// itself, or the table index with 0 the identity.
class Monoid {
   public:
    enum class Kind { Numerical, Group };

    static Monoid numerical(std::vector<int> gens, std::string var = "t", int weight = 1);
    /// Checks identity at index 0, associativity and inverses.
    static Monoid group(std::vector<std::string> labels, std::vector<std::vector<int>> table,
                        std::vector<int> generators);
    static Monoid trivial();
    /// S_n with permutations stored in one-line form.
    static Monoid symmetric(int n);

    Kind kind() const { return kind_; }
    bool is_numerical() const { return kind_ == Kind::Numerical; }
    bool is_trivial() const { return kind_ == Kind::Group && labels_.size() == 1; }
    long op(long a, long b) const;
    bool contains(long k) const;
    std::string label(long m) const;
    /// Element named by a label; nullopt when unknown.
    std::optional<long> find(const std::string& label) const;

    /// Numerical: generator values. Group: generator indices.
    const std::vector<int>& generators() const { return gens_; }
    const std::string& var() const { return var_; }
    int weight() const { return weight_; }

    std::size_t size() const { return labels_.size(); }
    long inverse(long g) const { return inverse_.at(g); }
    /// Permutation of an element of a symmetric-group preset, else empty.
    const std::vector<int>& permutation(long g) const;

   private:
    Kind kind_ = Kind::Group;
    std::vector<int> gens_;
    std::string var_;
    int weight_ = 1;
    int gcd_ = 1;
    std::vector<bool> small_;  // membership of k/gcd below the conductor bound
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> table_;
    std::vector<long> inverse_;
    std::vector<std::vector<int>> perms_;
};

/// rho: M -> End(A). Numerical monoids act through powers of one map.
class MonoidAction {
   public:
    /// Numerical monoid acting by k -> sigma^k.
    MonoidAction(Monoid m, AlgebraMap sigma);
    /// Group acting through images of its generators; extended to the whole
    /// table and checked to be a homomorphism.
    MonoidAction(Monoid m, AlgebraPtr base, const std::map<long, AlgebraMap>& generator_maps);
    static MonoidAction trivial(AlgebraPtr base);
    /// Permutes base generators; the base must have exactly n generators.
    static MonoidAction permutation(Monoid symmetric, AlgebraPtr base);

    const Monoid& monoid() const { return monoid_; }
    const AlgebraPtr& base() const { return base_; }
    /// rho(m).
    const AlgebraMap& act(long m) const;
    /// Order of the acting map (numerical), or |G|.
    std::optional<long> order() const { return order_; }
    /// The numerical generator map.
    const AlgebraMap& sigma() const;
    /// Generator words for each group element, leftmost applied last.
    const std::vector<std::vector<int>>& words() const { return words_; }

   private:
    Monoid monoid_;
    AlgebraPtr base_;
    std::optional<long> order_;
    std::optional<AlgebraMap> sigma_;
    std::vector<AlgebraMap> maps_;  // numerical: sigma^0..sigma^(order-1); group: per element
    std::vector<std::vector<int>> words_;
    struct Extra;
    std::shared_ptr<Extra> extra_;  // numerical powers when the order is unknown
};

/// Minimal element of M in each residue class mod d, identity first then
/// ascending. Throws NoSolution when a class has no element.
std::vector<long> coset_basis_numerical(const Monoid& m, long modulus);
/// One representative per right coset Hg (the smallest index), identity first.
std::vector<long> coset_basis_group(const Monoid& g, const std::vector<long>& subgroup = {0});
/// Whether for every j exactly one i has m_i m_j in H.
bool unique_complements(const Monoid& m, const std::vector<long>& basis, long modulus);
bool unique_complements_group(const Monoid& g, const std::vector<long>& basis, const std::vector<long>& subgroup);

}  // namespace ncdisc
