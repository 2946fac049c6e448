#include "ncdisc/action.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <set>

#include "ncdisc/errors.hpp"
#include "ncdisc/linalg.hpp"

namespace ncdisc {

struct AlgebraMap::Cache {
    std::mutex mutex;
    std::map<Monomial, Poly> images;
};

AlgebraMap::AlgebraMap(AlgebraPtr algebra, std::vector<Poly> images)
    : alg_(std::move(algebra)), images_(std::move(images)), cache_(std::make_shared<Cache>()) {
    if (images_.size() != alg_->ngens()) throw SchemaError("map needs one image per generator");
    for (auto& p : images_) p = remap(p, alg_->vars());
}

AlgebraMap AlgebraMap::identity(AlgebraPtr algebra) {
    std::vector<Poly> images;
    for (std::size_t i = 0; i < algebra->ngens(); ++i) images.push_back(algebra->gen(static_cast<int>(i)));
    return AlgebraMap(std::move(algebra), std::move(images));
}

AlgebraMap AlgebraMap::parse(AlgebraPtr algebra, const std::map<std::string, std::string>& images,
                             const std::map<std::string, Scalar>& params) {
    std::vector<Poly> out;
    for (std::size_t i = 0; i < algebra->ngens(); ++i) out.push_back(algebra->gen(static_cast<int>(i)));
    for (const auto& [name, text] : images) {
        int i = algebra->vars()->index_of(name);
        if (i < 0) throw SchemaError("map names unknown generator '" + name + "'");
        out[i] = algebra->parse(text, params);
    }
    return AlgebraMap(std::move(algebra), std::move(out));
}

Poly AlgebraMap::apply(const Poly& e) const {
    Poly out = alg_->zero();
    const Poly src = remap(e, alg_->vars());
    for (const auto& [m, c] : src.terms()) {
        if (m.is_one()) {
            out += alg_->scalar(c);
            continue;
        }
        std::optional<Poly> img;
        {
            std::lock_guard lock(cache_->mutex);
            auto it = cache_->images.find(m);
            if (it != cache_->images.end()) img = it->second;
        }
        if (!img) {
            // phi(x^m) = phi(x^m') phi(x_j) with x_j the last letter
            int j = static_cast<int>(m.exps.size()) - 1;
            while (m.exps[j] == 0) --j;
            Monomial rest = m;
            rest.exps[j] -= 1;
            rest.degree -= alg_->vars()->weights[j];
            img = alg_->mul(apply(Poly::term(alg_->vars(), rest)), images_[j]);
            std::lock_guard lock(cache_->mutex);
            cache_->images.emplace(m, *img);
        }
        out += *img * c;
    }
    return out;
}

AlgebraMap AlgebraMap::compose(const AlgebraMap& inner) const {
    std::vector<Poly> images;
    for (const auto& p : inner.images_) images.push_back(apply(p));
    return AlgebraMap(alg_, std::move(images));
}

AlgebraMap AlgebraMap::pow(long k) const {
    if (k < 0) throw Error("negative power of a map");
    AlgebraMap result = identity(alg_);
    AlgebraMap base = *this;
    for (; k > 0; k >>= 1) {
        if (k & 1) result = base.compose(result);
        if (k > 1) base = base.compose(base);
    }
    return result;
}

bool AlgebraMap::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (!(images_[i] == alg_->gen(static_cast<int>(i)))) return false;
    return true;
}

bool AlgebraMap::is_graded() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
        const Poly& p = images_[i];
        if (p.is_zero()) continue;
        if (!p.is_homogeneous() || p.degree() != alg_->vars()->weights[i]) return false;
    }
    return true;
}

std::optional<std::pair<std::string, Poly>> AlgebraMap::relation_residue() const {
    const auto& pres = alg_->presentation();
    const auto& names = alg_->vars()->names;
    for (std::size_t j = 0; j < images_.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) {
            int jj = static_cast<int>(j), ii = static_cast<int>(i);
            Poly r = alg_->mul(images_[j], images_[i]) - alg_->mul(images_[i], images_[j]) * pres.q(jj, ii) -
                     apply(pres.tail(jj, ii));
            if (!r.is_zero()) return std::make_pair(names[j] + names[i], r);
        }
    return std::nullopt;
}

std::string AlgebraMap::str() const {
    std::string s;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) s += ", ";
        s += alg_->vars()->names[i] + " -> " + images_[i].str();
    }
    return s;
}

std::optional<long> order_of(const AlgebraMap& map, long cap) {
    AlgebraMap p = map;
    for (long m = 1; m <= cap; ++m) {
        if (p.is_identity()) return m;
        p = map.compose(p);
    }
    return std::nullopt;
}

namespace {

using Equation = std::function<Poly(const Poly&)>;

// Common solution space of the linear equations eq(a) = 0 over elements of
// degree <= cap, one degree at a time when every equation preserves degree.
std::vector<Poly> solve_space(const AlgebraPtr& alg, long cap, bool graded, const std::vector<Equation>& eqs) {
    const auto& vars = alg->vars();
    std::vector<std::vector<Monomial>> blocks;
    if (graded) {
        for (long d = cap; d >= 0; --d) blocks.push_back(monomials_of_degree(*vars, d));
    } else {
        blocks.emplace_back();
        for (long d = cap; d >= 0; --d)
            for (auto& m : monomials_of_degree(*vars, d)) blocks.back().push_back(std::move(m));
    }
    std::vector<Poly> basis;
    // ascending degree so the first basis element has the lowest degree
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
        const auto& cols = *it;
        if (cols.empty()) continue;
        std::map<std::pair<std::size_t, Monomial>, std::size_t> row_of;
        std::vector<std::vector<std::pair<std::size_t, Scalar>>> entries(cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            Poly mono = Poly::term(vars, cols[c]);
            for (std::size_t e = 0; e < eqs.size(); ++e) {
                const Poly residue = eqs[e](mono);
                for (const auto& [m, v] : residue.terms()) {
                    auto [pos, fresh] = row_of.emplace(std::make_pair(e, m), row_of.size());
                    entries[c].emplace_back(pos->second, v);
                }
            }
        }
        Mat a(row_of.size(), Vec(cols.size(), Scalar(0)));
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (const auto& [r, v] : entries[c]) a[r][c] = v;
        auto kernel = nullspace(a, cols.size());
        if (kernel.empty()) continue;
        auto ech = row_reduce(kernel, cols.size());
        for (const auto& row : ech.rref) {
            Poly p(vars);
            for (std::size_t c = 0; c < cols.size(); ++c)
                if (!row[c].is_zero()) p.add_term(cols[c], row[c]);
            basis.push_back(std::move(p));
        }
    }
    return basis;
}

bool graded_setting(const AlgebraMap& sigma, const std::vector<AlgebraMap>& others) {
    if (!sigma.algebra()->presentation().is_graded() || !sigma.is_graded()) return false;
    return std::all_of(others.begin(), others.end(), [](const AlgebraMap& g) { return g.is_graded(); });
}

}  // namespace

std::vector<Poly> normal_space(const AlgebraMap& sigma, long degree_cap, const std::vector<AlgebraMap>& fixed_by) {
    const auto& alg = sigma.algebra();
    std::vector<Equation> eqs;
    for (std::size_t i = 0; i < alg->ngens(); ++i) {
        Poly x = alg->gen(static_cast<int>(i));
        Poly sx = sigma.images()[i];
        eqs.push_back([alg, x, sx](const Poly& a) { return alg->mul(x, a) - alg->mul(a, sx); });
    }
    for (const auto& g : fixed_by) eqs.push_back([g](const Poly& a) { return g.apply(a) - a; });
    return solve_space(alg, degree_cap, graded_setting(sigma, fixed_by), eqs);
}

std::vector<Poly> fixed_space(const AlgebraMap& sigma, long degree_cap) {
    std::vector<Equation> eqs{[sigma](const Poly& a) { return sigma.apply(a) - a; }};
    return solve_space(sigma.algebra(), degree_cap, graded_setting(sigma, {}), eqs);
}

std::optional<Poly> inner_witness(const AlgebraMap& sigma, long degree_cap) {
    auto space = normal_space(sigma, degree_cap);
    if (space.empty()) return std::nullopt;
    return space.front();
}

// Monoid

Monoid Monoid::numerical(std::vector<int> gens, std::string var, int weight) {
    if (gens.empty()) throw SchemaError("numerical monoid needs generators");
    for (int g : gens)
        if (g <= 0) throw SchemaError("numerical monoid generators must be positive");
    if (weight <= 0) throw SchemaError("monoid variable weight must be positive");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    Monoid m;
    m.kind_ = Kind::Numerical;
    m.var_ = std::move(var);
    m.weight_ = weight;
    m.gcd_ = 0;
    for (int g : gens) m.gcd_ = std::gcd(m.gcd_, g);
    // every k/gcd above (max reduced generator)^2 lies in the monoid
    int top = gens.back() / m.gcd_;
    std::size_t bound = static_cast<std::size_t>(top) * top + 1;
    m.small_.assign(bound + 1, false);
    m.small_[0] = true;
    for (std::size_t k = 1; k <= bound; ++k)
        for (int g : gens) {
            std::size_t r = static_cast<std::size_t>(g / m.gcd_);
            if (r <= k && m.small_[k - r]) {
                m.small_[k] = true;
                break;
            }
        }
    m.gens_ = std::move(gens);
    return m;
}

Monoid Monoid::group(std::vector<std::string> labels, std::vector<std::vector<int>> table,
                     std::vector<int> generators) {
    const std::size_t n = labels.size();
    if (n == 0) throw SchemaError("group needs at least one element");
    if (table.size() != n) throw SchemaError("group table has wrong size");
    for (const auto& row : table) {
        if (row.size() != n) throw SchemaError("group table has wrong size");
        for (int v : row)
            if (v < 0 || static_cast<std::size_t>(v) >= n) throw SchemaError("group table entry out of range");
    }
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != n) throw SchemaError("group labels must be distinct");
    for (std::size_t i = 0; i < n; ++i)
        if (table[0][i] != static_cast<int>(i) || table[i][0] != static_cast<int>(i))
            throw SchemaError("group element 0 must be the identity");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]]) throw SchemaError("group table is not associative");
    Monoid m;
    m.kind_ = Kind::Group;
    m.inverse_.assign(n, -1);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            if (table[a][b] == 0 && table[b][a] == 0) m.inverse_[a] = static_cast<long>(b);
        if (m.inverse_[a] < 0) throw SchemaError("group element " + labels[a] + " has no inverse");
    }
    for (int g : generators)
        if (g < 0 || static_cast<std::size_t>(g) >= n) throw SchemaError("group generator out of range");
    m.labels_ = std::move(labels);
    m.table_ = std::move(table);
    m.gens_ = std::move(generators);
    return m;
}

Monoid Monoid::trivial() { return group({"e"}, {{0}}, {}); }

Monoid Monoid::symmetric(int n) {
    if (n < 1 || n > 9) throw SchemaError("symmetric group preset needs 1 <= n <= 9");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);

    std::vector<std::string> labels(perms.size());
    std::vector<int> gens;
    for (std::size_t i = 0; i < perms.size(); ++i) {
        const auto& q = perms[i];
        if (i == 0) {
            labels[i] = "e";
            continue;
        }
        int moved = 0, first = -1;
        for (int k = 0; k < n; ++k)
            if (q[k] != k) {
                ++moved;
                if (first < 0) first = k;
            }
        bool adjacent = moved == 2 && first + 1 < n && q[first] == first + 1;
        if (adjacent) {
            labels[i] = n == 2 ? "g" : "g" + std::to_string(first + 1);
        } else {
            labels[i] = "p";
            for (int v : q) labels[i] += std::to_string(v + 1);
        }
    }
    for (int k = 0; k + 1 < n; ++k) {
        std::vector<int> s(n);
        std::iota(s.begin(), s.end(), 0);
        std::swap(s[k], s[k + 1]);
        gens.push_back(index.at(s));
    }
    std::vector<std::vector<int>> table(perms.size(), std::vector<int>(perms.size()));
    for (std::size_t a = 0; a < perms.size(); ++a)
        for (std::size_t b = 0; b < perms.size(); ++b) {
            std::vector<int> c(n);
            for (int k = 0; k < n; ++k) c[k] = perms[a][perms[b][k]];
            table[a][b] = index.at(c);
        }
    Monoid m = group(std::move(labels), std::move(table), std::move(gens));
    m.perms_ = std::move(perms);
    return m;
}

long Monoid::op(long a, long b) const {
    if (is_numerical()) return a + b;
    return table_.at(a).at(b);
}

bool Monoid::contains(long k) const {
    if (!is_numerical()) return k >= 0 && static_cast<std::size_t>(k) < labels_.size();
    if (k < 0 || k % gcd_ != 0) return false;
    std::size_t r = static_cast<std::size_t>(k / gcd_);
    return r >= small_.size() || small_[r];
}

std::string Monoid::label(long m) const {
    if (!is_numerical()) return labels_.at(m);
    if (m == 0) return "1";
    if (m == 1) return var_;
    return var_ + "^" + std::to_string(m);
}

std::optional<long> Monoid::find(const std::string& label) const {
    if (!is_numerical()) {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == label) return static_cast<long>(i);
        return std::nullopt;
    }
    if (label == "1") return 0;
    if (label == var_) return contains(1) ? std::optional<long>(1) : std::nullopt;
    if (label.size() > var_.size() + 1 && label.compare(0, var_.size() + 1, var_ + "^") == 0) {
        std::string digits = label.substr(var_.size() + 1);
        if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) return std::nullopt;
        long k = std::stol(digits);
        if (contains(k)) return k;
    }
    return std::nullopt;
}

const std::vector<int>& Monoid::permutation(long g) const {
    static const std::vector<int> none;
    if (perms_.empty()) return none;
    return perms_.at(g);
}

// MonoidAction

struct MonoidAction::Extra {
    std::mutex mutex;
    std::map<long, std::unique_ptr<AlgebraMap>> powers;
};

MonoidAction::MonoidAction(Monoid m, AlgebraMap sigma)
    : monoid_(std::move(m)), base_(sigma.algebra()), extra_(std::make_shared<Extra>()) {
    if (!monoid_.is_numerical()) throw SchemaError("a single acting map needs a numerical monoid");
    order_ = order_of(sigma, 256);
    if (order_) {
        maps_.push_back(AlgebraMap::identity(base_));
        for (long k = 1; k < *order_; ++k) maps_.push_back(sigma.compose(maps_.back()));
    }
    sigma_ = std::move(sigma);
}

MonoidAction::MonoidAction(Monoid m, AlgebraPtr base, const std::map<long, AlgebraMap>& generator_maps)
    : monoid_(std::move(m)), base_(std::move(base)), extra_(std::make_shared<Extra>()) {
    if (monoid_.is_numerical()) throw SchemaError("per-generator maps need a group");
    const auto& gens = monoid_.generators();
    for (int g : gens)
        if (!generator_maps.count(g)) throw SchemaError("no action given for group generator " + monoid_.label(g));
    for (const auto& [g, map] : generator_maps) {
        if (std::find(gens.begin(), gens.end(), g) == gens.end())
            throw SchemaError("action given for non-generator " + monoid_.label(g));
        if (map.algebra() != base_) throw SchemaError("action map over a different algebra");
    }
    const std::size_t n = monoid_.size();
    std::vector<std::optional<AlgebraMap>> maps(n);
    words_.assign(n, {});
    maps[0] = AlgebraMap::identity(base_);
    std::deque<long> queue{0};
    std::vector<long> visited{0};
    while (!queue.empty()) {
        long h = queue.front();
        queue.pop_front();
        for (int s : gens) {
            long sh = monoid_.op(s, h);
            AlgebraMap image = generator_maps.at(s).compose(*maps[h]);
            if (!maps[sh]) {
                maps[sh] = std::move(image);
                words_[sh] = words_[h];
                words_[sh].insert(words_[sh].begin(), s);
                queue.push_back(sh);
                visited.push_back(sh);
            } else if (!(*maps[sh] == image)) {
                throw SchemaError("group action is not a homomorphism at " + monoid_.label(s) + "*" +
                                  monoid_.label(h));
            }
        }
    }
    if (visited.size() != n) throw SchemaError("group generators do not generate the table");
    for (auto& mp : maps) maps_.push_back(std::move(*mp));
    order_ = static_cast<long>(n);
}

MonoidAction MonoidAction::trivial(AlgebraPtr base) { return MonoidAction(Monoid::trivial(), std::move(base), {}); }

MonoidAction MonoidAction::permutation(Monoid symmetric, AlgebraPtr base) {
    std::map<long, AlgebraMap> gmaps;
    for (int s : symmetric.generators()) {
        const auto& perm = symmetric.permutation(s);
        if (perm.size() != base->ngens())
            throw SchemaError("permutation action needs exactly " + std::to_string(perm.size()) + " generators");
        std::vector<Poly> images;
        for (int k : perm) images.push_back(base->gen(k));
        gmaps.emplace(s, AlgebraMap(base, std::move(images)));
    }
    return MonoidAction(std::move(symmetric), std::move(base), gmaps);
}

const AlgebraMap& MonoidAction::sigma() const {
    if (!sigma_) throw Error("group actions have no single generating map");
    return *sigma_;
}

const AlgebraMap& MonoidAction::act(long m) const {
    if (!monoid_.is_numerical()) return maps_.at(m);
    if (order_) return maps_[m % *order_];
    std::lock_guard lock(extra_->mutex);
    auto& slot = extra_->powers[m];
    if (!slot) slot = std::make_unique<AlgebraMap>(sigma_->pow(m));
    return *slot;
}

// Coset bases

std::vector<long> coset_basis_numerical(const Monoid& m, long modulus) {
    if (!m.is_numerical()) throw SchemaError("numerical coset basis needs a numerical monoid");
    if (modulus < 1) throw SchemaError("submonoid modulus must be positive");
    long top = m.generators().back();
    long limit = top * top + 2 * modulus * top + modulus;
    std::vector<long> basis;
    for (long r = 0; r < modulus; ++r) {
        long k = r;
        while (k <= limit && !m.contains(k)) k += modulus;
        if (k > limit)
            throw NoSolution("residue class " + std::to_string(r) + " mod " + std::to_string(modulus) +
                             " has no element of the monoid");
        basis.push_back(k);
    }
    for (long k = 0; k <= limit; ++k) {
        if (!m.contains(k)) continue;
        long w = basis[k % modulus];
        if (!m.contains(k - w))
            throw NoSolution("monoid element " + std::to_string(k) + " is not in the coset of " + std::to_string(w));
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

std::vector<long> coset_basis_group(const Monoid& g, const std::vector<long>& subgroup) {
    if (g.is_numerical()) throw SchemaError("group coset basis needs a group");
    std::set<long> h(subgroup.begin(), subgroup.end());
    if (!h.count(0)) throw SchemaError("subgroup must contain the identity");
    for (long a : h)
        for (long b : h)
            if (!h.count(g.op(a, b))) throw SchemaError("subgroup is not closed");
    std::vector<bool> covered(g.size(), false);
    std::vector<long> reps;
    for (long x = 0; x < static_cast<long>(g.size()); ++x) {
        if (covered[x]) continue;
        reps.push_back(x);
        for (long a : h) covered[g.op(a, x)] = true;
    }
    return reps;
}

bool unique_complements(const Monoid& m, const std::vector<long>& basis, long modulus) {
    for (long bj : basis) {
        int count = 0;
        for (long bi : basis)
            if ((bi + bj) % modulus == 0 && m.contains(bi + bj)) ++count;
        if (count != 1) return false;
    }
    return true;
}

bool unique_complements_group(const Monoid& g, const std::vector<long>& basis, const std::vector<long>& subgroup) {
    std::set<long> h(subgroup.begin(), subgroup.end());
    for (long bj : basis) {
        int count = 0;
        for (long bi : basis)
            if (h.count(g.op(bi, bj))) ++count;
        if (count != 1) return false;
    }
    return true;
}

}  // namespace ncdisc
