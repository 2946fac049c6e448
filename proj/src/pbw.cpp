#include "ncdisc/pbw.hpp"

#include <algorithm>

#include "ncdisc/errors.hpp"
#include "ncdisc/expr.hpp"

namespace ncdisc {

PBWPresentation::PBWPresentation(VarsPtr gens, int cyclotomic_order)
    : vars_(std::move(gens)), order_(cyclotomic_order) {
    if (order_ < 1) throw SchemaError("cyclotomic order must be positive");
    const std::size_t n = vars_->size();
    q_.assign(n * n, Scalar(1));
    tail_.assign(n * n, Poly(vars_));
}

void PBWPresentation::set_relation(int upper, int lower, const Scalar& q, const Poly& tail) {
    const int n = static_cast<int>(size());
    if (upper < 0 || lower < 0 || upper >= n || lower >= n || upper <= lower)
        throw SchemaError("relation must rewrite x_j x_i with j > i");
    if (q.is_zero()) throw SchemaError("relation coefficient q must be nonzero");
    Poly t = remap(tail, vars_);
    Monomial lead = mono_mul(mono_var(*vars_, lower), mono_var(*vars_, upper));
    for (const auto& [m, c] : t.terms()) {
        if (!(m < lead))
            throw SchemaError("tail term " + mono_str(*vars_, m) + " of relation " + vars_->names[upper] +
                              vars_->names[lower] + " is not smaller than " + mono_str(*vars_, lead));
    }
    q_[index(upper, lower)] = q;
    tail_[index(upper, lower)] = std::move(t);
}

bool PBWPresentation::has_tails() const {
    return std::any_of(tail_.begin(), tail_.end(), [](const Poly& p) { return !p.is_zero(); });
}

bool PBWPresentation::is_graded() const {
    for (std::size_t j = 0; j < size(); ++j)
        for (std::size_t i = 0; i < j; ++i) {
            const Poly& t = tail(static_cast<int>(j), static_cast<int>(i));
            long d = vars_->weights[i] + vars_->weights[j];
            for (const auto& [m, c] : t.terms())
                if (m.degree != d) return false;
        }
    return true;
}

long PBWPresentation::max_tail_defect() const {
    long defect = 0;
    for (std::size_t j = 0; j < size(); ++j)
        for (std::size_t i = 0; i < j; ++i) {
            const Poly& t = tail(static_cast<int>(j), static_cast<int>(i));
            long d = vars_->weights[i] + vars_->weights[j];
            for (const auto& [m, c] : t.terms()) defect = std::max(defect, d - m.degree);
        }
    return defect;
}

std::string ConfluenceReport::str() const {
    if (ok) return "confluent";
    return "overlap (" + std::to_string(upper) + "," + std::to_string(middle) + "," + std::to_string(lower) +
           ") resolves to " + route_a.str() + " and " + route_b.str();
}

PBWAlgebra::PBWAlgebra(PBWPresentation p) : pres_(std::move(p)), has_tails_(pres_.has_tails()) {}

AlgebraPtr PBWAlgebra::create(PBWPresentation p) {
    auto report = check_confluence(p);
    if (!report.ok) {
        const auto& names = p.vars()->names;
        throw NonConfluent("presentation is not confluent: overlap " + names[report.upper] + names[report.middle] +
                           names[report.lower] + " reduces to " + report.route_a.str() + " and to " +
                           report.route_b.str());
    }
    return AlgebraPtr(new PBWAlgebra(std::move(p)));
}

ConfluenceReport check_confluence(const PBWPresentation& p) {
    PBWAlgebra alg(p);
    const int n = static_cast<int>(p.size());
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < j; ++i) {
                Poly xi = alg.gen(i), xj = alg.gen(j), xk = alg.gen(k);
                // x_k x_j first: (q_kj x_j x_k + p_kj) x_i
                Poly a = alg.mul(xj, alg.mul(xk, xi)) * p.q(k, j) + alg.mul(p.tail(k, j), xi);
                // x_j x_i first: x_k (q_ji x_i x_j + p_ji)
                Poly b = alg.mul(alg.mul(xk, xi), xj) * p.q(j, i) + alg.mul(xk, p.tail(j, i));
                if (!(a == b)) return ConfluenceReport{false, k, j, i, a, b};
            }
    return {};
}

bool PBWAlgebra::is_commutative() const {
    if (has_tails_) return false;
    for (std::size_t j = 0; j < ngens(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (!pres_.q(static_cast<int>(j), static_cast<int>(i)).is_one()) return false;
    return true;
}

Poly PBWAlgebra::mono_times_gen(const Monomial& m, int i) const {
    int j = static_cast<int>(m.exps.size()) - 1;
    while (j >= 0 && m.exps[j] == 0) --j;
    Monomial next = m;
    next.exps[i] += 1;
    next.degree += vars()->weights[i];
    if (j <= i) return Poly::term(vars(), std::move(next));
    if (!has_tails_) {
        Scalar c(1);
        for (int k = i + 1; k <= j; ++k)
            if (m.exps[k] > 0) c *= pres_.q(k, i).pow(m.exps[k]);
        return Poly::term(vars(), std::move(next), c);
    }
    auto key = std::make_pair(m, i);
    {
        std::lock_guard lock(memo_mutex_);
        auto it = gen_memo_.find(key);
        if (it != gen_memo_.end()) return it->second;
    }
    // x^m x_i = x^m' (x_j x_i) = q_ji (x^m' x_i) x_j + x^m' p_ji
    Monomial rest = m;
    rest.exps[j] -= 1;
    rest.degree -= vars()->weights[j];
    Poly result = elem_times_gen(mono_times_gen(rest, i), j) * pres_.q(j, i);
    for (const auto& [tm, tc] : pres_.tail(j, i).terms()) result += mono_times_mono(rest, tm) * tc;
    std::lock_guard lock(memo_mutex_);
    gen_memo_.emplace(std::move(key), result);
    return result;
}

Poly PBWAlgebra::elem_times_gen(const Poly& a, int i) const {
    Poly out(vars());
    for (const auto& [m, c] : a.terms()) out += mono_times_gen(m, i) * c;
    return out;
}

Poly PBWAlgebra::mono_times_mono(const Monomial& a, const Monomial& b) const {
    if (b.is_one()) return Poly::term(vars(), a);
    if (a.is_one()) return Poly::term(vars(), b);
    int last_a = static_cast<int>(a.exps.size()) - 1;
    while (last_a >= 0 && a.exps[last_a] == 0) --last_a;
    int first_b = 0;
    while (b.exps[first_b] == 0) ++first_b;
    if (last_a <= first_b) return Poly::term(vars(), mono_mul(a, b));
    if (!has_tails_) {
        Scalar c(1);
        for (std::size_t i = 0; i < b.exps.size(); ++i) {
            if (b.exps[i] == 0) continue;
            for (std::size_t k = i + 1; k < a.exps.size(); ++k)
                if (a.exps[k] > 0) c *= pres_.q(static_cast<int>(k), static_cast<int>(i)).pow(static_cast<long>(a.exps[k]) * b.exps[i]);
        }
        return Poly::term(vars(), mono_mul(a, b), c);
    }
    auto key = std::make_pair(a, b);
    {
        std::lock_guard lock(memo_mutex_);
        auto it = mono_memo_.find(key);
        if (it != mono_memo_.end()) return it->second;
    }
    Poly result = Poly::term(vars(), a);
    for (std::size_t i = 0; i < b.exps.size(); ++i)
        for (int e = 0; e < b.exps[i]; ++e) result = elem_times_gen(result, static_cast<int>(i));
    std::lock_guard lock(memo_mutex_);
    mono_memo_.emplace(std::move(key), result);
    return result;
}

Poly PBWAlgebra::mul(const Poly& a, const Poly& b) const {
    Poly out(vars());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) out += mono_times_mono(ma, mb) * (ca * cb);
    return out;
}

Poly PBWAlgebra::pow(const Poly& a, unsigned long e) const {
    Poly result = one();
    Poly base = a;
    for (; e > 0; e >>= 1) {
        if (e & 1) result = mul(result, base);
        if (e > 1) base = mul(base, base);
    }
    return result;
}

Poly PBWAlgebra::commutator(const Poly& a, const Poly& b) const { return mul(a, b) - mul(b, a); }

Poly PBWAlgebra::parse(std::string_view text) const { return parse(text, {}); }

Poly PBWAlgebra::parse(std::string_view text, const std::map<std::string, Scalar>& params) const {
    auto ast = parse_expr(text);
    EvalOps<Poly> ops;
    ops.number = [&](const mpq_class& q) { return scalar(Scalar(q)); };
    ops.ident = [&](const std::string& name, std::size_t pos) {
        int i = vars()->index_of(name);
        if (i >= 0) return gen(i);
        if (auto it = params.find(name); it != params.end()) return scalar(it->second);
        if (auto z = root_literal(name, order())) return scalar(*z);
        throw ParseError("unknown variable '" + name + "'", pos);
    };
    ops.mul = [&](const Poly& a, const Poly& b) { return mul(a, b); };
    return evaluate(*ast, ops);
}

namespace {

using IntPoly = std::vector<mpz_class>;

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly times(const IntPoly& a, const IntPoly& b) {
    IntPoly out(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

// 1 - t^w
IntPoly one_minus(int w) {
    IntPoly p(w + 1, mpz_class(0));
    p[0] = 1;
    p[w] = -1;
    return p;
}

// Divides by a divisor whose leading coefficient is +-1; false on remainder.
bool divide(IntPoly& num, const IntPoly& den) {
    trim(num);
    if (num.size() < den.size()) return num.empty();
    IntPoly q(num.size() - den.size() + 1, mpz_class(0));
    const mpz_class& lead = den.back();
    for (std::size_t k = num.size(); k-- >= den.size();) {
        std::size_t shift = k - (den.size() - 1);
        mpz_class c = num[k] * lead;  // lead is a unit equal to its inverse
        q[shift] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
        if (k == den.size() - 1) break;
    }
    trim(num);
    if (!num.empty()) return false;
    num = std::move(q);
    trim(num);
    return true;
}

}  // namespace

std::optional<long> hilbert_rank(const PBWPresentation& p, const std::vector<int>& sub_weights) {
    if (!p.is_graded()) throw Error("hilbert_rank needs a graded presentation");
    IntPoly num{mpz_class(1)};
    for (int d : sub_weights) {
        if (d <= 0) throw Error("subalgebra weights must be positive");
        num = times(num, one_minus(d));
    }
    for (int w : p.vars()->weights)
        if (!divide(num, one_minus(w))) return std::nullopt;
    mpz_class total = 0;
    for (const auto& c : num) total += c;
    if (!total.fits_slong_p()) throw Error("rank overflow");
    return total.get_si();
}

PBWPresentation homogenize_presentation(const PBWPresentation& p, const std::string& t_name) {
    std::vector<std::string> names = p.vars()->names;
    std::vector<int> weights = p.vars()->weights;
    if (p.vars()->index_of(t_name) >= 0) throw SchemaError("homogenizing variable " + t_name + " already in use");
    names.push_back(t_name);
    weights.push_back(1);
    VarsPtr vars = make_vars(names, weights);
    PBWPresentation out(vars, p.order());
    const int n = static_cast<int>(p.size());
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            const Poly& tail = p.tail(j, i);
            const Scalar& q = p.q(j, i);
            if (q.is_one() && tail.is_zero()) continue;
            const long d = p.vars()->weights[i] + p.vars()->weights[j];
            Poly h(vars);
            Poly src = remap(tail, vars);
            for (const auto& [m, c] : src.terms()) {
                Monomial mm = m;
                mm.exps[n] += static_cast<int>(d - m.degree);
                mm.degree = d;
                h.add_term(mm, c);
            }
            out.set_relation(j, i, q, h);
        }
    return out;
}

}  // namespace ncdisc
