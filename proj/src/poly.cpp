#include "ncdisc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "ncdisc/errors.hpp"
#include "ncdisc/expr.hpp"

namespace ncdisc {

int Variables::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

VarsPtr make_vars(std::vector<std::string> names, std::vector<int> weights) {
    if (weights.empty()) weights.assign(names.size(), 1);
    if (weights.size() != names.size()) throw Error("weight count does not match variable count");
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (weights[i] <= 0) throw Error("variable weights must be positive: " + names[i]);
        for (std::size_t j = 0; j < i; ++j)
            if (names[i] == names[j]) throw Error("duplicate variable name " + names[i]);
    }
    return std::make_shared<const Variables>(Variables{std::move(names), std::move(weights)});
}

bool same_vars(const Variables& a, const Variables& b) {
    return &a == &b || (a.names == b.names && a.weights == b.weights);
}

Monomial make_monomial(const Variables& vars, std::vector<int> exps) {
    if (exps.size() != vars.size()) throw Error("monomial length does not match variables");
    long d = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0) throw Error("negative exponent");
        d += static_cast<long>(vars.weights[i]) * exps[i];
    }
    return Monomial{d, std::move(exps)};
}

Monomial mono_one(const Variables& vars) { return Monomial{0, std::vector<int>(vars.size(), 0)}; }

Monomial mono_var(const Variables& vars, int index, int power) {
    Monomial m = mono_one(vars);
    m.exps[index] = power;
    m.degree = static_cast<long>(vars.weights[index]) * power;
    return m;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] += b.exps[i];
    m.degree += b.degree;
    return m;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] > b.exps[i]) return false;
    return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial m = b;
    for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] -= a.exps[i];
    m.degree -= a.degree;
    return m;
}

namespace {

void enumerate(const Variables& vars, std::size_t i, long remaining, std::vector<int>& exps,
               std::vector<Monomial>& out, long total) {
    if (i == vars.size()) {
        if (remaining == 0) out.push_back(Monomial{total, exps});
        return;
    }
    const int w = vars.weights[i];
    for (int e = static_cast<int>(remaining / w); e >= 0; --e) {
        exps[i] = e;
        enumerate(vars, i + 1, remaining - static_cast<long>(e) * w, exps, out, total);
    }
    exps[i] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const Variables& vars, long d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    std::vector<int> exps(vars.size(), 0);
    enumerate(vars, 0, d, exps, out, d);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::string mono_str(const Variables& vars, const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
        if (m.exps[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += vars.names[i];
        if (m.exps[i] > 1) s += '^' + std::to_string(m.exps[i]);
    }
    return s.empty() ? "1" : s;
}

Poly::Poly(VarsPtr vars, const Scalar& c) : vars_(std::move(vars)) {
    if (!vars_) throw Error("constant polynomial needs a variable set");
    if (!c.is_zero()) terms_.emplace(mono_one(*vars_), c);
}

Poly Poly::variable(VarsPtr vars, int index) {
    Monomial m = mono_var(*vars, index);
    return term(std::move(vars), std::move(m));
}

Poly Poly::term(VarsPtr vars, Monomial m, const Scalar& c) {
    Poly p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
    return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

Scalar Poly::constant_term() const {
    if (terms_.empty()) return Scalar(0);
    auto it = terms_.rbegin();
    return it->first.is_one() ? it->second : Scalar(0);
}

Scalar Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

Poly Poly::component(long d) const {
    Poly p(vars_);
    for (const auto& [m, c] : terms_)
        if (m.degree == d) p.terms_.emplace(m, c);
    return p;
}

bool Poly::is_homogeneous() const {
    return terms_.empty() || terms_.begin()->first.degree == terms_.rbegin()->first.degree;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Poly::check_vars(const Poly& other) const {
    if (!vars_ || !other.vars_) {
        if (vars_ == other.vars_) return;
        // A default-constructed Poly is a variable-free zero; it mixes with anything.
        if (!vars_ && terms_.empty()) return;
        if (!other.vars_ && other.terms_.empty()) return;
        throw Error("variable-set mismatch");
    }
    if (!same_vars(*vars_, *other.vars_)) throw Error("variable-set mismatch");
}

Poly& Poly::operator+=(const Poly& rhs) {
    check_vars(rhs);
    if (!vars_) vars_ = rhs.vars_;
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    check_vars(rhs);
    if (!vars_) vars_ = rhs.vars_;
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_vars(b);
    Poly out(a.vars_ ? a.vars_ : b.vars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
    return out;
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& [m, v] : p.terms_) v = -v;
    return p;
}

Poly Poly::pow(unsigned long e) const {
    Poly result(vars_, Scalar(1));
    Poly base = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1) result *= base;
        if (e > 1) base *= base;
    }
    return result;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.empty() && b.terms_.empty()) return true;
    a.check_vars(b);
    return a.terms_ == b.terms_;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool neg = c.is_negative_term();
        Scalar mag = neg ? -c : c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        if (m.is_one()) {
            if (mag.is_compound() && terms_.size() > 1)
                os << '(' << mag.str() << ')';
            else
                os << mag.str();
        } else {
            if (mag.is_compound())
                os << '(' << mag.str() << ")*";
            else if (!mag.is_one())
                os << mag.str() << '*';
            os << mono_str(*vars_, m);
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

Poly substitute(const Poly& p, const std::vector<Poly>& images, VarsPtr target) {
    if (p.vars() && images.size() != p.vars()->size()) throw Error("substitution arity mismatch");
    Poly out(target);
    std::vector<std::vector<Poly>> powers(images.size());
    auto power = [&](std::size_t i, int e) -> const Poly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Poly(target, Scalar(1)));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * remap(images[i], target));
        return cache[e];
    };
    for (const auto& [m, c] : p.terms()) {
        Poly t(target, c);
        for (std::size_t i = 0; i < m.exps.size(); ++i)
            if (m.exps[i] > 0) t *= power(i, m.exps[i]);
        out += t;
    }
    return out;
}

Poly remap(const Poly& p, VarsPtr target) {
    if (!p.vars() || same_vars(*p.vars(), *target)) {
        Poly r(target);
        for (const auto& [m, c] : p.terms()) r.add_term(m, c);
        return r;
    }
    const Variables& src = *p.vars();
    std::vector<int> where(src.size(), -1);
    for (std::size_t i = 0; i < src.size(); ++i) where[i] = target->index_of(src.names[i]);
    Poly out(target);
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> exps(target->size(), 0);
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            if (m.exps[i] == 0) continue;
            if (where[i] < 0) throw Error("variable " + src.names[i] + " missing from target");
            exps[where[i]] += m.exps[i];
        }
        out.add_term(make_monomial(*target, std::move(exps)), c);
    }
    return out;
}

Poly exact_div(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error("division by zero polynomial");
    Poly q(a.vars() ? a.vars() : b.vars());
    Poly r = a;
    const Monomial& lb = b.leading_monomial();
    const Scalar lc_inv = b.leading_coefficient().inverse();
    while (!r.is_zero()) {
        const Monomial& lr = r.leading_monomial();
        if (!mono_divides(lb, lr)) throw Error("inexact polynomial division");
        Monomial m = mono_div(lr, lb);
        Scalar c = r.leading_coefficient() * lc_inv;
        q.add_term(m, c);
        for (const auto& [mb, cb] : b.terms()) r.add_term(mono_mul(m, mb), -(c * cb));
    }
    return q;
}

Poly normalize(const Poly& p) {
    if (p.is_zero()) return p;
    return p * p.leading_coefficient().inverse();
}

std::optional<Scalar> eq_up_to_scalar(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return Scalar(1);
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    if (!same_vars(*a.vars(), *b.vars())) {
        try {
            return eq_up_to_scalar(a, remap(b, a.vars()));
        } catch (const Error&) {
            return std::nullopt;
        }
    }
    if (a.size() != b.size()) return std::nullopt;
    Scalar c = a.leading_coefficient() / b.leading_coefficient();
    auto ia = a.terms().begin();
    for (auto ib = b.terms().begin(); ib != b.terms().end(); ++ia, ++ib) {
        if (ia->first != ib->first) return std::nullopt;
        if (ia->second != c * ib->second) return std::nullopt;
    }
    return c;
}

Poly homogenize(const Poly& p, VarsPtr target, std::string_view t_name) {
    const int t = target->index_of(t_name);
    if (t < 0) throw Error("homogenizing variable missing from target");
    if (target->weights[t] != 1) throw Error("homogenizing variable must have weight 1");
    Poly src = remap(p, target);
    if (src.is_zero()) return src;
    const long d = src.degree();
    Poly out(target);
    for (const auto& [m, c] : src.terms()) {
        Monomial mm = m;
        mm.exps[t] += static_cast<int>(d - m.degree);
        mm.degree = d;
        out.add_term(mm, c);
    }
    return out;
}

Poly bareiss_det(const PolyMatrix& input) {
    const std::size_t n = input.size();
    for (const auto& row : input)
        if (row.size() != n) throw Error("determinant of a non-square matrix");
    if (n == 0) throw Error("determinant of an empty matrix");
    VarsPtr vars;
    for (const auto& row : input)
        for (const auto& e : row)
            if (!vars && e.vars()) vars = e.vars();
    if (!vars) vars = make_vars({});
    PolyMatrix m = input;
    Poly prev(vars, Scalar(1));
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = n;
        for (std::size_t i = k; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            if (pivot == n || m[i][k].size() < m[pivot][k].size()) pivot = i;
        }
        if (pivot == n) return Poly(vars);
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = k == 0 ? std::move(v) : exact_div(v, prev);
            }
            m[i][k] = Poly(vars);
        }
        prev = m[k][k];
    }
    Poly d = m[n - 1][n - 1];
    if (!d.vars()) d = Poly(vars) + d;
    return negate ? -d : d;
}

Poly cofactor_det(const PolyMatrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw Error("determinant of a non-square matrix");
    if (n == 0) return Poly();
    if (n == 1) return m[0][0];
    Poly total;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        PolyMatrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Poly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Poly t = m[0][j] * cofactor_det(minor);
        if (j % 2) total -= t;
        else
            total += t;
    }
    return total;
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.empty()) return {};
    const std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    for (const auto& row : a)
        if (row.size() != k) throw Error("matrix shape mismatch");
    PolyMatrix out(n, std::vector<Poly>(p));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < p; ++j) {
            Poly s;
            for (std::size_t l = 0; l < k; ++l) s += a[i][l] * b[l][j];
            out[i][j] = std::move(s);
        }
    return out;
}

PolyMatrix transpose(const PolyMatrix& m) {
    if (m.empty()) return {};
    PolyMatrix t(m[0].size(), std::vector<Poly>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

std::optional<Scalar> root_literal(std::string_view name, int order) {
    if (name.size() < 2 || name[0] != 'z') return std::nullopt;
    for (std::size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    if (name.size() > 7) return std::nullopt;
    int k = std::stoi(std::string(name.substr(1)));
    if (k < 1 || order % k != 0) return std::nullopt;
    return Scalar::root_of_unity(k);
}

Poly parse_poly(std::string_view text, VarsPtr vars, int order) {
    auto ast = parse_expr(text);
    EvalOps<Poly> ops;
    ops.number = [&](const mpq_class& q) { return Poly(vars, Scalar(q)); };
    ops.ident = [&](const std::string& name, std::size_t pos) {
        int i = vars->index_of(name);
        if (i >= 0) return Poly::variable(vars, i);
        if (auto z = root_literal(name, order)) return Poly(vars, *z);
        throw ParseError("unknown variable '" + name + "'", pos);
    };
    ops.mul = [](const Poly& a, const Poly& b) { return a * b; };
    return evaluate(*ast, ops);
}

}  // namespace ncdisc
