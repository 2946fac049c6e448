#include "ncdisc/scalar.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ncdisc {

namespace {

using QPoly = std::vector<mpq_class>;  // lowest degree first

void trim(QPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Reduces p modulo the monic polynomial m (given over Z).
void reduce_mod(QPoly& p, const std::vector<mpz_class>& m) {
    const std::size_t deg = m.size() - 1;
    for (std::size_t i = p.size(); i-- > deg;) {
        if (sgn(p[i]) == 0) continue;
        mpq_class c = p[i];
        for (std::size_t j = 0; j <= deg; ++j) p[i - deg + j] -= c * mpq_class(m[j]);
    }
    if (p.size() > deg) p.resize(deg);
    trim(p);
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    trim(out);
    return out;
}

// Quotient and remainder of a by nonzero b.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
    QPoly q;
    trim(a);
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, mpq_class(0));
    while (!a.empty() && a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        mpq_class c = a.back() / b.back();
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
        trim(a);
    }
    trim(q);
    return {q, a};
}

}  // namespace

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<mpz_class>& cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
    static std::mutex mutex;
    static std::map<int, std::vector<mpz_class>> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    // x^n - 1 divided by every Phi_d with d | n, d < n.
    std::vector<mpz_class> num(n + 1, mpz_class(0));
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const auto& den = cyclotomic_polynomial(d);
        std::size_t dd = den.size() - 1;
        std::vector<mpz_class> q(num.size() - dd, mpz_class(0));
        for (std::size_t i = num.size(); i-- > dd;) {
            mpz_class c = num[i];
            q[i - dd] = c;
            for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
        }
        num = std::move(q);
    }
    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(num)).first->second;
}

Scalar::Scalar(mpq_class value) : head_(std::move(value)) { head_.canonicalize(); }

Scalar Scalar::root_of_unity(int order, long power) {
    if (order < 1) throw std::invalid_argument("root of unity order must be positive");
    long p = ((power % order) + order) % order;
    std::vector<mpq_class> coeffs(p + 1, mpq_class(0));
    coeffs[p] = 1;
    return from_powers(order, std::move(coeffs));
}

Scalar Scalar::from_powers(int order, std::vector<mpq_class> coeffs) {
    Scalar s;
    s.assign_full(order, std::move(coeffs));
    return s;
}

void Scalar::assign_full(int order, std::vector<mpq_class> coeffs) {
    if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
    reduce_mod(coeffs, cyclotomic_polynomial(order));
    head_ = coeffs.empty() ? mpq_class(0) : coeffs[0];
    tail_.clear();
    if (coeffs.size() > 1) tail_.assign(coeffs.begin() + 1, coeffs.end());
    order_ = order;
    normalize();
}

void Scalar::normalize() {
    while (!tail_.empty() && sgn(tail_.back()) == 0) tail_.pop_back();
    if (tail_.empty()) order_ = 1;
}

std::vector<mpq_class> Scalar::full() const {
    std::vector<mpq_class> v;
    v.reserve(tail_.size() + 1);
    v.push_back(head_);
    v.insert(v.end(), tail_.begin(), tail_.end());
    return v;
}

void Scalar::embed(int new_order) {
    if (new_order == order_ || tail_.empty()) return;
    const int step = new_order / order_;
    std::vector<mpq_class> v;
    std::vector<mpq_class> f = full();
    v.assign((f.size() - 1) * step + 1, mpq_class(0));
    for (std::size_t i = 0; i < f.size(); ++i) v[i * step] = f[i];
    assign_full(new_order, std::move(v));
    order_ = new_order;  // keep the requested order even if the value became rational
}

const mpq_class& Scalar::rational() const {
    if (!tail_.empty()) throw std::domain_error("scalar " + str() + " is not rational");
    return head_;
}

std::vector<mpq_class> Scalar::coefficients() const {
    std::vector<mpq_class> v = full();
    v.resize(static_cast<std::size_t>(euler_phi(order_)), mpq_class(0));
    return v;
}

std::size_t Scalar::term_count() const {
    std::size_t n = sgn(head_) != 0 ? 1 : 0;
    for (const auto& c : tail_) n += sgn(c) != 0 ? 1 : 0;
    return n;
}

bool Scalar::is_negative_term() const {
    if (term_count() != 1) return false;
    if (sgn(head_) != 0) return sgn(head_) < 0;
    for (const auto& c : tail_)
        if (sgn(c) != 0) return sgn(c) < 0;
    return false;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.head_ = -r.head_;
    for (auto& c : r.tail_) c = -c;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    if (rhs.tail_.empty()) {
        head_ += rhs.head_;
        return *this;
    }
    if (tail_.empty() || order_ == rhs.order_) {
        order_ = rhs.order_;
        head_ += rhs.head_;
        if (tail_.size() < rhs.tail_.size()) tail_.resize(rhs.tail_.size(), mpq_class(0));
        for (std::size_t i = 0; i < rhs.tail_.size(); ++i) tail_[i] += rhs.tail_[i];
        normalize();
        return *this;
    }
    const int l = std::lcm(order_, rhs.order_);
    Scalar other = rhs;
    embed(l);
    other.embed(l);
    return *this += other;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
    if (rhs.tail_.empty()) {
        head_ *= rhs.head_;
        for (auto& c : tail_) c *= rhs.head_;
        normalize();
        return *this;
    }
    if (tail_.empty()) {
        mpq_class h = head_;
        *this = rhs;
        return *this *= Scalar(h);
    }
    const int l = std::lcm(order_, rhs.order_);
    Scalar a = *this;
    Scalar b = rhs;
    a.embed(l);
    b.embed(l);
    assign_full(l, mul(a.full(), b.full()));
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero scalar");
    if (tail_.empty()) return Scalar(1 / head_);
    // Extended Euclid: find u with u * a = 1 mod Phi_N.
    const auto& phi_z = cyclotomic_polynomial(order_);
    QPoly m(phi_z.begin(), phi_z.end());
    QPoly a = full();
    QPoly r0 = m, r1 = a;
    QPoly s0, s1{mpq_class(1)};  // coefficients of a
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        QPoly s2 = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant because Phi_N is irreducible.
    mpq_class inv = 1 / r0[0];
    for (auto& c : s0) c *= inv;
    return from_powers(order_, std::move(s0));
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

Scalar Scalar::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    Scalar result(1), base = *this;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent) base *= base;
    }
    return result;
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
    if (lhs.tail_.empty() != rhs.tail_.empty()) return false;
    if (lhs.tail_.empty()) return lhs.head_ == rhs.head_;
    if (lhs.order_ == rhs.order_) return lhs.head_ == rhs.head_ && lhs.tail_ == rhs.tail_;
    return (lhs - rhs).is_zero();
}

std::string Scalar::str() const {
    if (tail_.empty()) return head_.get_str();
    std::ostringstream os;
    std::vector<mpq_class> f = full();
    bool first = true;
    for (std::size_t k = f.size(); k-- > 0;) {
        const mpq_class& c = f[k];
        if (sgn(c) == 0) continue;
        if (first) {
            if (sgn(c) < 0) os << '-';
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        mpq_class mag = abs(c);
        if (k == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << '*';
            os << 'z' << order_;
            if (k > 1) os << '^' << k;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace ncdisc
