#include "ncdisc/twist.hpp"

#include "ncdisc/errors.hpp"
#include "ncdisc/expr.hpp"

namespace ncdisc {

TElem& TElem::operator+=(const TElem& rhs) {
    for (const auto& [m, p] : rhs.parts) {
        auto it = parts.find(m);
        if (it == parts.end()) {
            parts.emplace(m, p);
        } else {
            it->second += p;
            if (it->second.is_zero()) parts.erase(it);
        }
    }
    return *this;
}

TElem& TElem::operator-=(const TElem& rhs) { return *this += -rhs; }

TElem& TElem::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        parts.clear();
        return *this;
    }
    for (auto& [m, p] : parts) p *= c;
    return *this;
}

TElem TElem::operator-() const {
    TElem out = *this;
    for (auto& [m, p] : out.parts) p = -p;
    return out;
}

TwistedAlgebra::TwistedAlgebra(MonoidAction action) : action_(std::move(action)) {
    if (monoid().is_numerical()) {
        auto names = base()->vars()->names;
        auto weights = base()->vars()->weights;
        if (base()->vars()->index_of(monoid().var()) >= 0)
            throw SchemaError("monoid variable " + monoid().var() + " clashes with a generator");
        names.push_back(monoid().var());
        weights.push_back(monoid().weight());
        ambient_ = make_vars(names, weights);
    } else {
        for (std::size_t g = 0; g < monoid().size(); ++g)
            if (base()->vars()->index_of(monoid().label(static_cast<long>(g))) >= 0)
                throw SchemaError("group label " + monoid().label(static_cast<long>(g)) + " clashes with a generator");
        ambient_ = base()->vars();
    }
}

TwistedPtr TwistedAlgebra::create(MonoidAction action) { return std::make_shared<TwistedAlgebra>(std::move(action)); }

TwistedPtr TwistedAlgebra::plain(AlgebraPtr base) { return create(MonoidAction::trivial(std::move(base))); }

TElem TwistedAlgebra::element(const Poly& a, long m) const {
    if (!monoid().contains(m)) throw Error("element " + std::to_string(m) + " is not in the monoid");
    TElem e;
    Poly p = remap(a, base()->vars());
    if (!p.is_zero()) e.parts.emplace(m, std::move(p));
    return e;
}

TElem TwistedAlgebra::mul(const TElem& a, const TElem& b) const {
    TElem out;
    for (const auto& [g, pa] : a.parts)
        for (const auto& [h, pb] : b.parts) {
            const AlgebraMap& rho = action_.act(g);
            TElem term;
            Poly prod = base()->mul(pa, rho.apply(pb));
            if (!prod.is_zero()) term.parts.emplace(monoid().op(g, h), std::move(prod));
            out += term;
        }
    return out;
}

TElem TwistedAlgebra::pow(const TElem& a, unsigned long e) const {
    TElem result = one();
    TElem b = a;
    for (; e > 0; e >>= 1) {
        if (e & 1) result = mul(result, b);
        if (e > 1) b = mul(b, b);
    }
    return result;
}

std::vector<TElem> TwistedAlgebra::generators() const {
    std::vector<TElem> out;
    for (std::size_t i = 0; i < base()->ngens(); ++i) out.push_back(embed(base()->gen(static_cast<int>(i))));
    for (int g : monoid().generators()) out.push_back(monoid_element(g));
    return out;
}

std::vector<std::string> TwistedAlgebra::generator_names() const {
    std::vector<std::string> out = base()->vars()->names;
    for (int g : monoid().generators()) out.push_back(monoid().label(g));
    return out;
}

long TwistedAlgebra::term_degree(const Monomial& a, long m) const {
    return a.degree + (monoid().is_numerical() ? m * monoid().weight() : 0);
}

long TwistedAlgebra::degree(const TElem& e) const {
    long d = -1;
    for (const auto& [m, p] : e.parts)
        for (const auto& [mono, c] : p.terms()) d = std::max(d, term_degree(mono, m));
    return d;
}

TElem TwistedAlgebra::component(const TElem& e, long d) const {
    TElem out;
    for (const auto& [m, p] : e.parts) {
        Poly c(base()->vars());
        for (const auto& [mono, v] : p.terms())
            if (term_degree(mono, m) == d) c.add_term(mono, v);
        if (!c.is_zero()) out.parts.emplace(m, std::move(c));
    }
    return out;
}

std::vector<std::pair<Monomial, long>> TwistedAlgebra::monomials_of_degree(long d) const {
    std::vector<std::pair<Monomial, long>> out;
    const auto& vars = *base()->vars();
    if (monoid().is_numerical()) {
        const long w = monoid().weight();
        for (long k = 0; k * w <= d; ++k) {
            if (!monoid().contains(k)) continue;
            for (auto& m : ncdisc::monomials_of_degree(vars, d - k * w)) out.emplace_back(std::move(m), k);
        }
    } else {
        auto base_monos = ncdisc::monomials_of_degree(vars, d);
        for (long g = 0; g < static_cast<long>(monoid().size()); ++g)
            for (const auto& m : base_monos) out.emplace_back(m, g);
    }
    return out;
}

Poly TwistedAlgebra::commutative_image(const TElem& e) const {
    Poly out(ambient_);
    for (const auto& [m, p] : e.parts) {
        if (!monoid().is_numerical()) {
            if (m != 0) throw Error("element " + str(e) + " has parts outside the base algebra");
            return remap(p, ambient_);
        }
        for (const auto& [mono, c] : p.terms()) {
            std::vector<int> exps = mono.exps;
            exps.push_back(static_cast<int>(m));
            out.add_term(make_monomial(*ambient_, std::move(exps)), c);
        }
    }
    return out;
}

std::string TwistedAlgebra::str(const TElem& e) const {
    if (e.is_zero()) return "0";
    std::string out;
    for (const auto& [m, p] : e.parts) {
        std::string piece;
        bool bare = monoid().is_numerical() && m == 0;
        if (bare || (is_plain() && m == 0)) {
            piece = p.str();
        } else if (p.is_constant() && p.constant_term().is_one() && monoid().is_numerical()) {
            piece = monoid().label(m);
        } else {
            std::string ps = p.str();
            if (p.size() > 1) ps = "(" + ps + ")";
            piece = ps + "#" + monoid().label(m);
        }
        if (out.empty()) {
            out = piece;
        } else if (piece[0] == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out;
}

TElem TwistedAlgebra::parse(std::string_view text, const std::map<std::string, Scalar>& params) const {
    auto ast = parse_expr(text, true);
    EvalOps<TElem> ops;
    ops.number = [&](const mpq_class& q) { return scalar(Scalar(q)); };
    ops.ident = [&](const std::string& name, std::size_t pos) {
        int i = base()->vars()->index_of(name);
        if (i >= 0) return embed(base()->gen(i));
        if (monoid().is_numerical() ? name == monoid().var() : monoid().find(name).has_value()) {
            auto m = monoid().find(name);
            if (!m) throw ParseError(name + " is not an element of the monoid", pos);
            return monoid_element(*m);
        }
        if (auto it = params.find(name); it != params.end()) return scalar(it->second);
        if (auto z = root_literal(name, base()->order())) return scalar(*z);
        throw ParseError("unknown variable '" + name + "'", pos);
    };
    ops.ident_power = [&](const std::string& name, unsigned long k, std::size_t pos) -> std::optional<TElem> {
        if (!monoid().is_numerical() || name != monoid().var() || base()->vars()->index_of(name) >= 0)
            return std::nullopt;
        if (!monoid().contains(static_cast<long>(k)))
            throw ParseError(name + "^" + std::to_string(k) + " is not an element of the monoid", pos);
        return monoid_element(static_cast<long>(k));
    };
    ops.mul = [&](const TElem& a, const TElem& b) { return mul(a, b); };
    return evaluate(*ast, ops);
}

std::optional<TElem> central_violation(const TwistedAlgebra& t, const TElem& e) {
    for (const auto& g : t.generators()) {
        TElem c = t.commutator(e, g);
        if (!c.is_zero()) return c;
    }
    return std::nullopt;
}

std::vector<CenterComponent> ore_center_decompose(const TwistedAlgebra& t, long degree_cap, long power_cap) {
    const Monoid& m = t.monoid();
    if (!m.is_numerical()) throw SchemaError("center decomposition needs a numerical monoid");
    std::vector<AlgebraMap> fixed_by;
    for (int g : m.generators()) fixed_by.push_back(t.action().act(g));
    std::vector<CenterComponent> out;
    for (long i = 0; i <= power_cap; ++i) {
        if (!m.contains(i)) continue;
        out.push_back({i, normal_space(t.action().act(i), degree_cap, fixed_by)});
    }
    return out;
}

}  // namespace ncdisc
