#include "ncdisc/autcheck.hpp"

#include <algorithm>

#include "ncdisc/errors.hpp"

namespace ncdisc {

Scalar parse_scalar(std::string_view text, int order) {
    Poly p = parse_poly(text, make_vars({}), order);
    if (!p.is_constant()) throw ParseError("not a scalar: " + std::string(text), 0);
    return p.constant_term();
}

TwistedMap::TwistedMap(TwistedPtr t, std::vector<TElem> images) : t_(std::move(t)), images_(std::move(images)) {
    const Monoid& m = t_->monoid();
    if (m.is_numerical() && m.generators() != std::vector<int>{1})
        throw SchemaError("maps of twisted algebras need M = N or a finite group");
    if (images_.size() != t_->generator_names().size()) throw SchemaError("map needs one image per generator");
}

TwistedMap TwistedMap::identity(TwistedPtr t) {
    auto gens = t->generators();
    return TwistedMap(std::move(t), std::move(gens));
}

TwistedMap TwistedMap::parse(TwistedPtr t, const std::map<std::string, std::string>& images,
                             const std::map<std::string, Scalar>& params) {
    auto names = t->generator_names();
    for (const auto& [p, v] : params) {
        bool clash = std::find(names.begin(), names.end(), p) != names.end() || t->monoid().find(p).has_value() ||
                     (t->monoid().is_numerical() && p == t->monoid().var());
        if (clash) throw SchemaError("parameter " + p + " collides with a generator or monoid label");
    }
    auto out = t->generators();
    for (const auto& [name, text] : images) {
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) throw SchemaError("map names unknown generator '" + name + "'");
        out[it - names.begin()] = t->parse(text, params);
    }
    return TwistedMap(std::move(t), std::move(out));
}

TElem TwistedMap::monoid_image(long m) const {
    const std::size_t nb = t_->base()->ngens();
    const Monoid& mon = t_->monoid();
    if (mon.is_numerical()) return t_->pow(images_[nb], static_cast<unsigned long>(m));
    TElem out = t_->one();
    const auto& gens = mon.generators();
    for (int s : t_->action().words()[m]) {
        auto k = std::find(gens.begin(), gens.end(), s) - gens.begin();
        out = t_->mul(out, images_[nb + k]);
    }
    return out;
}

TElem TwistedMap::apply(const TElem& e) const {
    TElem out;
    for (const auto& [m, p] : e.parts) {
        TElem g = monoid_image(m);
        for (const auto& [mono, c] : p.terms()) {
            TElem img = t_->one();
            for (std::size_t i = 0; i < mono.exps.size(); ++i)
                if (mono.exps[i] > 0) img = t_->mul(img, t_->pow(images_[i], mono.exps[i]));
            out += t_->mul(img, g) * c;
        }
    }
    return out;
}

TwistedMap TwistedMap::compose(const TwistedMap& inner) const {
    std::vector<TElem> images;
    for (const auto& g : inner.images_) images.push_back(apply(g));
    return TwistedMap(t_, std::move(images));
}

std::string TwistedMap::str() const {
    auto names = t_->generator_names();
    std::string s;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) s += ", ";
        s += names[i] + " -> " + t_->str(images_[i]);
    }
    return s;
}

std::optional<Residue> endomorphism_residue(const TwistedMap& phi) {
    const auto& t = phi.algebra();
    const auto& base = t->base();
    const auto& pres = base->presentation();
    const auto& names = base->vars()->names;
    const auto& img = phi.images();
    const std::size_t nb = base->ngens();
    for (std::size_t j = 0; j < nb; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            int jj = static_cast<int>(j), ii = static_cast<int>(i);
            TElem r = t->mul(img[j], img[i]) - t->mul(img[i], img[j]) * pres.q(jj, ii) -
                      phi.apply(t->embed(pres.tail(jj, ii)));
            if (!r.is_zero()) return Residue{names[j] + names[i], r};
        }
    const Monoid& m = t->monoid();
    const auto gen_names = t->generator_names();
    for (std::size_t k = 0; k < m.generators().size(); ++k) {
        int s = m.generators()[k];
        const TElem& sx = img[nb + k];
        for (std::size_t i = 0; i < nb; ++i) {
            Poly moved = t->action().act(s).apply(base->gen(static_cast<int>(i)));
            TElem r = t->mul(sx, img[i]) - t->mul(phi.apply(t->embed(moved)), sx);
            if (!r.is_zero()) return Residue{gen_names[nb + k] + names[i], r};
        }
    }
    if (!m.is_numerical()) {
        for (int s : m.generators())
            for (long h = 0; h < static_cast<long>(m.size()); ++h) {
                TElem lhs = phi.apply(t->monoid_element(m.op(s, h)));
                TElem rhs = t->mul(phi.apply(t->monoid_element(s)), phi.apply(t->monoid_element(h)));
                if (!(lhs == rhs)) return Residue{m.label(s) + "*" + m.label(h), lhs - rhs};
            }
    }
    return std::nullopt;
}

AutomorphismReport check_automorphism(const TwistedMap& phi) {
    AutomorphismReport rep;
    const auto& t = phi.algebra();
    long top = 0;
    for (const auto& g : t->generators()) top = std::max(top, t->degree(g));
    std::vector<std::pair<Monomial, long>> monos;
    for (long d = 0; d <= top; ++d)
        for (auto& mm : t->monomials_of_degree(d)) monos.push_back(std::move(mm));
    std::map<std::pair<long, Monomial>, std::size_t> index;
    for (std::size_t i = 0; i < monos.size(); ++i) index[{monos[i].second, monos[i].first}] = i;
    const std::size_t n = monos.size();
    auto element = [&](std::size_t i) {
        return t->element(Poly::term(t->base()->vars(), monos[i].first), monos[i].second);
    };

    Mat l(n, Vec(n, Scalar(0)));
    for (std::size_t c = 0; c < n; ++c) {
        TElem img = phi.apply(element(c));
        for (const auto& [m, p] : img.parts)
            for (const auto& [mono, v] : p.terms()) {
                auto it = index.find({m, mono});
                if (it == index.end()) {
                    rep.reason = "not affine: image of " + t->str(element(c)) + " is " + t->str(img);
                    return rep;
                }
                l[it->second][c] = v;
            }
    }
    rep.det = determinant(l);
    auto inv = inverse(l);
    if (!inv) {
        rep.reason = "not invertible: the map is singular on the generating subspace";
        return rep;
    }
    std::vector<TElem> images;
    for (const auto& g : t->generators()) {
        // g is a single monomial of V
        const auto& [m, p] = *g.parts.begin();
        std::size_t k = index.at({m, p.leading_monomial()});
        TElem psi;
        for (std::size_t r = 0; r < n; ++r)
            if (!(*inv)[r][k].is_zero()) psi += element(r) * (*inv)[r][k];
        images.push_back(std::move(psi));
    }
    TwistedMap psi(t, std::move(images));
    if (auto r = endomorphism_residue(psi)) {
        rep.reason = "inverse candidate violates relation " + r->relation + ": " + t->str(r->value);
        return rep;
    }
    auto gens = t->generators();
    for (const auto& g : gens) {
        if (!(phi.apply(psi.apply(g)) == g) || !(psi.apply(phi.apply(g)) == g)) {
            rep.reason = "inverse candidate fails on generator " + t->str(g);
            return rep;
        }
    }
    rep.ok = true;
    rep.inverse = std::move(psi);
    return rep;
}

DiscReport preserves_disc_ideal(const TwistedMap& phi, const FreeModule& f, const Discriminant& d) {
    DiscReport rep;
    const auto& t = f.ambient();
    std::size_t one = f.rank();
    for (std::size_t i = 0; i < f.rank(); ++i)
        if (f.basis()[i] == t->one()) one = i;
    if (one == f.rank()) throw SchemaError("basis must contain 1 to express central images");
    std::vector<Poly> images;
    const auto& gens = f.central().gens;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        auto coords = f.express(phi.apply(gens[k]));
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (i != one && !coords[i].is_zero()) {
                rep.detail = "image of " + f.rvars()->names[k] + " leaves R";
                return rep;
            }
        images.push_back(coords[one]);
    }
    Poly raw = remap(d.raw, f.rvars());
    rep.image = substitute(raw, images, f.rvars());
    rep.witness = eq_up_to_scalar(rep.image, raw);
    rep.ok = rep.witness.has_value();
    rep.detail = rep.ok ? "phi(d) = " + rep.witness->str() + " * d" : "phi(d) = " + rep.image.str();
    return rep;
}

std::vector<SampleResult> family_verify(const FreeModule& f, const Discriminant& d,
                                        const std::map<std::string, std::string>& images,
                                        const std::vector<Sample>& samples) {
    const auto& t = f.ambient();
    std::vector<SampleResult> out;
    for (const auto& s : samples) {
        SampleResult r;
        r.params = s.params;
        r.expect_pass = s.expect_pass;
        std::map<std::string, Scalar> values;
        for (const auto& [k, v] : s.params) values[k] = parse_scalar(v, t->base()->order());
        TwistedMap phi = TwistedMap::parse(t, images, values);
        std::vector<std::string> notes;
        if (auto res = endomorphism_residue(phi)) {
            notes.push_back("relation " + res->relation + " maps to " + t->str(res->value));
        } else {
            r.endomorphism = true;
        }
        try {
            auto a = check_automorphism(phi);
            r.automorphism = a.ok;
            if (!a.ok) notes.push_back(a.reason);
        } catch (const Error& e) {
            notes.push_back(e.what());
        }
        try {
            auto dr = preserves_disc_ideal(phi, f, d);
            r.disc = dr.ok;
            notes.push_back(dr.detail);
        } catch (const Error& e) {
            notes.push_back(e.what());
        }
        for (const auto& n : notes) r.detail += (r.detail.empty() ? "" : "; ") + n;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace ncdisc
