#include "ncdisc/disc.hpp"

#include <atomic>
#include <exception>
#include <thread>

#include "ncdisc/errors.hpp"

namespace ncdisc {

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    next = n;
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

Discriminant make_discriminant(Poly raw, Poly ambient, std::string method, std::vector<std::string> certificates) {
    Discriminant d;
    d.normalized = normalize(raw);
    d.ambient_normalized = normalize(ambient);
    d.raw = std::move(raw);
    d.ambient = std::move(ambient);
    d.method = std::move(method);
    d.certificates = std::move(certificates);
    return d;
}

ElementMap base_map(const TwistedAlgebra& t, const AlgebraMap& sigma) {
    if (sigma.algebra() != t.base()) throw SchemaError("map is over a different algebra");
    return [sigma](const TElem& e) {
        TElem out;
        for (const auto& [m, p] : e.parts) {
            TElem part;
            Poly img = sigma.apply(p);
            if (!img.is_zero()) part.parts.emplace(m, std::move(img));
            out += part;
        }
        return out;
    };
}

PolyMatrix left_mult_matrix(const FreeModule& f, const TElem& b) {
    const std::size_t n = f.rank();
    PolyMatrix m(n, std::vector<Poly>(n));
    for (std::size_t j = 0; j < n; ++j) {
        auto coords = f.express(f.ambient()->mul(b, f.basis()[j]));
        for (std::size_t i = 0; i < n; ++i) m[i][j] = coords[i];
    }
    return m;
}

PolyMatrix trace_form(const FreeModule& f, const ElementMap* sigma) {
    const auto& t = f.ambient();
    const std::size_t n = f.rank();
    std::vector<TElem> right = f.basis();
    if (sigma) {
        const auto& gens = f.central().gens;
        for (std::size_t k = 0; k < gens.size(); ++k)
            if (!((*sigma)(gens[k]) == gens[k]))
                throw HypothesisError("twisting map moves central generator " + f.rvars()->names[k]);
        for (auto& z : right) z = (*sigma)(z);
    }
    PolyMatrix w(n, std::vector<Poly>(n));
    parallel_for(n * n, [&](std::size_t idx) {
        std::size_t i = idx / n, j = idx % n;
        if (!sigma && j < i) return;  // symmetric: tr(ab) = tr(ba)
        w[i][j] = f.trace(t->mul(f.basis()[i], right[j]));
    });
    if (!sigma)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) w[i][j] = w[j][i];
    return w;
}

SigmaMatrix sigma_matrix(const FreeModule& f, const ElementMap& sigma) {
    const std::size_t n = f.rank();
    SigmaMatrix s;
    s.x.assign(n, std::vector<Poly>(n));
    for (std::size_t j = 0; j < n; ++j) {
        auto coords = f.express(sigma(f.basis()[j]));
        for (std::size_t i = 0; i < n; ++i) s.x[i][j] = coords[i];
    }
    s.det = bareiss_det(s.x);
    if (s.det.is_zero() || !s.det.is_constant())
        throw HypothesisError("determinant of the twisting map is " + s.det.str() + ", not a unit");
    return s;
}

Discriminant discriminant_direct(const FreeModule& f) {
    Poly raw = bareiss_det(trace_form(f));
    raw = remap(raw, f.rvars());
    Poly amb = f.ambient_image(raw);
    return make_discriminant(std::move(raw), std::move(amb), "direct");
}

namespace {

VarsPtr union_vars(const VarsPtr& a, const VarsPtr& b) {
    std::vector<std::string> names;
    std::vector<int> weights;
    for (const VarsPtr& v : {a, b}) {
        if (!v) continue;
        for (std::size_t i = 0; i < v->size(); ++i) {
            auto it = std::find(names.begin(), names.end(), v->names[i]);
            if (it == names.end()) {
                names.push_back(v->names[i]);
                weights.push_back(v->weights[i]);
            } else if (weights[it - names.begin()] != v->weights[i]) {
                throw Error("variable " + v->names[i] + " appears with two weights");
            }
        }
    }
    return make_vars(std::move(names), std::move(weights));
}

}  // namespace

Poly merge_mul(const Poly& a, const Poly& b) {
    VarsPtr v = union_vars(a.vars(), b.vars());
    return remap(a, v) * remap(b, v);
}

Discriminant formula_twist(const Discriminant& da, const Discriminant& dm, long n, long l) {
    auto raw = merge_mul(da.raw.pow(l), dm.raw.pow(n));
    auto amb = merge_mul(da.ambient.pow(l), dm.ambient.pow(n));
    auto certs = da.certificates;
    certs.insert(certs.end(), dm.certificates.begin(), dm.certificates.end());
    return make_discriminant(std::move(raw), std::move(amb), "twist", std::move(certs));
}

Discriminant formula_ore(const Discriminant& dab, long m, long n, const std::string& t_name, int t_weight,
                         const std::string& r_name) {
    auto rv = make_vars({r_name}, {static_cast<int>(m) * t_weight});
    auto tv = make_vars({t_name}, {t_weight});
    Poly raw = merge_mul(dab.raw.pow(m), Poly::term(rv, mono_var(*rv, 0, static_cast<int>((m - 1) * n))));
    Poly amb = merge_mul(dab.ambient.pow(m), Poly::term(tv, mono_var(*tv, 0, static_cast<int>((m - 1) * m * n))));
    return make_discriminant(std::move(raw), std::move(amb), "ore", dab.certificates);
}

Discriminant formula_skgrp(const Discriminant& dar, long group_order) {
    return make_discriminant(dar.raw.pow(group_order), dar.ambient.pow(group_order), "skgrp", dar.certificates);
}

Reflection analyze_reflection(const AlgebraMap& sigma) {
    const auto& alg = sigma.algebra();
    if (!alg->is_commutative()) throw HypothesisError("reflections need a commutative polynomial ring");
    const std::size_t n = alg->ngens();
    for (std::size_t i = 0; i < n; ++i)
        if (alg->vars()->weights[i] != 1) throw HypothesisError("reflections need weight-1 generators");
    Mat s(n, Vec(n, Scalar(0)));
    for (std::size_t j = 0; j < n; ++j) {
        const Poly& img = sigma.images()[j];
        if (!img.is_zero() && (!img.is_homogeneous() || img.degree() != 1))
            throw HypothesisError("map is not linear: " + alg->vars()->names[j] + " -> " + img.str());
        for (std::size_t i = 0; i < n; ++i) s[i][j] = img.coefficient(mono_var(*alg->vars(), static_cast<int>(i)));
    }
    auto order = order_of(sigma, 1000);
    if (!order) throw HypothesisError("map has no finite order up to 1000");
    Mat d = s;
    for (std::size_t i = 0; i < n; ++i) d[i][i] -= 1;
    if (rank(d, n) != 1) throw HypothesisError("map does not fix a hyperplane of linear forms");
    Reflection r;
    r.order = *order;
    r.xi = Scalar(1) - Scalar(static_cast<long>(n));
    for (std::size_t i = 0; i < n; ++i) r.xi += s[i][i];
    r.form = alg->zero();
    for (std::size_t j = 0; j < n && r.form.is_zero(); ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (!d[i][j].is_zero()) r.form += alg->gen(static_cast<int>(i)) * d[i][j];
    r.form = normalize(r.form);
    return r;
}

Discriminant reflection_disc(const AlgebraMap& sigma) {
    Reflection r = analyze_reflection(sigma);
    Poly d = r.form.pow((r.order - 1) * r.order);
    return make_discriminant(d, d, "reflection",
                             {"reflection of order " + std::to_string(r.order) + " with eigenvalue " + r.xi.str() +
                              " on " + r.form.str()});
}

ReflectionTrick reflection_trick(const FreeModule& f, const std::vector<AlgebraMap>& group, bool cross_check) {
    const auto& t = f.ambient();
    if (!t->is_plain()) throw SchemaError("the reflection trick needs a plain commutative algebra");
    const std::size_t n = f.rank();
    if (group.size() != n)
        throw HypothesisError("group order " + std::to_string(group.size()) + " differs from the rank " +
                              std::to_string(n));
    ReflectionTrick out;
    out.m.assign(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.m[i][j] = t->commutative_image(base_map(*t, group[i])(f.basis()[j]));
    std::vector<std::string> certs;
    if (cross_check) {
        PolyMatrix mtm = mat_mul(transpose(out.m), out.m);
        PolyMatrix w = trace_form(f);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!(remap(mtm[i][j], t->ambient_vars()) == f.ambient_image(w[i][j])))
                    throw HypothesisError("M^T M differs from the trace form at (" + std::to_string(i) + "," +
                                          std::to_string(j) + "): " + mtm[i][j].str() + " vs " +
                                          f.ambient_image(w[i][j]).str());
        certs.push_back("M^T M equals the trace form entrywise");
    } else {
        certs.push_back("trace form cross-check skipped");
    }
    out.det = bareiss_det(out.m);
    Poly d = out.det.pow(2);
    out.disc = make_discriminant(d, d, "reflection", std::move(certs));
    return out;
}

Discriminant homogenize_disc(const Discriminant& d, VarsPtr target, const std::string& t_name) {
    Poly h = homogenize(d.ambient, std::move(target), t_name);
    auto certs = d.certificates;
    return make_discriminant(h, h, "homog", std::move(certs));
}

namespace {

AlgebraPtr empty_algebra() { return PBWAlgebra::create(PBWPresentation(make_vars({}))); }

}  // namespace

Discriminant monoid_algebra_disc(const Monoid& m, long modulus) {
    if (!m.is_numerical()) throw SchemaError("numerical monoid expected");
    if (!m.contains(modulus))
        throw SchemaError("modulus " + std::to_string(modulus) + " is not in the monoid, so kH is not k[t^d]");
    auto base = empty_algebra();
    auto t = TwistedAlgebra::create(MonoidAction(m, AlgebraMap::identity(base)));
    auto r = make_central(t, {"T"}, {t->monoid_element(modulus)});
    std::vector<TElem> basis;
    auto cosets = coset_basis_numerical(m, modulus);
    for (long w : cosets) basis.push_back(t->monoid_element(w));
    FreeModule f(r, basis);
    long bound = cosets.back() + 2 * modulus;
    auto report = f.verify(bound);
    if (!report.ok) throw HypothesisError(report.str());
    Discriminant d = discriminant_direct(f);
    d.certificates.push_back(report.str());
    return d;
}

Discriminant group_algebra_disc(const Monoid& g) {
    if (g.is_numerical()) throw SchemaError("group expected");
    auto base = empty_algebra();
    std::map<long, AlgebraMap> maps;
    for (int s : g.generators()) maps.emplace(s, AlgebraMap::identity(base));
    auto t = TwistedAlgebra::create(MonoidAction(g, base, maps));
    auto r = make_central(t, {}, std::vector<TElem>{});
    std::vector<TElem> basis;
    for (long x = 0; x < static_cast<long>(g.size()); ++x) basis.push_back(t->monoid_element(x));
    FreeModule f(r, basis);
    return discriminant_direct(f);
}

}  // namespace ncdisc
