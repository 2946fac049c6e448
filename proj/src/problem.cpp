#include "ncdisc/problem.hpp"

#include <fstream>
#include <sstream>

#include "ncdisc/errors.hpp"

namespace ncdisc {

namespace {

using StrMap = std::map<std::string, std::string>;

StrMap string_map(const Json& j, const std::string& what) {
    if (!j.is_object()) throw SchemaError(what + " must be an object");
    StrMap out;
    for (const auto& [k, v] : j.items()) {
        if (!v.is_string()) throw SchemaError(what + "." + k + " must be a string");
        out[k] = v.get<std::string>();
    }
    return out;
}

std::vector<std::string> string_list(const Json& j, const std::string& what) {
    if (!j.is_array()) throw SchemaError(what + " must be an array");
    std::vector<std::string> out;
    for (const auto& v : j) {
        if (!v.is_string()) throw SchemaError(what + " entries must be strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

template <class T>
T field(const Json& j, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception&) {
        throw SchemaError(std::string("field '") + key + "' has the wrong type");
    }
}

int group_preset(const std::string& preset) {
    if (preset.size() < 2 || preset[0] != 'S') throw SchemaError("unknown group preset '" + preset + "'");
    try {
        return std::stoi(preset.substr(1));
    } catch (const std::exception&) {
        throw SchemaError("unknown group preset '" + preset + "'");
    }
}

AlgebraPtr build_base(const Json& spec) {
    const int order = field(spec, "cyclotomic_order", 1);
    if (order < 1) throw SchemaError("cyclotomic_order must be positive");
    if (!spec.contains("generators") || !spec["generators"].is_array())
        throw SchemaError("generators must be an array");
    std::vector<std::string> names;
    std::vector<int> weights;
    for (const auto& g : spec["generators"]) {
        if (g.is_string()) {
            names.push_back(g.get<std::string>());
            weights.push_back(1);
        } else if (g.is_object() && g.contains("name")) {
            names.push_back(field<std::string>(g, "name", ""));
            weights.push_back(field(g, "weight", 1));
        } else {
            throw SchemaError("generator entries are names or {\"name\",\"weight\"}");
        }
    }
    PBWPresentation p(make_vars(names, weights), order);
    for (const auto& r : spec.value("relations", Json::array())) {
        auto upper = field<std::string>(r, "upper", "");
        auto lower = field<std::string>(r, "lower", "");
        int u = p.vars()->index_of(upper), l = p.vars()->index_of(lower);
        if (u < 0 || l < 0) throw SchemaError("relation names unknown generator '" + (u < 0 ? upper : lower) + "'");
        Scalar q = parse_scalar(field<std::string>(r, "q", "1"), order);
        Poly tail = parse_poly(field<std::string>(r, "tail", "0"), p.vars(), order);
        p.set_relation(u, l, q, tail);
    }
    return PBWAlgebra::create(p);
}

MonoidAction build_action(const Json& spec, const AlgebraPtr& base, std::optional<long>& modulus) {
    if (!spec.contains("monoid")) return MonoidAction::trivial(base);
    const Json& m = spec["monoid"];
    const auto type = field<std::string>(m, "type", "");
    const Json action = spec.value("action", Json());
    if (type == "numerical") {
        auto gens = field<std::vector<int>>(m, "generators", {1});
        Monoid mon = Monoid::numerical(gens, field<std::string>(m, "variable", "t"), field(m, "weight", 1));
        if (m.contains("submonoid_modulus")) modulus = field<long>(m, "submonoid_modulus", 0);
        AlgebraMap sigma = AlgebraMap::identity(base);
        if (action.is_object() && action.contains("sigma"))
            sigma = AlgebraMap::parse(base, string_map(action["sigma"], "action.sigma"));
        else if (!action.is_null())
            throw SchemaError("numerical monoids take {\"sigma\": {...}} as action");
        return MonoidAction(mon, sigma);
    }
    if (type == "group") {
        Monoid g = Monoid::symmetric(group_preset(field<std::string>(m, "preset", "")));
        if (action.is_null() || action == "permutation") return MonoidAction::permutation(g, base);
        if (!action.is_object()) throw SchemaError("group action must be \"permutation\" or an object");
        std::map<long, AlgebraMap> maps;
        for (const auto& [label, images] : action.items()) {
            auto idx = g.find(label);
            if (!idx) throw SchemaError("action names unknown group element '" + label + "'");
            maps.emplace(*idx, AlgebraMap::parse(base, string_map(images, "action." + label)));
        }
        return MonoidAction(g, base, maps);
    }
    throw SchemaError("monoid.type must be numerical or group");
}

std::string confluence_certificate(const AlgebraPtr& base) {
    const std::size_t n = base->ngens();
    return "presentation confluent: " + std::to_string(n * (n - 1) * (n - 2) / 6) + " overlaps resolve";
}

}  // namespace

const FreeModule& Problem::free_module() const {
    if (!module) throw SchemaError("problem has no central_subalgebra/basis");
    return *module;
}

Problem load_problem(const Json& spec) {
    Problem p;
    p.spec = spec;
    try {
        if (!spec.is_object()) throw SchemaError("problem must be a JSON object");
        AlgebraPtr base = build_base(spec);
        p.certificates.push_back(confluence_certificate(base));
        p.algebra = TwistedAlgebra::create(build_action(spec, base, p.modulus));
        p.verify_degree = field(spec, "verify_degree", 8L);
        if (spec.contains("hypotheses")) {
            const Json& h = spec["hypotheses"];
            auto mode = field<std::string>(h, "no_inner", "check");
            if (mode != "check" && mode != "assert") throw SchemaError("hypotheses.no_inner must be check or assert");
            p.assert_no_inner = mode == "assert";
            p.inner_degree_cap = field(h, "inner_degree_cap", 4L);
        }
        if (spec.contains("central_subalgebra")) {
            const Json& c = spec["central_subalgebra"];
            auto names = string_list(c.value("names", Json::array()), "central_subalgebra.names");
            auto elements = string_list(c.value("elements", Json::array()), "central_subalgebra.elements");
            if (names.size() != elements.size()) throw SchemaError("central_subalgebra names and elements differ in length");
            if (!spec.contains("basis")) throw SchemaError("central_subalgebra given without basis");
            std::vector<TElem> basis;
            for (const auto& s : string_list(spec["basis"], "basis")) basis.push_back(p.algebra->parse(s));
            p.module = std::make_unique<FreeModule>(parse_central(p.algebra, names, elements), std::move(basis),
                                                    field(spec, "degree_cap", 24L), field(spec, "slack", -1L));
        }
    } catch (const Json::exception& e) {
        throw SchemaError(std::string("malformed problem: ") + e.what());
    }
    return p;
}

Problem load_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot read " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::exception& e) {
        throw SchemaError(path + ": " + e.what());
    }
    return load_problem(j);
}

Problem load_base_problem(const Problem& parent) {
    const Json& f = parent.spec.value("formula", Json::object());
    if (!f.contains("base")) throw SchemaError("formula.base is required for this method");
    Json base = f["base"];
    for (const char* key : {"cyclotomic_order", "generators", "relations"})
        if (!base.contains(key) && parent.spec.contains(key)) base[key] = parent.spec[key];
    return load_problem(base);
}

std::vector<std::string> no_inner_certificates(const Problem& p) {
    const auto& act = p.algebra->action();
    const Monoid& m = p.algebra->monoid();
    std::vector<std::pair<std::string, const AlgebraMap*>> maps;
    std::vector<AlgebraMap> powers;
    if (m.is_numerical()) {
        auto order = act.order();
        if (!order) throw HypothesisError("the twisting automorphism has no finite order");
        for (long i = 1; i < *order; ++i) powers.push_back(act.sigma().pow(i));
        for (long i = 1; i < *order; ++i) maps.emplace_back("sigma^" + std::to_string(i), &powers[i - 1]);
    } else {
        for (long g = 1; g < static_cast<long>(m.size()); ++g) maps.emplace_back(m.label(g), &act.act(g));
    }
    std::vector<std::string> certs;
    const std::string cap = std::to_string(p.inner_degree_cap);
    for (const auto& [name, map] : maps) {
        auto w = inner_witness(*map, p.inner_degree_cap);
        if (p.assert_no_inner) {
            certs.push_back(name + " not inner: asserted" +
                            (w ? " (search found normal element " + w->str() + ")" : " (no witness up to degree " + cap + ")"));
        } else if (w) {
            throw HypothesisError(name + " is inner: x a = a " + name + "(x) holds for a = " + w->str());
        } else {
            certs.push_back(name + " not inner: no normal element up to degree " + cap);
        }
    }
    return certs;
}

namespace {

Discriminant direct(const Problem& p) {
    const FreeModule& f = p.free_module();
    auto report = f.verify(p.verify_degree);
    if (!report.ok) throw HypothesisError(report.str());
    Discriminant d = discriminant_direct(f);
    d.certificates = p.certificates;
    d.certificates.push_back(report.str());
    return d;
}

Discriminant base_direct(const Problem& p, std::size_t* rank) {
    Problem base = load_base_problem(p);
    if (!base.algebra->is_plain()) throw SchemaError("formula.base must not have a monoid");
    if (rank) *rank = base.free_module().rank();
    return direct(base);
}

std::string r_name_for_power(const Problem& p, long power) {
    const Json& f = p.spec.value("formula", Json::object());
    if (f.contains("r_name")) return f["r_name"].get<std::string>();
    if (p.module) {
        const auto& c = p.module->central();
        TElem target = p.algebra->monoid_element(power);
        for (std::size_t k = 0; k < c.gens.size(); ++k)
            if (c.gens[k] == target) return c.vars->names[k];
    }
    return "T";
}

Discriminant ore(const Problem& p) {
    const Monoid& m = p.algebra->monoid();
    if (!m.is_numerical() || m.generators() != std::vector<int>{1})
        throw SchemaError("the Ore formula needs the monoid N");
    auto order = p.algebra->action().order();
    if (!order) throw HypothesisError("the twisting automorphism has no finite order");
    auto certs = no_inner_certificates(p);
    std::size_t n = 0;
    Discriminant dab = base_direct(p, &n);
    Discriminant d = formula_ore(dab, *order, static_cast<long>(n), m.var(), m.weight(), r_name_for_power(p, *order));
    certs.insert(certs.begin(), "order of sigma " + std::to_string(*order) + ", rank of base " + std::to_string(n));
    d.certificates.insert(d.certificates.end(), certs.begin(), certs.end());
    return d;
}

Discriminant skgrp(const Problem& p) {
    const Monoid& g = p.algebra->monoid();
    if (g.is_numerical()) throw SchemaError("the skew group formula needs a finite group");
    auto certs = no_inner_certificates(p);
    Discriminant d = formula_skgrp(base_direct(p, nullptr), static_cast<long>(g.size()));
    d.certificates.insert(d.certificates.end(), certs.begin(), certs.end());
    return d;
}

Discriminant twist(const Problem& p) {
    const Monoid& m = p.algebra->monoid();
    if (!m.is_numerical() || !p.modulus) throw SchemaError("the twist formula needs a numerical monoid with submonoid_modulus");
    auto order = p.algebra->action().order();
    if (!order) throw HypothesisError("the twisting automorphism has no finite order");
    if (*order != *p.modulus)
        throw HypothesisError("submonoid_modulus " + std::to_string(*p.modulus) + " differs from the order " +
                              std::to_string(*order) + " of sigma, so H is not the kernel of the action on M");
    auto certs = no_inner_certificates(p);
    std::size_t n = 0;
    Discriminant da = base_direct(p, &n);
    Discriminant dm = monoid_algebra_disc(m, *p.modulus);
    const long l = static_cast<long>(coset_basis_numerical(m, *p.modulus).size());
    Discriminant d = formula_twist(da, dm, static_cast<long>(n), l);
    d.certificates.push_back("coset basis of size " + std::to_string(l) + " with unique complements");
    d.certificates.insert(d.certificates.end(), certs.begin(), certs.end());
    return d;
}

Discriminant reflection(const Problem& p) {
    const Json& f = p.spec.value("formula", Json::object());
    const auto& base = p.algebra->base();
    if (f.contains("sigma")) return reflection_disc(AlgebraMap::parse(base, string_map(f["sigma"], "formula.sigma")));
    if (f.contains("group")) {
        auto g = MonoidAction::permutation(Monoid::symmetric(group_preset(f["group"].get<std::string>())), base);
        std::vector<AlgebraMap> maps;
        for (long i = 0; i < static_cast<long>(g.monoid().size()); ++i) maps.push_back(g.act(i));
        return reflection_trick(p.free_module(), maps).disc;
    }
    throw SchemaError("the reflection method needs formula.sigma or formula.group");
}

Discriminant homog(const Problem& p) {
    const Json& f = p.spec.value("formula", Json::object());
    Discriminant d = homogenize_disc(base_direct(p, nullptr), p.algebra->ambient_vars(), f.value("t", std::string("t")));
    return d;
}

}  // namespace

Discriminant run_disc(const Problem& p, const std::string& method) {
    if (method == "direct") return direct(p);
    if (method == "ore") return ore(p);
    if (method == "skgrp") return skgrp(p);
    if (method == "twist") return twist(p);
    if (method == "reflection") return reflection(p);
    if (method == "homog") return homog(p);
    throw SchemaError("unknown method '" + method + "'");
}

Json disc_record(const Discriminant& d) {
    return Json{{"raw", d.raw.str()},
                {"normalized", d.normalized.str()},
                {"ambient", d.ambient_normalized.str()},
                {"method", d.method},
                {"hypothesis_certificates", d.certificates}};
}

Json run_check(const Problem& p) {
    Json out;
    const auto& base = p.algebra->base();
    out["generators"] = p.algebra->generator_names();
    out["confluent"] = check_confluence(base->presentation()).ok;
    out["certificates"] = p.certificates;
    if (p.algebra->monoid().is_numerical()) {
        auto order = p.algebra->action().order();
        out["sigma_order"] = order ? Json(*order) : Json(nullptr);
        if (p.modulus) {
            auto cosets = coset_basis_numerical(p.algebra->monoid(), *p.modulus);
            out["coset_basis"] = cosets;
            out["unique_complements"] = unique_complements(p.algebra->monoid(), cosets, *p.modulus);
        }
    } else if (!p.algebra->is_plain()) {
        out["group_order"] = p.algebra->monoid().size();
    }
    if (p.module) {
        auto report = p.module->verify(p.verify_degree);
        out["basis"] = {{"ok", report.ok}, {"rank", p.module->rank()}, {"report", report.str()}};
        if (!report.ok) throw HypothesisError(report.str());
    }
    return out;
}

Json run_trace(const Problem& p, const std::string& element) {
    const FreeModule& f = p.free_module();
    Poly tr = f.trace(p.algebra->parse(element));
    return Json{{"element", element}, {"trace", tr.str()}, {"ambient", f.ambient_image(tr).str()}};
}

Json run_center_decompose(const Problem& p, long degree_cap, long power_cap) {
    Json comps = Json::array();
    for (const auto& c : ore_center_decompose(*p.algebra, degree_cap, power_cap)) {
        Json basis = Json::array();
        for (const auto& b : c.basis) basis.push_back(b.str());
        comps.push_back({{"power", c.power}, {"basis", basis}});
    }
    return Json{{"degree_cap", degree_cap}, {"power_cap", power_cap}, {"components", comps}};
}

namespace {

Json sample_record(const SampleResult& r) {
    return Json{{"params", r.params},           {"expect_pass", r.expect_pass}, {"endomorphism", r.endomorphism},
                {"automorphism", r.automorphism}, {"disc", r.disc},               {"passed", r.passed()},
                {"as_expected", r.as_expected()}, {"detail", r.detail}};
}

}  // namespace

Json run_aut_check(const Problem& p, const Json& map, const std::string& disc_method) {
    try {
        auto images = string_map(map.at("images"), "images");
        Discriminant d = run_disc(p, disc_method);
        std::vector<Sample> samples;
        if (map.contains("samples")) {
            for (const auto& s : map["samples"])
                samples.push_back({string_map(s.value("params", Json::object()), "params"), s.value("expect", true)});
        } else {
            samples.push_back({string_map(map.value("params", Json::object()), "params"), true});
        }
        Json out{{"disc", disc_record(d)}, {"samples", Json::array()}};
        bool all = true;
        for (const auto& r : family_verify(p.free_module(), d, images, samples)) {
            out["samples"].push_back(sample_record(r));
            all = all && r.as_expected();
        }
        out["all_as_expected"] = all;
        return out;
    } catch (const Json::exception& e) {
        throw SchemaError(std::string("malformed map: ") + e.what());
    }
}

Json run_monoid_disc(const std::vector<int>& gens, long modulus) {
    Monoid m = Monoid::numerical(gens);
    auto cosets = coset_basis_numerical(m, modulus);
    Discriminant d = monoid_algebra_disc(m, modulus);
    Json rec = disc_record(d);
    rec["coset_basis"] = cosets;
    return rec;
}

Json run_conjecture_sn(int n) {
    if (n < 2 || n > 4) throw CapExceeded("conjecture-sn supports 2 <= n <= 4");
    std::vector<std::string> names, elem;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    auto base = PBWAlgebra::create(PBWPresentation(make_vars(names)));
    auto t = TwistedAlgebra::plain(base);
    // elementary symmetric polynomials
    std::vector<Poly> e{base->one()};
    for (int i = 0; i < n; ++i) {
        Poly x = base->gen(i);
        std::vector<Poly> next(e.size() + 1, base->zero());
        for (std::size_t k = 0; k < e.size(); ++k) {
            next[k] += e[k];
            next[k + 1] += e[k] * x;
        }
        e = std::move(next);
    }
    std::vector<std::string> rnames;
    std::vector<TElem> gens;
    for (int k = 1; k <= n; ++k) {
        rnames.push_back("e" + std::to_string(k));
        gens.push_back(t->embed(e[k]));
    }
    auto r = make_central(t, rnames, gens);
    long order = 1;
    for (int k = 2; k <= n; ++k) order *= k;
    auto basis = invariant_basis_suggest(r, static_cast<std::size_t>(order), static_cast<long>(n * (n - 1) / 2));
    FreeModule f(r, basis);
    auto act = MonoidAction::permutation(Monoid::symmetric(n), base);
    std::vector<AlgebraMap> maps;
    for (long i = 0; i < order; ++i) maps.push_back(act.act(i));
    // the entrywise trace-form check needs dense systems up to degree 12 at n = 4
    ReflectionTrick trick = reflection_trick(f, maps, n <= 3);
    Poly vandermonde = base->one();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) vandermonde = vandermonde * (base->gen(i) - base->gen(j));
    // d = (det M)^2 is a scalar times V^(n!) iff det M is a scalar times V^(n!/2)
    Poly half = remap(vandermonde.pow(static_cast<unsigned long>(order / 2)), t->ambient_vars());
    Poly det = remap(trick.det, t->ambient_vars());
    Json basis_json = Json::array();
    for (const auto& b : basis) basis_json.push_back(t->str(b));
    Json out{{"n", n},
             {"basis", basis_json},
             {"det_M_degree", det.degree()},
             {"disc_degree", 2 * det.degree()},
             {"vandermonde_power", order},
             {"equals_vandermonde_power", eq_up_to_scalar(det, half).has_value()},
             {"hypothesis_certificates", trick.disc.certificates}};
    if (n <= 3) out["disc"] = normalize(remap(trick.disc.ambient, t->ambient_vars())).str();
    return out;
}

}  // namespace ncdisc
