// Acceptance suite: one PASS/FAIL line per criterion, each under a pinned
// wall-clock limit. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <future>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "ncdisc/errors.hpp"
#include "ncdisc/registry.hpp"

using namespace ncdisc;

namespace {

class Checks {
   public:
    void expect(bool ok, const std::string& what) {
        if (!ok) failures_.push_back(what);
    }
    bool ok() const { return failures_.empty(); }
    std::string str() const {
        std::string out;
        for (const auto& f : failures_) out += (out.empty() ? "" : "; ") + f;
        return out;
    }

   private:
    std::vector<std::string> failures_;
};

bool same(const Poly& a, const Poly& b) { return eq_up_to_scalar(a, b).has_value(); }

const RegistryEntry& entry(const std::string& name) {
    const auto* e = find_entry(name);
    if (!e) throw Error("no registry entry " + name);
    return *e;
}

Problem problem(const std::string& name) { return load_problem(entry(name).problem); }

Poly ambient(const Problem& p, const std::string& text) {
    return parse_poly(text, p.algebra->ambient_vars(), p.algebra->base()->order());
}

// A value written in the central variables, mapped to the ambient ring.
Poly central_value(const Problem& p, const std::string& text) {
    const auto& f = p.free_module();
    return f.ambient_image(parse_poly(text, f.rvars(), p.algebra->base()->order()));
}

void expect_disc(Checks& c, const std::string& name, const std::string& method, const Poly& expected) {
    Discriminant d = entry_disc(entry(name), method);
    c.expect(same(d.ambient, expected), name + " " + method + " gave " + d.ambient_normalized.str() +
                                            ", expected " + expected.str());
}

std::string vandermonde(int n) {
    std::string out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            out += std::string(out.empty() ? "" : "*") + "(x" + std::to_string(i) + " - x" + std::to_string(j) + ")";
    return "(" + out + ")";
}

// (prod x_i^2)^(2^(n-1)) written out as a monomial.
std::string vn_disc(int n) {
    std::string out;
    const long e = 2L << (n - 1);
    for (int i = 1; i <= n; ++i) out += std::string(out.empty() ? "" : "*") + "x" + std::to_string(i) + "^" + std::to_string(e);
    return out;
}

AlgebraPtr skew(int n, const std::string& tail) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    PBWPresentation p(make_vars(names));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i) p.set_relation(j, i, Scalar(-1), parse_poly(tail, p.vars()));
    return PBWAlgebra::create(p);
}

PBWPresentation skew_presentation(int n, const std::string& tail) { return skew(n, tail)->presentation(); }

std::string random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-5, 5);
    std::string out;
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j) {
            int c = coef(rng);
            if (c == 0) continue;
            out += (out.empty() ? "" : " + ") + std::string("(") + std::to_string(c) + ")*x^" + std::to_string(i) +
                   "*y^" + std::to_string(j);
        }
    return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------

Checks quantum_plane(bool) {
    Checks c;
    Problem p = problem("ore-V2");
    c.expect(p.free_module().rank() == 4, "rank 4");
    expect_disc(c, "ore-V2", "direct", ambient(p, "x^4*y^4"));
    expect_disc(c, "ore-V2", "ore", ambient(p, "x^4*y^4"));
    Problem base = load_base_problem(p);
    c.expect(same(run_disc(base, "direct").ambient, ambient(base, "x^2")), "d(k[x]/k[x^2]) = x^2");
    return c;
}

Checks skew_polynomial_rings(bool) {
    Checks c;
    for (int n : {2, 3}) {
        const std::string name = "vncn-n" + std::to_string(n);
        Problem p = problem(name);
        c.expect(p.free_module().rank() == (1u << n), name + " rank");
        expect_disc(c, name, "direct", ambient(p, vn_disc(n)));
        expect_disc(c, name, "ore", ambient(p, vn_disc(n)));
        if (n == 3) {
            Problem base = load_base_problem(p);
            c.expect(same(run_disc(base, "direct").ambient, ambient(base, vn_disc(2))), "ore base is d(V2/C2)");
        }
    }
    return c;
}

Checks swap_ore_extension(bool) {
    Checks c;
    Problem p = problem("ore-kxy-swap");
    c.expect(p.free_module().rank() == 4, "rank 4");
    expect_disc(c, "ore-kxy-swap", "direct", ambient(p, "(x - y)^4*t^4"));
    Problem base = load_base_problem(p);
    const auto& f = base.free_module();
    for (const auto& [elem, value] : std::vector<std::pair<std::string, std::string>>{
             {"1", "2"}, {"x", "x + y"}, {"x^2", "x^2 + y^2"}}) {
        Poly tr = f.ambient_image(f.trace(base.algebra->parse(elem)));
        c.expect(tr == ambient(base, value), "tr(" + elem + ") = " + tr.str());
    }
    return c;
}

Checks s3_reflection_trick(bool) {
    Checks c;
    Problem p = problem("refl-S3");
    const auto& f = p.free_module();
    auto action = MonoidAction::permutation(Monoid::symmetric(3), p.algebra->base());
    std::vector<AlgebraMap> group;
    for (long g = 0; g < 6; ++g) group.push_back(action.act(g));
    ReflectionTrick rt = reflection_trick(f, group);
    const Poly v = ambient(p, vandermonde(3));
    c.expect(same(rt.det, v.pow(3)), "det M = " + rt.det.str());
    PolyMatrix mtm = mat_mul(transpose(rt.m), rt.m);
    PolyMatrix w = trace_form(f);
    bool entrywise = w.size() == 6;
    for (std::size_t i = 0; entrywise && i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) entrywise = entrywise && f.ambient_image(w[i][j]) == mtm[i][j];
    c.expect(entrywise, "M^T M equals the trace form");
    c.expect(same(rt.disc.ambient, v.pow(6)), "reflection trick disc");
    expect_disc(c, "refl-S3", "direct", v.pow(6));
    return c;
}

Checks cyclic_reflections(bool) {
    Checks c;
    for (int m = 2; m <= 4; ++m) {
        const std::string name = "refl-m" + std::to_string(m);
        Problem p = problem(name);
        c.expect(p.algebra->base()->order() == m, name + " coefficient order");
        const Poly want = ambient(p, "x^" + std::to_string((m - 1) * m));
        expect_disc(c, name, "direct", want);
        expect_disc(c, name, "reflection", want);
    }
    for (int m = 2; m <= 6; ++m) {
        const std::string name = "ztr-m" + std::to_string(m);
        Problem p = problem(name);
        const Poly want = ambient(p, "t^" + std::to_string((m - 1) * m));
        expect_disc(c, name, "direct", want);
        expect_disc(c, name, "reflection", want);
    }
    return c;
}

Checks numerical_monoid(bool) {
    Checks c;
    Monoid m = Monoid::numerical({2, 3});
    auto basis = coset_basis_numerical(m, 6);
    c.expect(basis == std::vector<long>{0, 2, 3, 4, 5, 7}, "coset basis");
    c.expect(unique_complements(m, basis, 6), "unique complements");
    Discriminant d = monoid_algebra_disc(m, 6);
    c.expect(same(d.ambient, parse_poly("t^42", d.ambient.vars())), "d(kM/kH) = " + d.ambient_normalized.str());
    Problem p = problem("twist-ex54");
    expect_disc(c, "twist-ex54", "twist", ambient(p, "(x1^30*t^42)^6"));
    return c;
}

Checks weyl_homogenization(bool) {
    Checks c;
    Problem p = problem("homog-W2");
    Problem base = load_base_problem(p);
    c.expect(same(run_disc(base, "direct").ambient, ambient(base, "(4*x^2*y^2 - 1)^2")), "d(W2/k[x^2,y^2])");
    expect_disc(c, "homog-W2", "homog", ambient(p, "(4*x^2*y^2 - t^4)^2"));
    expect_disc(c, "homog-W2", "direct", ambient(p, "(4*x^2*y^2 - t^4)^2"));
    return c;
}

Checks symmetric_center(bool) {
    Checks c;
    for (const auto& [name, method, value] : std::vector<std::tuple<std::string, std::string, std::string>>{
             {"W2-over-XY", "direct", "(4*Y - 1)^4*(X^2 - 4*Y)^4"},
             {"V2-over-XY", "direct", "Y^4*(X^2 - 4*Y)^4"},
             {"ore-V2-swap", "ore", "T^8*Y^8*(X^2 - 4*Y)^8"},
             {"ore-W2-swap", "ore", "T^8*(4*Y - 1)^8*(X^2 - 4*Y)^8"}}) {
        Problem p = problem(name);
        c.expect(p.free_module().rank() == (name.rfind("ore", 0) == 0 ? 16u : 8u), name + " rank");
        expect_disc(c, name, method, central_value(p, value));
    }
    return c;
}

Checks skew_group_v2(bool stress) {
    Checks c;
    Problem base = problem("V2-over-XY");
    Discriminant d = run_disc(base, "direct");
    c.expect(same(d.ambient, central_value(base, "Y^2*(X^2 - 4*Y)^2")),
             "d(V2/E2) direct = " + d.normalized.str() + ", expected Y^2*(X^2 - 4*Y)^2");
    Discriminant sk = entry_disc(entry("skgrp-V2S2"), "skgrp");
    c.expect(same(sk.ambient, d.ambient.pow(2)), "skew group formula is the square of the base");
    if (stress) {
        Discriminant direct = entry_disc(entry("skgrp-V2S2"), "direct");
        c.expect(same(direct.ambient, sk.ambient), "16x16 direct agrees with the skew group formula");
    }
    return c;
}

Checks skew_group_s3(bool) {
    Checks c;
    Problem p = problem("refl-S3");
    Discriminant a = entry_disc(entry("refl-S3"), "direct");
    const Poly v = ambient(p, vandermonde(3));
    c.expect(same(a.ambient, v.pow(6)), "A-side direct");
    c.expect(same(formula_skgrp(a, 6).ambient, v.pow(36)), "formula_skgrp");
    Problem s = problem("skgrp-S3");
    expect_disc(c, "skgrp-S3", "skgrp", ambient(s, vandermonde(3)).pow(36));
    return c;
}

Checks off_identity_traces(bool) {
    Checks c;
    std::mt19937 rng(20261015);
    Problem smash = problem("skgrp-V2S2");
    Problem ore = problem("ore-kxy-swap");
    for (int k = 0; k < 20; ++k) {
        const std::string a = random_poly(rng);
        TElem e = smash.algebra->parse("(" + a + ")#g");
        c.expect(smash.free_module().trace(e).is_zero(), "tr((" + a + ")#g) != 0");
        TElem u = ore.algebra->parse("(" + a + ")*t");
        c.expect(ore.free_module().trace(u).is_zero(), "tr((" + a + ")*t) != 0");
    }
    return c;
}

Checks twisted_trace_form(bool) {
    Checks c;
    Problem sym = load_base_problem(problem("ore-kxy-swap"));
    Problem v2 = problem("V2-over-XY");
    for (const Problem* p : {&sym, &v2}) {
        const auto& f = p->free_module();
        ElementMap sigma = base_map(*p->algebra, AlgebraMap::parse(p->algebra->base(), {{"x", "y"}, {"y", "x"}}));
        SigmaMatrix x = sigma_matrix(f, sigma);
        c.expect(trace_form(f, &sigma) == mat_mul(trace_form(f), x.x), "W_sigma = W X_sigma, rank " +
                                                                         std::to_string(f.rank()));
    }
    return c;
}

Checks ranks(bool) {
    Checks c;
    long fact = 1;
    for (int n = 1; n <= 4; ++n) {
        fact *= n;
        std::vector<int> weights;
        for (int i = 1; i <= n; ++i) weights.push_back(2 * i);
        auto r = hilbert_rank(skew_presentation(n, "0"), weights);
        c.expect(r && *r == (1L << n) * fact, "hilbert_rank for n = " + std::to_string(n));
    }
    Problem p = problem("V2-over-XY");
    c.expect(p.free_module().rank() == 8, "basis size 8");
    BasisReport report = p.free_module().verify(8);
    c.expect(report.ok, "basis verification: " + report.str());
    return c;
}

Checks family_automorphisms(bool) {
    Checks c;
    for (const auto& f : families()) {
        VerifyResult r = verify_family(f);
        c.expect(r.pass, f.name + " failed");
        long violators = 0;
        for (const auto& b : r.record["branches"]) {
            long passing = 0;
            for (const auto& s : b["samples"]) {
                bool expect_pass = s["expect_pass"].get<bool>();
                bool as_expected = s["as_expected"].get<bool>();
                if (expect_pass && as_expected) ++passing;
                if (!expect_pass && as_expected) ++violators;
                if (!f.group_generator.empty() && expect_pass)
                    c.expect(s.value("generator_image_is_pm", false), f.name + ": generator not sent to +-itself");
            }
            c.expect(passing >= 5, f.name + "/" + b["name"].get<std::string>() + ": fewer than 5 passing samples");
        }
        c.expect(violators >= 3, f.name + ": fewer than 3 rejected violators");
    }
    return c;
}

Checks confluence(bool) {
    Checks c;
    c.expect(check_confluence(skew_presentation(3, "0")).ok, "V3");
    c.expect(check_confluence(skew_presentation(3, "1")).ok, "W3");
    c.expect(check_confluence(homogenize_presentation(skew_presentation(2, "1"))).ok, "H(W2)");
    PBWPresentation bad(make_vars({"x", "y", "z"}));
    auto v = bad.vars();
    bad.set_relation(1, 0, Scalar(1), parse_poly("x", v));
    bad.set_relation(2, 1, Scalar(1), parse_poly("y", v));
    bad.set_relation(2, 0, Scalar(1), Poly(v, Scalar(1)));
    ConfluenceReport r = check_confluence(bad);
    c.expect(!r.ok && r.upper == 2 && r.middle == 1 && r.lower == 0 && r.route_a != r.route_b, "overlap witness");
    bool rejected = false;
    try {
        PBWAlgebra::create(bad);
    } catch (const NonConfluent&) {
        rejected = true;
    }
    c.expect(rejected, "non-confluent presentation accepted");
    return c;
}

Checks basis_independence(bool) {
    Checks c;
    Json spec = entry("ore-V2").problem;
    Problem p = load_problem(spec);
    spec["basis"] = {"1", "x", "y", "x + y + x*y"};
    Problem q = load_problem(spec);
    c.expect(q.free_module().verify(8).ok, "second basis verified");
    c.expect(run_disc(p, "direct").normalized == run_disc(q, "direct").normalized, "normalized discriminants differ");
    return c;
}

struct Criterion {
    int id;
    std::string title;
    double limit;
    double stress_limit;
    std::function<Checks(bool)> run;
};

}  // namespace

int main(int argc, char** argv) {
    bool stress = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--stress") == 0) stress = true;

    const std::vector<Criterion> criteria{
        {1, "V2 over k[x^2, y^2], direct and Ore", 1, 1, quantum_plane},
        {2, "d(V_n/C_n) for n = 2, 3 and the Ore induction", 10, 10, skew_polynomial_rings},
        {3, "k[x,y][t; swap] and its A-side traces", 1, 1, swap_ore_extension},
        {4, "S3 reflection trick: det M, M^T M, d", 5, 5, s3_reflection_trick},
        {5, "cyclic reflections of order m", 5, 5, cyclic_reflections},
        {6, "numerical monoid <2,3> and the twisted tensor formula", 1, 1, numerical_monoid},
        {7, "W2, its homogenization and H(W2)", 5, 5, weyl_homogenization},
        {8, "V2 and W2 over symmetric functions in x^2, y^2 and their swap extensions", 30, 30, symmetric_center},
        {9, "V2 # S2 over E2", 30, 300, skew_group_v2},
        {10, "k[x1,x2,x3] # S3 over the invariants", 5, 5, skew_group_s3},
        {11, "traces vanish off the identity", 5, 5, off_identity_traces},
        {12, "twisted trace form factors through X_sigma", 5, 5, twisted_trace_form},
        {13, "ranks of V_n over E_n and basis verification", 5, 5, ranks},
        {14, "sampled automorphism families", 30, 30, family_automorphisms},
        {15, "confluence checks", 1, 1, confluence},
        {16, "basis independence", 5, 5, basis_independence},
    };

    int failed = 0;
    bool abandoned = false;
    for (const auto& cr : criteria) {
        const double limit = stress ? cr.stress_limit : cr.limit;
        auto start = std::chrono::steady_clock::now();
        auto task = std::async(std::launch::async, [&cr, stress]() -> std::pair<bool, std::string> {
            try {
                Checks c = cr.run(stress);
                return {c.ok(), c.str()};
            } catch (const std::exception& e) {
                return {false, std::string("exception: ") + e.what()};
            }
        });
        std::pair<bool, std::string> outcome;
        if (task.wait_for(std::chrono::duration<double>(limit)) == std::future_status::timeout) {
            outcome = {false, "exceeded " + std::to_string(static_cast<int>(limit)) + " s"};
            abandoned = true;
        } else {
            outcome = task.get();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (outcome.first && secs > limit) outcome = {false, "took longer than the limit"};
        if (!outcome.first) ++failed;
        std::cout << (outcome.first ? "PASS " : "FAIL ") << std::setw(2) << cr.id << "  " << cr.title << "  ("
                  << std::fixed << std::setprecision(2) << secs << " s, limit " << limit << " s)";
        if (!outcome.first) std::cout << "  " << outcome.second;
        std::cout << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    // a timed-out task cannot be cancelled; leave without joining it
    if (abandoned) std::_Exit(1);
    return failed == 0 ? 0 : 1;
}
