#include "doctest.h"
#include "ncdisc/errors.hpp"
#include "ncdisc/freemod.hpp"

using namespace ncdisc;

namespace {

AlgebraPtr skew(std::vector<std::string> names, Scalar q = Scalar(-1), Scalar tail = Scalar(0)) {
    PBWPresentation p(make_vars(std::move(names)));
    for (std::size_t j = 0; j < p.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            p.set_relation(static_cast<int>(j), static_cast<int>(i), q, Poly(p.vars(), tail));
    return PBWAlgebra::create(p);
}

std::vector<TElem> parse_all(const TwistedAlgebra& t, const std::vector<std::string>& texts) {
    std::vector<TElem> out;
    for (const auto& s : texts) out.push_back(t.parse(s));
    return out;
}

TElem recombine(const FreeModule& f, const std::vector<Poly>& r) {
    TElem out;
    for (std::size_t i = 0; i < r.size(); ++i) out += f.ambient()->mul(f.r_image(r[i]), f.basis()[i]);
    return out;
}

}  // namespace

TEST_CASE("quantum plane over its center") {
    auto t = TwistedAlgebra::plain(skew({"x", "y"}));
    auto r = parse_central(t, {"X", "Y"}, {"x^2", "y^2"});
    FreeModule f(r, parse_all(*t, {"1", "x", "y", "x*y"}));
    auto c = f.express(t->parse("x^3*y"));
    auto rv = f.rvars();
    CHECK(c[0].is_zero());
    CHECK(c[1].is_zero());
    CHECK(c[2].is_zero());
    CHECK(c[3] == parse_poly("X", rv));
    for (std::size_t i = 0; i < 4; ++i) {
        auto unit = f.express(f.basis()[i]);
        for (std::size_t j = 0; j < 4; ++j) CHECK(unit[j] == Poly(rv, Scalar(i == j ? 1 : 0)));
    }
    CHECK(f.verify(6).ok);
    for (const char* b : {"y*x^3 - 2*x*y^2 + 7", "x^5*y^4 + y^3", "(x + y)^4"}) {
        TElem e = t->parse(b);
        CHECK(recombine(f, f.express(e)) == e);
    }
    TElem a = t->parse("x^3 + y"), b = t->parse("x*y^2 - 1");
    auto ca = f.express(a), cb = f.express(b), cab = f.express(a + b);
    for (std::size_t i = 0; i < 4; ++i) CHECK(cab[i] == ca[i] + cb[i]);
}

TEST_CASE("polynomial ring over symmetric functions") {
    auto t = TwistedAlgebra::plain(PBWAlgebra::create(PBWPresentation(make_vars({"x", "y"}))));
    auto r = parse_central(t, {"f1", "f2"}, {"x + y", "x*y"});
    FreeModule f(r, parse_all(*t, {"1", "x"}));
    auto c = f.express(t->parse("x^2"));
    // x^2 = -xy * 1 + (x + y) * x
    CHECK(c[0] == parse_poly("-f2", f.rvars()));
    CHECK(c[1] == parse_poly("f1", f.rvars()));
    CHECK(f.verify(6).ok);
}

TEST_CASE("dependent basis is reported") {
    auto t = TwistedAlgebra::plain(skew({"x", "y"}));
    auto r = parse_central(t, {"X", "Y"}, {"x^2", "y^2"});
    FreeModule f(r, parse_all(*t, {"1", "x", "y", "x + y"}));
    auto rep = f.verify(4);
    CHECK_FALSE(rep.ok);
    CHECK(rep.kind == "dependent");
    CHECK(rep.degree == 1);
    FreeModule g(r, parse_all(*t, {"1", "x", "y"}));
    auto rep2 = g.verify(4);
    CHECK_FALSE(rep2.ok);
    CHECK(rep2.kind == "missing");
    CHECK_THROWS_AS(g.express(t->parse("x*y")), NoSolution);
    CHECK_THROWS_AS(f.express(t->parse("x")), AmbiguousSolution);
}

TEST_CASE("non-central generators are rejected") {
    auto t = TwistedAlgebra::plain(skew({"x", "y"}));
    CHECK_THROWS_AS(parse_central(t, {"A"}, {"x + y"}), HypothesisError);
}

TEST_CASE("filtered solver on the anticommutator relation xy + yx = 1") {
    auto t = TwistedAlgebra::plain(skew({"x", "y"}, Scalar(-1), Scalar(1)));
    auto r = parse_central(t, {"X", "Y"}, {"x^2", "y^2"});
    FreeModule f(r, parse_all(*t, {"1", "x", "y", "x*y"}));
    CHECK(f.slack() == 4);
    CHECK(f.verify(6).ok);
    for (const char* b : {"y*x", "y^3*x^2", "(x + y)^5", "y*x*y*x"}) {
        TElem e = t->parse(b);
        CHECK(recombine(f, f.express(e)) == e);
    }
    // y x = -x y + 1
    auto c = f.express(t->parse("y*x"));
    CHECK(c[0] == Poly(f.rvars(), Scalar(1)));
    CHECK(c[3] == Poly(f.rvars(), Scalar(-1)));
}

TEST_CASE("skew plane over even elementary symmetric functions has rank 8") {
    auto v = skew({"x", "y"});
    CHECK(hilbert_rank(v->presentation(), {2, 4}) == 8);
    auto t = TwistedAlgebra::plain(v);
    auto r = parse_central(t, {"X", "Y"}, {"x^2 + y^2", "x^2*y^2"});
    FreeModule f(r, parse_all(*t, {"1", "x", "y", "x*y", "x^2", "x^3", "x^2*y", "x^3*y"}));
    CHECK(f.verify(8).ok);
    CHECK(f.trace(t->one()) == Poly(f.rvars(), Scalar(8)));
}

TEST_CASE("hilbert ranks of V_n over E_n") {
    long expected = 1;
    for (int n = 1; n <= 4; ++n) {
        expected *= 2 * n;
        std::vector<std::string> names;
        std::vector<int> weights;
        for (int i = 1; i <= n; ++i) {
            names.push_back("x" + std::to_string(i));
            weights.push_back(2 * i);
        }
        PBWPresentation p(make_vars(names));
        CHECK(hilbert_rank(p, weights) == expected);
    }
}

TEST_CASE("invariant basis suggestions") {
    auto k2 = TwistedAlgebra::plain(PBWAlgebra::create(PBWPresentation(make_vars({"x", "y"}))));
    auto r2 = parse_central(k2, {"f1", "f2"}, {"x + y", "x*y"});
    auto z2 = invariant_basis_suggest(r2, 2, 4);
    REQUIRE(z2.size() == 2);
    CHECK(z2[0] == k2->one());
    CHECK(z2[1] == k2->parse("x"));

    auto k3 = TwistedAlgebra::plain(PBWAlgebra::create(PBWPresentation(make_vars({"x1", "x2", "x3"}))));
    auto r3 = parse_central(k3, {"e1", "e2", "e3"}, {"x1 + x2 + x3", "x1*x2 + x1*x3 + x2*x3", "x1*x2*x3"});
    auto z3 = invariant_basis_suggest(r3, 6, 6);
    CHECK(z3 == parse_all(*k3, {"1", "x1", "x2", "x1^2", "x1*x2", "x1^2*x2"}));
    FreeModule f3(r3, z3);
    CHECK(f3.verify(6).ok);

    auto k1 = TwistedAlgebra::plain(PBWAlgebra::create(PBWPresentation(make_vars({"x"}))));
    auto r1 = parse_central(k1, {"X"}, {"x"});
    CHECK(invariant_basis_suggest(r1, 1, 3) == parse_all(*k1, {"1"}));
    CHECK_THROWS_AS(invariant_basis_suggest(r1, 2, 3), CapExceeded);
}

TEST_CASE("degree cap") {
    auto t = TwistedAlgebra::plain(skew({"x", "y"}));
    auto r = parse_central(t, {"X", "Y"}, {"x^2", "y^2"});
    FreeModule f(r, parse_all(*t, {"1", "x", "y", "x*y"}), 10);
    CHECK_THROWS_AS(f.express(t->parse("x^11")), CapExceeded);
}
