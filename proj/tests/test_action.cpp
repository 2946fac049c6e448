#include "doctest.h"
#include "ncdisc/action.hpp"
#include "ncdisc/errors.hpp"

using namespace ncdisc;

namespace {

AlgebraPtr skew_plane(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back(n == 2 ? std::string(1, "xy"[i - 1]) : "x" + std::to_string(i));
    PBWPresentation p(make_vars(names));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i) p.set_relation(j, i, Scalar(-1), Poly(p.vars()));
    return PBWAlgebra::create(p);
}

AlgebraPtr polynomial_ring(std::vector<std::string> names, int order = 1) {
    return PBWAlgebra::create(PBWPresentation(make_vars(std::move(names)), order));
}

}  // namespace

TEST_CASE("apply is multiplicative") {
    auto a = skew_plane(2);
    auto swap = AlgebraMap::parse(a, {{"x", "y"}, {"y", "x"}});
    Poly x = a->gen(0), y = a->gen(1);
    // sigma(xy) = yx = -xy
    CHECK(swap.apply(x * y) == -(x * y));
    Poly p = a->parse("x^2*y + 3*y - x*y^3");
    Poly q = a->parse("y^2 - 2*x*y + 1");
    CHECK(swap.apply(a->mul(p, q)) == a->mul(swap.apply(p), swap.apply(q)));
    CHECK(AlgebraMap::identity(a).apply(p) == p);
    CHECK_FALSE(swap.relation_residue());
}

TEST_CASE("sixth-root scaling fixes x^6") {
    auto a = polynomial_ring({"x1"}, 6);
    auto s = AlgebraMap::parse(a, {{"x1", "z6*x1"}});
    Poly x6 = a->pow(a->gen(0), 6);
    CHECK(s.apply(x6) == x6);
    CHECK(order_of(s, 20) == 6);
    CHECK(order_of(s.compose(s), 20) == 3);
}

TEST_CASE("orders") {
    auto a = skew_plane(2);
    CHECK(order_of(AlgebraMap::parse(a, {{"x", "y"}, {"y", "x"}}), 10) == 2);
    CHECK(order_of(AlgebraMap::identity(a), 10) == 1);
    auto k = polynomial_ring({"x"});
    CHECK_FALSE(order_of(AlgebraMap::parse(k, {{"x", "2*x"}}), 10));
}

TEST_CASE("ill-defined map is caught by its relation residue") {
    auto a = skew_plane(2);
    auto bad = AlgebraMap::parse(a, {{"x", "x"}, {"y", "x"}});
    auto r = bad.relation_residue();
    REQUIRE(r);
    // phi(yx + xy) = 2x^2
    CHECK(r->second == a->parse("2*x^2"));
}

TEST_CASE("normal space of the identity is the center") {
    auto a = skew_plane(2);
    auto basis = normal_space(AlgebraMap::identity(a), 4);
    // center of the -1 quantum plane in degree <= 4: 1, x^2, y^2, x^4, x^2y^2, y^4
    CHECK(basis.size() == 6);
    for (const auto& c : basis) {
        CHECK(a->commutator(c, a->gen(0)).is_zero());
        CHECK(a->commutator(c, a->gen(1)).is_zero());
    }
    auto v3 = skew_plane(3);
    auto b3 = normal_space(AlgebraMap::identity(v3), 3);
    bool has_product = false;
    for (const auto& c : b3) has_product = has_product || c == v3->parse("x1*x2*x3");
    CHECK(has_product);
}

TEST_CASE("normal space of the swap on a commutative ring is a centralizer, invariants separately") {
    auto a = polynomial_ring({"x", "y"});
    auto swap = AlgebraMap::parse(a, {{"x", "y"}, {"y", "x"}});
    // x a = a y has no nonzero solution in a commutative domain
    CHECK(normal_space(swap, 3).empty());
    auto inv = fixed_space(swap, 2);
    CHECK(inv.size() == 4);  // 1, x+y, x^2+y^2, xy
}

TEST_CASE("inner witnesses") {
    auto a = skew_plane(2);
    auto w = inner_witness(AlgebraMap::identity(a), 0);
    REQUIRE(w);
    CHECK(*w == a->one());
    CHECK_FALSE(inner_witness(AlgebraMap::parse(a, {{"x", "y"}, {"y", "x"}}), 6));
    auto k = polynomial_ring({"x"});
    CHECK_FALSE(inner_witness(AlgebraMap::parse(k, {{"x", "-x"}}), 6));
    // x -> -x, y -> -y on the quantum plane is conjugation by xy
    auto neg = AlgebraMap::parse(a, {{"x", "-x"}, {"y", "-y"}});
    auto nw = inner_witness(neg, 2);
    REQUIRE(nw);
    CHECK(*nw == a->parse("x*y"));
}

TEST_CASE("numerical monoid membership") {
    auto m = Monoid::numerical({2, 3});
    CHECK_FALSE(m.contains(1));
    for (int k : {0, 2, 3, 4, 5, 100}) CHECK(m.contains(k));
    auto even = Monoid::numerical({4, 6});
    CHECK_FALSE(even.contains(2));
    CHECK_FALSE(even.contains(7));
    CHECK(even.contains(10));
    CHECK(m.label(0) == "1");
    CHECK(m.label(3) == "t^3");
    CHECK(m.find("t^7") == 7);
    CHECK_FALSE(m.find("t"));
}

TEST_CASE("coset bases") {
    auto m = Monoid::numerical({2, 3});
    auto b = coset_basis_numerical(m, 6);
    CHECK(b == std::vector<long>{0, 2, 3, 4, 5, 7});
    CHECK(unique_complements(m, b, 6));
    for (long d = 1; d <= 6; ++d) {
        auto n = coset_basis_numerical(Monoid::numerical({1}), d);
        CHECK(n.size() == static_cast<std::size_t>(d));
        CHECK(n.back() == d - 1);
        CHECK(unique_complements(Monoid::numerical({1}), n, d));
    }
    CHECK_THROWS_AS(coset_basis_numerical(Monoid::numerical({2}), 4), NoSolution);
    auto s3 = Monoid::symmetric(3);
    auto g = coset_basis_group(s3);
    CHECK(g.size() == 6);
    CHECK(g.front() == 0);
    CHECK(unique_complements_group(s3, g, {0}));
}

TEST_CASE("symmetric group presets") {
    auto s2 = Monoid::symmetric(2);
    CHECK(s2.size() == 2);
    CHECK(s2.label(1) == "g");
    CHECK(s2.op(1, 1) == 0);
    auto s3 = Monoid::symmetric(3);
    CHECK(s3.find("g1"));
    CHECK(s3.find("g2"));
    CHECK(s3.generators().size() == 2);
    CHECK_THROWS_AS(Monoid::group({"e", "a"}, {{0, 1}, {1, 1}}, {1}), SchemaError);
}

TEST_CASE("group actions extend along the table") {
    auto a = polynomial_ring({"x1", "x2", "x3"});
    auto act = MonoidAction::permutation(Monoid::symmetric(3), a);
    Poly v = a->parse("(x1 - x2)*(x1 - x3)*(x2 - x3)");
    for (long g = 0; g < 6; ++g) {
        Poly img = act.act(g).apply(v);
        CHECK((img == v || img == -v));
    }
    // a non-homomorphic assignment is refused
    auto b = skew_plane(2);
    auto s2 = Monoid::symmetric(2);
    std::map<long, AlgebraMap> bad{{1, AlgebraMap::parse(b, {{"x", "2*y"}, {"y", "x"}})}};
    CHECK_THROWS_AS(MonoidAction(s2, b, bad), SchemaError);
}
