#include "doctest.h"
#include "ncdisc/errors.hpp"
#include "ncdisc/pbw.hpp"

using namespace ncdisc;

namespace {

// k<x,y>/(yx + xy): the quantum plane at q = -1.
AlgebraPtr minus_one_plane() {
    PBWPresentation p(make_vars({"x", "y"}));
    p.set_relation(1, 0, Scalar(-1), Poly(p.vars()));
    return PBWAlgebra::create(p);
}

// First Weyl algebra with yx = xy - 1, i.e. [x, y] = 1.
AlgebraPtr weyl() {
    PBWPresentation p(make_vars({"x", "y"}));
    p.set_relation(1, 0, Scalar(1), Poly(p.vars(), Scalar(-1)));
    return PBWAlgebra::create(p);
}

}  // namespace

TEST_CASE("skew commutation") {
    auto a = minus_one_plane();
    Poly x = a->gen(0), y = a->gen(1);
    CHECK(a->mul(y, x) == -(x * y));
    // y^2 x = x y^2 and y x^2 = x^2 y
    CHECK(a->mul(a->pow(y, 2), x) == a->mul(x, a->pow(y, 2)));
    CHECK(a->mul(y, a->pow(x, 3)) == -(a->pow(x, 3) * y));
    CHECK_FALSE(a->is_commutative());
}

TEST_CASE("Weyl algebra commutators") {
    auto a = weyl();
    Poly x = a->gen(0), y = a->gen(1), one = a->one();
    CHECK(a->commutator(x, y) == one);
    // [x, y^n] = n y^(n-1), checked against the derivation rule
    for (unsigned n = 1; n <= 5; ++n) {
        Poly lhs = a->commutator(x, a->pow(y, n));
        Poly rhs = a->pow(y, n - 1) * Scalar(static_cast<long>(n));
        CHECK(lhs == rhs);
    }
    CHECK(a->parse("y*x") == a->parse("x*y - 1"));
}

TEST_CASE("associativity on random-ish words") {
    auto a = weyl();
    Poly p = a->parse("x^2*y + 3*y - x");
    Poly q = a->parse("y^2 + x*y");
    Poly r = a->parse("y*x^3 - 2");
    CHECK(a->mul(a->mul(p, q), r) == a->mul(p, a->mul(q, r)));
}

TEST_CASE("non-confluent presentation is rejected with both routes") {
    // yx = xy + x, zy = yz + y, zx = xz + 1
    PBWPresentation p(make_vars({"x", "y", "z"}));
    auto v = p.vars();
    p.set_relation(1, 0, Scalar(1), parse_poly("x", v));
    p.set_relation(2, 1, Scalar(1), parse_poly("y", v));
    p.set_relation(2, 0, Scalar(1), Poly(v, Scalar(1)));
    auto report = check_confluence(p);
    REQUIRE_FALSE(report.ok);
    // reductions computed by hand
    CHECK(report.route_a == parse_poly("x*y*z + x*y + x*z + x + y", v));
    CHECK(report.route_b == parse_poly("x*y*z + x*y + x*z + y + 1", v));
    CHECK_THROWS_AS(PBWAlgebra::create(p), NonConfluent);
}

TEST_CASE("U(sl2)-like Lie relations are confluent") {
    // e < f < h with fe = ef - h, he = eh + 2e, hf = fh - 2f
    PBWPresentation p(make_vars({"e", "f", "h"}));
    auto v = p.vars();
    p.set_relation(1, 0, Scalar(1), parse_poly("-h", v));
    p.set_relation(2, 0, Scalar(1), parse_poly("2*e", v));
    p.set_relation(2, 1, Scalar(1), parse_poly("-2*f", v));
    CHECK(check_confluence(p).ok);
}

TEST_CASE("relation validation") {
    PBWPresentation p(make_vars({"x", "y"}));
    auto v = p.vars();
    CHECK_THROWS_AS(p.set_relation(0, 1, Scalar(1), Poly(v)), SchemaError);
    CHECK_THROWS_AS(p.set_relation(1, 0, Scalar(1), parse_poly("x^2", v)), SchemaError);
    CHECK_THROWS_AS(p.set_relation(1, 0, Scalar(0), Poly(v)), SchemaError);
}

TEST_CASE("Hilbert series rank") {
    PBWPresentation p(make_vars({"x", "y"}));
    CHECK(hilbert_rank(p, {2, 2}) == 4);
    CHECK(hilbert_rank(p, {1, 2}) == 2);
    CHECK_FALSE(hilbert_rank(p, {2}));
    PBWPresentation q(make_vars({"a", "b", "c"}));
    CHECK(hilbert_rank(q, {1, 2, 3}) == 6);
}

TEST_CASE("homogenized Weyl algebra") {
    PBWPresentation p(make_vars({"x", "y"}));
    p.set_relation(1, 0, Scalar(1), Poly(p.vars(), Scalar(-1)));
    auto h = homogenize_presentation(p);
    REQUIRE(h.size() == 3);
    CHECK(h.is_graded());
    auto a = PBWAlgebra::create(h);
    CHECK(a->commutator(a->gen(0), a->gen(1)) == a->pow(a->gen(2), 2));
    CHECK(a->commutator(a->gen(2), a->gen(0)).is_zero());
}
