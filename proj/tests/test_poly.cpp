#include "doctest.h"
#include "ncdisc/errors.hpp"
#include "ncdisc/poly.hpp"

using namespace ncdisc;

TEST_CASE("parse and expand") {
    auto v = make_vars({"x", "y"});
    Poly p = parse_poly("(x - y)^2", v);
    CHECK(p == parse_poly("x^2 - 2*x*y + y^2", v));
    CHECK(p.degree() == 2);
    CHECK(p.is_homogeneous());
    CHECK(parse_poly("-x + 1/2", v).str() == "-x + 1/2");
}

TEST_CASE("parse errors carry a position") {
    auto v = make_vars({"x"});
    CHECK_THROWS_AS(parse_poly("x + w", v), ParseError);
    CHECK_THROWS_AS(parse_poly("x^^2", v), ParseError);
    CHECK_THROWS_AS(parse_poly("z3", v, 2), ParseError);
    CHECK(parse_poly("z3^3", v, 3) == Poly(v, Scalar(1)));
}

TEST_CASE("weighted deglex order") {
    auto v = make_vars({"x", "y"}, {1, 2});
    Poly p = parse_poly("x^2 + y", v);
    CHECK(p.degree() == 2);
    CHECK(p.is_homogeneous());
    // equal degree: x has the higher rank
    CHECK(p.leading_monomial() == mono_var(*v, 0, 2));
    CHECK(monomials_of_degree(*v, 4).size() == 3);
}

TEST_CASE("Bareiss agrees with cofactor expansion on a Vandermonde matrix") {
    auto v = make_vars({"a", "b", "c"});
    std::vector<Poly> xs = {Poly::variable(v, 0), Poly::variable(v, 1), Poly::variable(v, 2)};
    PolyMatrix m(3, std::vector<Poly>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = xs[i].pow(j);
    Poly expected = (xs[1] - xs[0]) * (xs[2] - xs[0]) * (xs[2] - xs[1]);
    CHECK(bareiss_det(m) == expected);
    CHECK(cofactor_det(m) == expected);
}

TEST_CASE("Bareiss handles zero pivots") {
    auto v = make_vars({"x"});
    Poly x = Poly::variable(v, 0);
    Poly zero(v), one(v, Scalar(1));
    PolyMatrix m = {{zero, x, one}, {x, zero, one}, {one, one, zero}};
    CHECK(bareiss_det(m) == cofactor_det(m));
    CHECK(bareiss_det(m) == x * Scalar(2));
}

TEST_CASE("exact division") {
    auto v = make_vars({"x", "y"});
    Poly a = parse_poly("x^3 - y^3", v);
    Poly b = parse_poly("x - y", v);
    CHECK(exact_div(a, b) == parse_poly("x^2 + x*y + y^2", v));
    CHECK_THROWS_AS(exact_div(a, parse_poly("x + y", v)), Error);
}

TEST_CASE("eq_up_to_scalar and normalize") {
    auto v = make_vars({"x"});
    auto c = eq_up_to_scalar(parse_poly("16*x^4", v), parse_poly("x^4", v));
    REQUIRE(c);
    CHECK(*c == Scalar(16));
    CHECK_FALSE(eq_up_to_scalar(parse_poly("x^4 + 1", v), parse_poly("x^4", v)));
    CHECK(normalize(parse_poly("-3*x + 6", v)) == parse_poly("x - 2", v));
}

TEST_CASE("homogenize") {
    auto v = make_vars({"x", "y"});
    auto w = make_vars({"x", "y", "t"});
    Poly h = homogenize(parse_poly("4*x^2*y^2 - 1", v), w, "t");
    CHECK(h == parse_poly("4*x^2*y^2 - t^4", w));
}

TEST_CASE("substitute and remap") {
    auto v = make_vars({"X", "Y"});
    auto w = make_vars({"x", "y"});
    Poly x = Poly::variable(w, 0), y = Poly::variable(w, 1);
    Poly p = parse_poly("X^2 - 4*Y", v);
    CHECK(substitute(p, {x + y, x * y}, w) == parse_poly("(x - y)^2", w));
    auto w2 = make_vars({"y", "x"});
    CHECK(remap(parse_poly("x + 2*y", w), w2) == parse_poly("x + 2*y", w2));
}
