#include "doctest.h"
#include "ncdisc/scalar.hpp"

using ncdisc::Scalar;

TEST_CASE("roots of unity have the right order") {
    for (int n : {1, 2, 3, 4, 5, 6, 8, 12}) {
        Scalar z = Scalar::root_of_unity(n);
        CHECK(z.pow(n).is_one());
        for (int k = 1; k < n; ++k) CHECK_FALSE(z.pow(k).is_one());
    }
}

TEST_CASE("sum of primitive cube roots is -1") {
    Scalar w = Scalar::root_of_unity(3);
    CHECK(w + w.pow(2) == Scalar(-1));
    CHECK((w + w.pow(2)).is_rational());
    CHECK((w + w.pow(2)).order() == 1);
}

TEST_CASE("mixed orders embed into the lcm field") {
    Scalar i = Scalar::root_of_unity(4);
    Scalar w = Scalar::root_of_unity(3);
    Scalar z12 = Scalar::root_of_unity(12);
    CHECK(i * w == z12.pow(7));
    CHECK(Scalar::root_of_unity(6).pow(2) == w);
    CHECK(Scalar::root_of_unity(2) == Scalar(-1));
}

TEST_CASE("inverse is a field inverse") {
    Scalar z = Scalar::root_of_unity(5);
    Scalar a = z * 3 + z.pow(2) - Scalar(mpq_class(1, 2));
    CHECK((a * a.inverse()).is_one());
    CHECK((Scalar(mpq_class(2, 7)).inverse()) == Scalar(mpq_class(7, 2)));
}

TEST_CASE("printing") {
    CHECK(Scalar(mpq_class(3, 2)).str() == "3/2");
    CHECK(Scalar::root_of_unity(3).str() == "z3");
    CHECK(Scalar(-4).str() == "-4");
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(ncdisc::euler_phi(12) == 4);
    const auto& p = ncdisc::cyclotomic_polynomial(6);  // x^2 - x + 1
    REQUIRE(p.size() == 3);
    CHECK(p[0] == 1);
    CHECK(p[1] == -1);
    CHECK(p[2] == 1);
}
