#include "ncdisc/registry.hpp"

#include <chrono>

#include "ncdisc/errors.hpp"

namespace ncdisc {

namespace {

using Params = std::map<std::string, std::string>;

const std::vector<std::string> kV2Basis{"1", "x", "y", "x*y", "x^2", "x^3", "x^2*y", "x^3*y"};

Json skew_plane(const std::string& tail = "0") {
    return Json{{"generators", {"x", "y"}}, {"relations", {{{"upper", "y"}, {"lower", "x"}, {"q", "-1"}, {"tail", tail}}}}};
}

std::vector<std::string> products(const std::vector<std::string>& a, const std::vector<std::string>& b,
                                  const std::string& sep = "*") {
    std::vector<std::string> out;
    for (const auto& v : b)
        for (const auto& u : a) {
            if (sep == "#")
                out.push_back("(" + u + ")#" + v);
            else if (v == "1")
                out.push_back(u);
            else
                out.push_back(u == "1" ? v : u + sep + v);
        }
    return out;
}

std::vector<std::string> powers(const std::string& x, int n) {
    std::vector<std::string> out{"1"};
    for (int i = 1; i < n; ++i) out.push_back(i == 1 ? x : x + "^" + std::to_string(i));
    return out;
}

Json central(std::vector<std::string> names, std::vector<std::string> elements) {
    return Json{{"names", names}, {"elements", elements}};
}

Json with(Json base, const Json& extra) {
    for (const auto& [k, v] : extra.items()) base[k] = v;
    return base;
}

Json swap_action() { return Json{{"sigma", {{"x", "y"}, {"y", "x"}}}}; }

Json v2_over_xy(const std::string& tail) {
    return with(skew_plane(tail), {{"central_subalgebra", central({"X", "Y"}, {"x^2 + y^2", "x^2*y^2"})},
                                   {"basis", kV2Basis}});
}

Json homogenized_weyl() {
    return Json{{"generators", {"x", "y", "t"}},
                {"relations", {{{"upper", "y"}, {"lower", "x"}, {"q", "-1"}, {"tail", "t^2"}}}}};
}

std::vector<RegistryEntry> build_registry() {
    std::vector<RegistryEntry> r;

    r.push_back({"ore-V2", "V2 as k[x][y; x -> -x] over k[x^2, y^2]",
                 {{"generators", {"x"}},
                  {"monoid", {{"type", "numerical"}, {"variable", "y"}}},
                  {"action", {{"sigma", {{"x", "-x"}}}}},
                  {"central_subalgebra", central({"X", "Y"}, {"x^2", "y^2"})},
                  {"basis", {"1", "x", "y", "x*y"}},
                  {"formula", {{"base", {{"central_subalgebra", central({"X"}, {"x^2"})}, {"basis", {"1", "x"}}}}}}},
                 {"direct", "ore"},
                 {},
                 "x^4*y^4"});

    r.push_back({"vncn-n2", "V2 = V1[x2; x1 -> -x1] over k[x1^2, x2^2]",
                 {{"generators", {"x1"}},
                  {"monoid", {{"type", "numerical"}, {"variable", "x2"}}},
                  {"action", {{"sigma", {{"x1", "-x1"}}}}},
                  {"central_subalgebra", central({"X1", "X2"}, {"x1^2", "x2^2"})},
                  {"basis", {"1", "x1", "x2", "x1*x2"}},
                  {"formula", {{"base", {{"central_subalgebra", central({"X1"}, {"x1^2"})}, {"basis", {"1", "x1"}}}}}}},
                 {"direct", "ore"},
                 {},
                 "(x1^2*x2^2)^2"});

    {
        std::vector<std::string> v2{"1", "x1", "x2", "x1*x2"};
        r.push_back({"vncn-n3",
                     "V3 = V2[x3; x_i -> -x_i] over k[x1^2, x2^2, x3^2]; the twisting map is inner on V2 (normal "
                     "element x1*x2), so the Ore hypothesis is asserted, not certified",
                     {{"generators", {"x1", "x2"}},
                      {"relations", {{{"upper", "x2"}, {"lower", "x1"}, {"q", "-1"}}}},
                      {"monoid", {{"type", "numerical"}, {"variable", "x3"}}},
                      {"action", {{"sigma", {{"x1", "-x1"}, {"x2", "-x2"}}}}},
                      {"hypotheses", {{"no_inner", "assert"}, {"inner_degree_cap", 2}}},
                      {"central_subalgebra", central({"X1", "X2", "X3"}, {"x1^2", "x2^2", "x3^2"})},
                      {"basis", products(v2, {"1", "x3"})},
                      {"formula",
                       {{"base", {{"central_subalgebra", central({"X1", "X2"}, {"x1^2", "x2^2"})}, {"basis", v2}}}}}},
                     {"direct", "ore"},
                     {},
                     "(x1^2*x2^2*x3^2)^4"});
    }

    r.push_back({"ore-kxy-swap", "k[x,y][t; x <-> y] over k[x + y, xy, t^2]",
                 {{"generators", {"x", "y"}},
                  {"monoid", {{"type", "numerical"}}},
                  {"action", swap_action()},
                  {"central_subalgebra", central({"X", "Y", "T"}, {"x + y", "x*y", "t^2"})},
                  {"basis", {"1", "x", "t", "x*t"}},
                  {"formula", {{"base", {{"central_subalgebra", central({"X", "Y"}, {"x + y", "x*y"})}, {"basis", {"1", "x"}}}}}}},
                 {"direct", "ore"},
                 {},
                 "(x - y)^4*t^4"});

    const std::vector<std::string> s3_basis{"1", "x1", "x2", "x1^2", "x1*x2", "x1^2*x2"};
    const Json s3_central = central({"e1", "e2", "e3"}, {"x1 + x2 + x3", "x1*x2 + x1*x3 + x2*x3", "x1*x2*x3"});
    r.push_back({"refl-S3", "k[x1,x2,x3] over its S3 invariants",
                 {{"generators", {"x1", "x2", "x3"}},
                  {"central_subalgebra", s3_central},
                  {"basis", s3_basis},
                  {"formula", {{"group", "S3"}}}},
                 {"direct", "reflection"},
                 {},
                 "((x1 - x2)*(x1 - x3)*(x2 - x3))^6"});

    for (int m = 2; m <= 4; ++m) {
        const std::string ms = std::to_string(m);
        r.push_back({"refl-m" + ms, "k[x,y] over k[x^" + ms + ", y], the invariants of x -> z" + ms + "*x",
                     {{"cyclotomic_order", m},
                      {"generators", {"x", "y"}},
                      {"central_subalgebra", central({"X", "Y"}, {"x^" + ms, "y"})},
                      {"basis", powers("x", m)},
                      {"formula", {{"sigma", {{"x", "z" + ms + "*x"}}}}}},
                     {"direct", "reflection"},
                     {},
                     "x^" + std::to_string((m - 1) * m)});
    }

    for (int m = 2; m <= 6; ++m) {
        const std::string ms = std::to_string(m);
        r.push_back({"ztr-m" + ms, "k[s][t] over k[s][t^" + ms + "]",
                     {{"cyclotomic_order", m},
                      {"generators", {"s", "t"}},
                      {"central_subalgebra", central({"S", "T"}, {"s", "t^" + ms})},
                      {"basis", powers("t", m)},
                      {"formula", {{"sigma", {{"t", "z" + ms + "*t"}}}}}},
                     {"direct", "reflection"},
                     {},
                     "(t^" + std::to_string(m - 1) + ")^" + ms});
    }

    r.push_back({"monoid-23-6", "k[t^2, t^3] over k[t^6]",
                 {{"generators", Json::array()},
                  {"monoid", {{"type", "numerical"}, {"generators", {2, 3}}, {"submonoid_modulus", 6}}},
                  {"central_subalgebra", central({"T"}, {"t^6"})},
                  {"basis", {"1", "t^2", "t^3", "t^4", "t^5", "t^7"}},
                  {"verify_degree", 24}},
                 {"direct"},
                 {},
                 "t^42"});

    {
        std::vector<std::string> cosets{"1", "t^2", "t^3", "t^4", "t^5", "t^7"};
        r.push_back({"twist-ex54", "k[x1] twisted by x1 -> z6*x1 over k[t^2, t^3], over k[x1^6, t^6]",
                     {{"cyclotomic_order", 6},
                      {"generators", {"x1"}},
                      {"monoid", {{"type", "numerical"}, {"generators", {2, 3}}, {"submonoid_modulus", 6}}},
                      {"action", {{"sigma", {{"x1", "z6*x1"}}}}},
                      {"central_subalgebra", central({"X", "T"}, {"x1^6", "t^6"})},
                      {"basis", products(powers("x1", 6), cosets)},
                      {"verify_degree", 18},
                      {"degree_cap", 40},
                      {"formula", {{"base", {{"central_subalgebra", central({"X"}, {"x1^6"})}, {"basis", powers("x1", 6)}}}}}},
                     {"twist", "direct"},
                     {},
                     "(x1^30*t^42)^6"});
    }

    r.push_back({"homog-W2", "H(W2) over k[x^2, y^2, t]",
                 with(homogenized_weyl(),
                      {{"central_subalgebra", central({"P", "Q", "U"}, {"x^2", "y^2", "t"})},
                       {"basis", {"1", "x", "y", "x*y"}},
                       {"formula",
                        {{"t", "t"},
                         {"base", with(skew_plane("1"), {{"central_subalgebra", central({"P", "Q"}, {"x^2", "y^2"})},
                                                         {"basis", {"1", "x", "y", "x*y"}}})}}}}),
                 {"direct", "homog"},
                 {},
                 "(4*x^2*y^2 - t^4)^2"});

    r.push_back({"W2-over-XY", "W2 over k[x^2 + y^2, x^2 y^2]", v2_over_xy("1"), {"direct"}, {},
                 "(4*Y - 1)^4*(X^2 - 4*Y)^4", true});
    r.push_back({"V2-over-XY", "V2 over k[x^2 + y^2, x^2 y^2]", v2_over_xy("0"), {"direct"}, {},
                 "Y^4*(X^2 - 4*Y)^4", true});

    r.push_back({"homog-W2-XY", "H(W2) over k[x^2 + y^2, x^2 y^2, t]",
                 with(homogenized_weyl(), {{"central_subalgebra", central({"X", "Y", "T"}, {"x^2 + y^2", "x^2*y^2", "t"})},
                                           {"basis", kV2Basis},
                                           {"formula", {{"t", "t"}, {"base", v2_over_xy("1")}}}}),
                 {"direct", "homog"},
                 {},
                 "(4*Y - T^4)^4*(X^2 - 4*Y)^4",
                 true});

    for (const auto& [name, tail, expected] :
         std::vector<std::tuple<std::string, std::string, std::string>>{
             {"ore-V2-swap", "0", "T^8*Y^8*(X^2 - 4*Y)^8"}, {"ore-W2-swap", "1", "T^8*(4*Y - 1)^8*(X^2 - 4*Y)^8"}}) {
        const std::string alg = tail == "0" ? "V2" : "W2";
        r.push_back({name, alg + "[t; x <-> y] over k[x^2 + y^2, x^2 y^2, t^2]",
                     with(skew_plane(tail),
                          {{"monoid", {{"type", "numerical"}}},
                           {"action", swap_action()},
                           {"central_subalgebra", central({"X", "Y", "T"}, {"x^2 + y^2", "x^2*y^2", "t^2"})},
                           {"basis", products(kV2Basis, {"1", "t"})},
                           {"formula", {{"base", {{"central_subalgebra", central({"X", "Y"}, {"x^2 + y^2", "x^2*y^2"})},
                                                  {"basis", kV2Basis}}}}}}),
                     {"ore", "direct"},
                     {},
                     expected,
                     true});
    }

    r.push_back({"skgrp-S3", "k[x1,x2,x3] # S3 over the S3 invariants",
                 {{"generators", {"x1", "x2", "x3"}},
                  {"monoid", {{"type", "group"}, {"preset", "S3"}}},
                  {"central_subalgebra", central({"e1", "e2", "e3"}, {"(x1 + x2 + x3)#e", "(x1*x2 + x1*x3 + x2*x3)#e", "x1*x2*x3#e"})},
                  {"basis", products(s3_basis, {"e", "g1", "g2", "p231", "p312", "p321"}, "#")},
                  {"formula", {{"base", {{"central_subalgebra", s3_central}, {"basis", s3_basis}}}}}},
                 {"skgrp"},
                 {"direct"},
                 "((x1 - x2)*(x1 - x3)*(x2 - x3))^36"});

    // the expected value is kept as given although its degree is half of what
    // the rank-8 base discriminant forces (compare V2-over-XY); this entry fails
    r.push_back({"skgrp-V2S2", "V2 # S2 over k[x^2 + y^2, x^2 y^2]",
                 with(skew_plane(), {{"monoid", {{"type", "group"}, {"preset", "S2"}}},
                                     {"central_subalgebra", central({"X", "Y"}, {"(x^2 + y^2)#e", "x^2*y^2#e"})},
                                     {"basis", products(kV2Basis, {"e", "g"}, "#")},
                                     {"formula", {{"base", v2_over_xy("0")}}}}),
                 {"skgrp", "direct"},
                 {},
                 "(Y^2*(X^2 - 4*Y)^2)^2",
                 true});
    return r;
}

Sample sample(Params p, bool pass = true) { return Sample{std::move(p), pass}; }

std::vector<FamilyEntry> build_families() {
    std::vector<FamilyEntry> out;
    const auto& reg = registry();
    auto problem_of = [&](const std::string& name) { return find_entry(name)->problem; };
    (void)reg;

    out.push_back(
        {"aut-kxy-swap",
         "affine automorphisms of k[x,y][t; x <-> y]",
         problem_of("ore-kxy-swap"),
         "direct",
         {{"fix factors",
           {{"x", "a*x + b*y + d"}, {"y", "b*x + a*y + d"}, {"t", "c*t"}},
           {sample({{"a", "2"}, {"b", "1"}, {"c", "1"}, {"d", "0"}}),
            sample({{"a", "3"}, {"b", "1"}, {"c", "2"}, {"d", "1"}}),
            sample({{"a", "1"}, {"b", "2"}, {"c", "-1"}, {"d", "5"}}),
            sample({{"a", "5"}, {"b", "-2"}, {"c", "3"}, {"d", "-1"}}),
            sample({{"a", "1/2"}, {"b", "3"}, {"c", "7"}, {"d", "2/3"}}),
            sample({{"a", "1"}, {"b", "1"}, {"c", "1"}, {"d", "0"}}, false),
            sample({{"a", "2"}, {"b", "-2"}, {"c", "1"}, {"d", "0"}}, false),
            sample({{"a", "2"}, {"b", "1"}, {"c", "0"}, {"d", "0"}}, false)}},
          {"exchange factors",
           {{"x", "a*x + a*y - b*t + d"}, {"y", "a*x + a*y + b*t + d"}, {"t", "-c*x + c*y"}},
           {sample({{"a", "1"}, {"b", "2"}, {"c", "3"}, {"d", "-1"}}),
            sample({{"a", "1"}, {"b", "1"}, {"c", "1"}, {"d", "0"}}),
            sample({{"a", "2"}, {"b", "-1"}, {"c", "1/2"}, {"d", "3"}}),
            sample({{"a", "-1"}, {"b", "3"}, {"c", "2"}, {"d", "0"}}),
            sample({{"a", "1/3"}, {"b", "1"}, {"c", "-1"}, {"d", "1"}}),
            sample({{"a", "0"}, {"b", "1"}, {"c", "1"}, {"d", "0"}}, false),
            sample({{"a", "1"}, {"b", "0"}, {"c", "1"}, {"d", "0"}}, false),
            sample({{"a", "1"}, {"b", "1"}, {"c", "0"}, {"d", "2"}}, false)}}},
         ""});

    const std::map<std::string, std::string> mixed{{"x", "a*x + e*y"}, {"y", "e*x + a*y"}, {"t", "b*t"}};
    out.push_back({"aut-V2-swap",
                   "graded automorphisms of V2[t; x <-> y]",
                   problem_of("ore-V2-swap"),
                   "ore",
                   {{"diagonal",
                     mixed,
                     {sample({{"a", "1"}, {"e", "0"}, {"b", "1"}}), sample({{"a", "2"}, {"e", "0"}, {"b", "3"}}),
                      sample({{"a", "-1"}, {"e", "0"}, {"b", "1/2"}}), sample({{"a", "5"}, {"e", "0"}, {"b", "-2"}}),
                      sample({{"a", "1/3"}, {"e", "0"}, {"b", "7"}}),
                      sample({{"a", "1"}, {"e", "1"}, {"b", "1"}}, false),
                      sample({{"a", "2"}, {"e", "0"}, {"b", "0"}}, false),
                      sample({{"a", "1"}, {"e", "-1"}, {"b", "2"}}, false)}},
                    {"swap",
                     mixed,
                     {sample({{"a", "0"}, {"e", "1"}, {"b", "1"}}), sample({{"a", "0"}, {"e", "2"}, {"b", "3"}}),
                      sample({{"a", "0"}, {"e", "-1"}, {"b", "1/2"}}), sample({{"a", "0"}, {"e", "5"}, {"b", "-2"}}),
                      sample({{"a", "0"}, {"e", "1/3"}, {"b", "7"}}),
                      sample({{"a", "0"}, {"e", "0"}, {"b", "1"}}, false),
                      sample({{"a", "3"}, {"e", "1"}, {"b", "1"}}, false),
                      sample({{"a", "0"}, {"e", "2"}, {"b", "0"}}, false)}}},
                   ""});

    out.push_back({"aut-W2-swap",
                   "graded automorphisms of W2[t; x <-> y]",
                   problem_of("ore-W2-swap"),
                   "ore",
                   {{"diagonal",
                     {{"x", "a*x"}, {"y", "c*y"}, {"t", "b*t"}},
                     {sample({{"a", "1"}, {"c", "1"}, {"b", "1"}}), sample({{"a", "1"}, {"c", "1"}, {"b", "2"}}),
                      sample({{"a", "-1"}, {"c", "-1"}, {"b", "3"}}), sample({{"a", "-1"}, {"c", "-1"}, {"b", "-1/2"}}),
                      sample({{"a", "1"}, {"c", "1"}, {"b", "7"}}),
                      sample({{"a", "2"}, {"c", "1/2"}, {"b", "1"}}, false),
                      sample({{"a", "1"}, {"c", "1"}, {"b", "0"}}, false),
                      sample({{"a", "1"}, {"c", "2"}, {"b", "1"}}, false),
                      sample({{"a", "3"}, {"c", "1/3"}, {"b", "1"}}, false)}},
                    {"swap",
                     {{"x", "a*y"}, {"y", "c*x"}, {"t", "b*t"}},
                     {sample({{"a", "1"}, {"c", "1"}, {"b", "1"}}), sample({{"a", "1"}, {"c", "1"}, {"b", "-2"}}),
                      sample({{"a", "-1"}, {"c", "-1"}, {"b", "1"}}), sample({{"a", "-1"}, {"c", "-1"}, {"b", "5"}}),
                      sample({{"a", "1"}, {"c", "1"}, {"b", "1/3"}}),
                      sample({{"a", "2"}, {"c", "1/2"}, {"b", "1"}}, false),
                      sample({{"a", "1"}, {"c", "1"}, {"b", "0"}}, false),
                      sample({{"a", "1"}, {"c", "-1"}, {"b", "1"}}, false)}}},
                   ""});

    out.push_back({"aut-homog-W2",
                   "graded automorphisms of H(W2)",
                   problem_of("homog-W2"),
                   "direct",
                   {{"diagonal",
                     {{"x", "a*x"}, {"y", "b*y"}, {"t", "c*t"}},
                     {sample({{"a", "1"}, {"b", "1"}, {"c", "1"}}), sample({{"a", "2"}, {"b", "2"}, {"c", "2"}}),
                      sample({{"a", "1"}, {"b", "4"}, {"c", "2"}}), sample({{"a", "4"}, {"b", "1"}, {"c", "-2"}}),
                      sample({{"a", "-1"}, {"b", "-1"}, {"c", "1"}}), sample({{"a", "9"}, {"b", "1"}, {"c", "3"}}),
                      sample({{"a", "1/4"}, {"b", "1"}, {"c", "1/2"}}),
                      sample({{"a", "1"}, {"b", "1"}, {"c", "2"}}, false),
                      sample({{"a", "2"}, {"b", "1"}, {"c", "1"}}, false),
                      sample({{"a", "0"}, {"b", "1"}, {"c", "0"}}, false)}},
                    {"swap",
                     {{"x", "a*y"}, {"y", "b*x"}, {"t", "c*t"}},
                     {sample({{"a", "1"}, {"b", "1"}, {"c", "1"}}), sample({{"a", "2"}, {"b", "2"}, {"c", "-2"}}),
                      sample({{"a", "1"}, {"b", "9"}, {"c", "3"}}), sample({{"a", "-4"}, {"b", "-1"}, {"c", "2"}}),
                      sample({{"a", "1/2"}, {"b", "2"}, {"c", "1"}}),
                      sample({{"a", "1"}, {"b", "1"}, {"c", "-3"}}, false),
                      sample({{"a", "2"}, {"b", "3"}, {"c", "1"}}, false),
                      sample({{"a", "0"}, {"b", "2"}, {"c", "0"}}, false)}}},
                   ""});

    const std::map<std::string, std::string> smash{{"x", "(a*x + b*y)#e + (c*x + d*y)#g"},
                                                   {"y", "(b*x + a*y)#e + (d*x + c*y)#g"},
                                                   {"g", "u#e + s#g"}};
    auto p = [](std::string a, std::string b, std::string c, std::string d, std::string s, std::string u = "0") {
        return Params{{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"s", s}, {"u", u}};
    };
    out.push_back({"aut-V2S2",
                   "automorphisms of V2 # S2 fixed by the image of x#e",
                   problem_of("skgrp-V2S2"),
                   "skgrp",
                   {{"diagonal",
                     smash,
                     {sample(p("1", "0", "0", "0", "1")), sample(p("2", "0", "0", "0", "1")),
                      sample(p("3", "0", "0", "0", "-1")), sample(p("-1", "0", "0", "0", "1")),
                      sample(p("1/2", "0", "0", "0", "-1")), sample(p("0", "0", "0", "0", "1"), false),
                      sample(p("1", "0", "0", "0", "2"), false), sample(p("1", "1", "0", "0", "0", "1"), false)}},
                    {"a = -d^2/b, c = -d",
                     smash,
                     {sample(p("-1/3", "3", "-1", "1", "1")), sample(p("-1/2", "2", "-1", "1", "1")),
                      sample(p("-4", "1", "-2", "2", "-1")), sample(p("0", "3", "0", "0", "1")),
                      sample(p("4", "-1", "-2", "2", "-1")), sample(p("2", "1", "-1", "1", "1"), false),
                      sample(p("-1", "1", "2", "1", "1"), false),
                      sample(p("-1", "1", "-1", "1", "1"), false), sample(p("-1", "1", "-1", "1", "1", "1"), false)}},
                    {"a = -b = sqrt((c^2 + d^2)/2)",
                     smash,
                     {sample(p("1", "-1", "1", "1", "1")), sample(p("5", "-5", "7", "1", "1")),
                      sample(p("5", "-5", "5", "5", "-1")), sample(p("13", "-13", "17", "7", "1")),
                      sample(p("-5", "5", "1", "7", "-1")), sample(p("2", "-2", "1", "1", "1"), false),
                      sample(p("1", "1", "1", "1", "1"), false), sample(p("5", "-5", "7", "2", "1"), false)}}},
                   "g"});
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

const std::vector<RegistryEntry>& registry() {
    static const std::vector<RegistryEntry> r = build_registry();
    return r;
}

const RegistryEntry* find_entry(const std::string& name) {
    for (const auto& e : registry())
        if (e.name == name) return &e;
    return nullptr;
}

Poly expected_ambient(const RegistryEntry& e, const Problem& p) {
    if (e.expected_central) return p.free_module().ambient_image(parse_poly(e.expected, p.free_module().rvars(), p.algebra->base()->order()));
    return parse_poly(e.expected, p.algebra->ambient_vars(), p.algebra->base()->order());
}

Discriminant entry_disc(const RegistryEntry& e, const std::string& method) {
    Problem p = load_problem(e.problem);
    return run_disc(p, method);
}

VerifyResult verify_example(const RegistryEntry& e, bool stress) {
    VerifyResult out;
    Json rec{{"name", e.name}, {"description", e.description}, {"expected", e.expected}, {"results", Json::array()}};
    std::vector<std::string> methods = e.methods;
    if (stress) methods.insert(methods.end(), e.stress_methods.begin(), e.stress_methods.end());
    bool all = true;
    try {
        Problem p = load_problem(e.problem);
        Poly want = expected_ambient(e, p);
        rec["expected_ambient"] = normalize(want).str();
        std::optional<Poly> first;
        for (const auto& m : methods) {
            auto start = std::chrono::steady_clock::now();
            Json r{{"method", m}};
            try {
                Discriminant d = run_disc(p, m);
                Poly got = remap(d.ambient, p.algebra->ambient_vars());
                auto w = eq_up_to_scalar(got, want);
                r["ambient"] = d.ambient_normalized.str();
                r["matches_expected"] = w.has_value();
                if (w) r["scalar"] = w->str();
                if (first) r["agrees_with_" + methods.front()] = eq_up_to_scalar(got, *first).has_value();
                else first = got;
                r["hypothesis_certificates"] = d.certificates;
                all = all && w.has_value();
            } catch (const Error& err) {
                r["error"] = err.what();
                all = false;
            }
            out.timings.emplace_back(m, seconds_since(start));
            rec["results"].push_back(r);
        }
    } catch (const Error& err) {
        rec["error"] = err.what();
        all = false;
    }
    rec["pass"] = all;
    out.pass = all;
    out.record = std::move(rec);
    return out;
}

const std::vector<FamilyEntry>& families() {
    static const std::vector<FamilyEntry> f = build_families();
    return f;
}

const FamilyEntry* find_family(const std::string& name) {
    for (const auto& f : families())
        if (f.name == name) return &f;
    return nullptr;
}

VerifyResult verify_family(const FamilyEntry& f) {
    VerifyResult out;
    Json rec{{"name", f.name}, {"description", f.description}, {"branches", Json::array()}};
    bool all = true;
    try {
        Problem p = load_problem(f.problem);
        const FreeModule& fm = p.free_module();
        const auto& t = p.algebra;
        Discriminant d = run_disc(p, f.disc_method);
        rec["disc"] = disc_record(d);
        const int order = t->base()->order();
        std::vector<std::vector<TwistedMap>> passing;
        for (const auto& b : f.branches) {
            Json br{{"name", b.name}, {"samples", Json::array()}};
            int members = 0, members_ok = 0, violators = 0, violators_caught = 0;
            std::vector<TwistedMap> maps;
            for (const auto& r : family_verify(fm, d, b.images, b.samples)) {
                (r.expect_pass ? members : violators)++;
                if (r.as_expected()) (r.expect_pass ? members_ok : violators_caught)++;
                Json s{{"params", r.params},       {"expect_pass", r.expect_pass}, {"endomorphism", r.endomorphism},
                       {"automorphism", r.automorphism}, {"disc", r.disc},            {"as_expected", r.as_expected()},
                       {"detail", r.detail}};
                if (r.passed()) {
                    std::map<std::string, Scalar> vals;
                    for (const auto& [k, v] : r.params) vals[k] = parse_scalar(v, order);
                    maps.push_back(TwistedMap::parse(t, b.images, vals));
                    if (!f.group_generator.empty()) {
                        long g = *t->monoid().find(f.group_generator);
                        TElem img = maps.back().apply(t->monoid_element(g));
                        bool pm = img == t->monoid_element(g) || img == t->monoid_element(g) * Scalar(-1);
                        s["generator_image"] = t->str(img);
                        s["generator_image_is_pm"] = pm;
                        all = all && pm;
                    }
                }
                br["samples"].push_back(s);
                all = all && r.as_expected();
            }
            br["members"] = members;
            br["members_passing"] = members_ok;
            br["violators"] = violators;
            br["violators_failing"] = violators_caught;
            rec["branches"].push_back(br);
            passing.push_back(std::move(maps));
        }
        // closure under composition
        std::vector<std::pair<std::string, const TwistedMap*>> picks;
        for (std::size_t i = 0; i < passing.size(); ++i)
            for (std::size_t k = 0; k < std::min<std::size_t>(passing[i].size(), i == 0 ? 2 : 1); ++k)
                picks.emplace_back(f.branches[i].name + "#" + std::to_string(k), &passing[i][k]);
        Json closure = Json::array();
        for (const auto& [na, a] : picks)
            for (const auto& [nb, b] : picks) {
                if (a == b) continue;
                TwistedMap c = a->compose(*b);
                bool ok = !endomorphism_residue(c) && check_automorphism(c).ok && preserves_disc_ideal(c, fm, d).ok;
                closure.push_back({{"outer", na}, {"inner", nb}, {"ok", ok}});
                all = all && ok;
            }
        rec["closure"] = closure;
    } catch (const Error& err) {
        rec["error"] = err.what();
        all = false;
    }
    rec["pass"] = all;
    out.pass = all;
    out.record = std::move(rec);
    return out;
}

}  // namespace ncdisc
