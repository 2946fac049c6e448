#include "doctest.h"
#include "ncdisc/errors.hpp"
#include "ncdisc/registry.hpp"

using namespace ncdisc;

namespace {

Json quantum_plane() {
    return Json::parse(R"({
      "generators": ["x"],
      "monoid": {"type": "numerical", "variable": "y"},
      "action": {"sigma": {"x": "-x"}},
      "central_subalgebra": {"names": ["X", "Y"], "elements": ["x^2", "y^2"]},
      "basis": ["1", "x", "y", "x*y"],
      "formula": {"base": {"central_subalgebra": {"names": ["X"], "elements": ["x^2"]}, "basis": ["1", "x"]}}
    })");
}

}  // namespace

TEST_CASE("loader: quantum plane as an Ore extension") {
    Problem p = load_problem(quantum_plane());
    CHECK(p.free_module().rank() == 4);
    Problem base = load_base_problem(p);
    CHECK(base.free_module().rank() == 2);
    Discriminant direct = run_disc(p, "direct"), ore = run_disc(p, "ore");
    CHECK(direct.ambient_normalized == ore.ambient_normalized);
    CHECK(direct.ambient_normalized == parse_poly("x^4*y^4", p.algebra->ambient_vars()));
    bool confluence = false, basis = false;
    for (const auto& c : direct.certificates) {
        confluence = confluence || c.find("confluent") != std::string::npos;
        basis = basis || c.find("basis verified") != std::string::npos;
    }
    CHECK(confluence);
    CHECK(basis);
    CHECK(run_trace(p, "x^2 + 3")["ambient"] == "4*x^2 + 12");
}

TEST_CASE("loader: schema errors") {
    Json j = quantum_plane();
    j["generators"] = "x";
    CHECK_THROWS_AS(load_problem(j), SchemaError);
    j = quantum_plane();
    j["monoid"]["type"] = "ring";
    CHECK_THROWS_AS(load_problem(j), SchemaError);
    j = quantum_plane();
    j["central_subalgebra"]["names"] = {"X"};
    CHECK_THROWS_AS(load_problem(j), SchemaError);
    j = quantum_plane();
    j["hypotheses"] = {{"no_inner", "maybe"}};
    CHECK_THROWS_AS(load_problem(j), SchemaError);
    CHECK_THROWS_AS(run_disc(load_problem(quantum_plane()), "skgrp"), SchemaError);
    CHECK_THROWS_AS(run_disc(load_problem(quantum_plane()), "nonsense"), SchemaError);
    j = quantum_plane();
    j["basis"] = {"1", "x", "y", "x*y + 2*"};
    CHECK_THROWS_AS(load_problem(j), ParseError);
}

TEST_CASE("loader: hypotheses") {
    Json j = quantum_plane();
    // y is not central in the quantum plane
    j["central_subalgebra"] = {{"names", {"X", "Y"}}, {"elements", {"x^2", "y"}}};
    CHECK_THROWS_AS(load_problem(j), HypothesisError);
    j = quantum_plane();
    j["basis"] = {"1", "x", "y", "x + y"};
    CHECK_THROWS_AS(run_disc(load_problem(j), "direct"), HypothesisError);
}

TEST_CASE("group presets and labels") {
    Json j = {{"generators", {"x1", "x2", "x3"}},
              {"monoid", {{"type", "group"}, {"preset", "S3"}}},
              {"central_subalgebra", {{"names", {"s"}}, {"elements", {"(x1 + x2 + x3)#e"}}}},
              {"basis", {"1#e"}}};
    Problem p = load_problem(j);
    // the 3-cycle x1 -> x2 -> x3 -> x1 in one-line form
    TElem a = p.algebra->parse("1#p231"), b = p.algebra->parse("1#g1"), c = p.algebra->parse("1#g2");
    CHECK(p.algebra->mul(b, c) == a);
    j["monoid"]["preset"] = "T3";
    CHECK_THROWS_AS(load_problem(j), SchemaError);
}

TEST_CASE("registry lookups") {
    CHECK(find_entry("ore-V2") != nullptr);
    CHECK(find_entry("missing") == nullptr);
    CHECK(find_family("aut-V2S2") != nullptr);
    for (const auto& e : registry()) {
        CHECK_FALSE(e.description.empty());
        CHECK_FALSE(e.methods.empty());
    }
    auto r = verify_example(*find_entry("ore-kxy-swap"), false);
    CHECK(r.pass);
    CHECK(r.record["results"].size() == 2);
    CHECK_FALSE(r.record.dump().find("seconds") != std::string::npos);
}
