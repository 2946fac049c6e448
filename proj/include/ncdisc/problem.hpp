#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ncdisc/autcheck.hpp"

namespace ncdisc {

using Json = nlohmann::json;

/// A parsed problem description: the algebra, an optional free-module
/// structure over a central subalgebra, caps and hypothesis modes.
struct Problem {
    Json spec;
    TwistedPtr algebra;
    std::optional<long> modulus;  // numerical monoids: H = dN cap M
    std::unique_ptr<FreeModule> module;
    long verify_degree = 8;
    bool assert_no_inner = false;
    long inner_degree_cap = 4;
    std::vector<std::string> certificates;

    const FreeModule& free_module() const;
};

/// Throws SchemaError (bad JSON, unknown names), ParseError (expressions),
/// NonConfluent or HypothesisError (non-central generator).
Problem load_problem(const Json& spec);
Problem load_problem_file(const std::string& path);

/// The base extension of a formula method; fields it lacks are inherited
/// from the parent (coefficient order, generators, relations).
Problem load_base_problem(const Problem& parent);

/// method: direct | ore | skgrp | twist | reflection | homog.
Discriminant run_disc(const Problem& p, const std::string& method);
Json disc_record(const Discriminant& d);

Json run_check(const Problem& p);
Json run_trace(const Problem& p, const std::string& element);
Json run_center_decompose(const Problem& p, long degree_cap, long power_cap);
/// map: {"images": {...}, "params": {...}} or {"images": {...}, "samples": [{"params": {...}, "expect": true}]}.
/// The discriminant is computed by disc_method.
Json run_aut_check(const Problem& p, const Json& map, const std::string& disc_method = "direct");
Json run_monoid_disc(const std::vector<int>& gens, long modulus);
/// d(A/A^Sn) for the permutation action on k[x1..xn] via the reflection
/// trick, compared with the Vandermonde determinant to the power n!.
/// CapExceeded for n outside [2, 4].
Json run_conjecture_sn(int n);

/// Certificates for "no sigma^i inner" (ore/twist) or "no g inner" (skgrp);
/// throws HypothesisError in check mode when a witness is found.
std::vector<std::string> no_inner_certificates(const Problem& p);

}  // namespace ncdisc
