#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncdisc/problem.hpp"

namespace ncdisc {

/// A worked example: a problem, the methods that compute its discriminant
/// and the expected value.
struct RegistryEntry {
    std::string name;
    std::string description;
    Json problem;
    std::vector<std::string> methods;         // run by default
    std::vector<std::string> stress_methods;  // run with --stress only
    std::string expected;                     // in the central variables when expected_central
    bool expected_central = false;
};

const std::vector<RegistryEntry>& registry();
/// nullptr when unknown.
const RegistryEntry* find_entry(const std::string& name);

struct VerifyResult {
    bool pass = false;
    Json record;  // deterministic; wall-clock times are kept apart
    std::vector<std::pair<std::string, double>> timings;
};

/// Every method must match the expected value up to a scalar.
VerifyResult verify_example(const RegistryEntry& e, bool stress);

/// Discriminant of the entry's problem by one method, for callers that
/// want the value itself.
Discriminant entry_disc(const RegistryEntry& e, const std::string& method);
/// The expected value in ambient variables of the entry's problem.
Poly expected_ambient(const RegistryEntry& e, const Problem& p);

struct FamilyBranch {
    std::string name;
    std::map<std::string, std::string> images;
    std::vector<Sample> samples;
};

/// A parametrized family of candidate automorphisms of one algebra.
struct FamilyEntry {
    std::string name;
    std::string description;
    Json problem;
    std::string disc_method;
    std::vector<FamilyBranch> branches;
    std::string group_generator;  // when set, passing maps must send it to +-itself
};

const std::vector<FamilyEntry>& families();
const FamilyEntry* find_family(const std::string& name);

/// Runs every sample, composes passing samples pairwise (first of each
/// branch and the first two of each branch) and re-checks the compositions.
VerifyResult verify_family(const FamilyEntry& f);

}  // namespace ncdisc
