#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "ncdisc/errors.hpp"
#include "ncdisc/registry.hpp"

using namespace ncdisc;

namespace {

int emit(const Json& j, const std::string& summary) {
    std::cout << j.dump(2) << "\n";
    if (!summary.empty()) std::cerr << summary << "\n";
    return 0;
}

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot read " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw SchemaError(path + ": " + e.what());
    }
}

std::vector<int> parse_gens(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw SchemaError("--gens expects comma-separated integers");
        }
    }
    return out;
}

int run_verify(const std::string& name, bool all, bool stress) {
    Json out = Json::array();
    bool ok = true;
    auto report = [&](const VerifyResult& r) {
        ok = ok && r.pass;
        std::cerr << (r.pass ? "PASS " : "FAIL ") << r.record["name"].get<std::string>();
        for (const auto& [method, secs] : r.timings) std::cerr << "  " << method << " " << secs << " s";
        std::cerr << "\n";
        out.push_back(r.record);
    };
    if (all) {
        for (const auto& e : registry()) report(verify_example(e, stress));
        for (const auto& f : families()) report(verify_family(f));
    } else if (const auto* e = find_entry(name)) {
        report(verify_example(*e, stress));
    } else if (const auto* f = find_family(name)) {
        report(verify_family(*f));
    } else {
        throw SchemaError("unknown example '" + name + "'");
    }
    std::cout << (all ? out : out[0]).dump(2) << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discriminants of noncommutative algebras over central subalgebras"};
    app.require_subcommand(1);

    std::string spec_path, method = "direct", element, map_path, disc_method = "direct", gens = "2,3", name;
    long modulus = 6, deg = 4, pow = 4;
    int n = 3;
    bool all = false, stress = false;

    auto* check = app.add_subcommand("check", "Validate a problem: confluence, action, basis");
    check->add_option("spec", spec_path)->required();
    auto* disc = app.add_subcommand("disc", "Discriminant by one method");
    disc->add_option("spec", spec_path)->required();
    disc->add_option("--method", method)->check(CLI::IsMember({"direct", "ore", "skgrp", "twist", "reflection", "homog"}));
    auto* trace = app.add_subcommand("trace", "Regular trace of an element");
    trace->add_option("spec", spec_path)->required();
    trace->add_option("--element", element)->required();
    auto* mdisc = app.add_subcommand("monoid-disc", "Discriminant of kM over k[t^d] for a numerical monoid");
    mdisc->add_option("--gens", gens);
    mdisc->add_option("--modulus", modulus);
    auto* center = app.add_subcommand("center-decompose", "Components a t^i of the center of an Ore extension");
    center->add_option("spec", spec_path)->required();
    center->add_option("--deg", deg);
    center->add_option("--pow", pow);
    auto* aut = app.add_subcommand("aut-check", "Check a candidate automorphism or a sampled family");
    aut->add_option("spec", spec_path)->required();
    aut->add_option("--map", map_path)->required();
    aut->add_option("--disc-method", disc_method);
    auto* verify = app.add_subcommand("verify", "Verify registered examples");
    verify->add_option("name", name);
    verify->add_flag("--all", all);
    verify->add_flag("--stress", stress);
    auto* list = app.add_subcommand("list", "List registered examples and families");
    auto* sn = app.add_subcommand("conjecture-sn", "d(A/A^Sn) against the Vandermonde determinant to the n!");
    sn->add_option("--n", n);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) {
            Problem p = load_problem_file(spec_path);
            Json j = run_check(p);
            return emit(j, "ok");
        }
        if (*disc) {
            Problem p = load_problem_file(spec_path);
            Discriminant d = run_disc(p, method);
            return emit(disc_record(d), "d =_k* " + d.ambient_normalized.str());
        }
        if (*trace) {
            Problem p = load_problem_file(spec_path);
            Json j = run_trace(p, element);
            return emit(j, "tr(" + element + ") = " + j["ambient"].get<std::string>());
        }
        if (*mdisc) {
            Json j = run_monoid_disc(parse_gens(gens), modulus);
            return emit(j, "d =_k* " + j["ambient"].get<std::string>());
        }
        if (*center) {
            Problem p = load_problem_file(spec_path);
            return emit(run_center_decompose(p, deg, pow), "");
        }
        if (*aut) {
            Problem p = load_problem_file(spec_path);
            Json j = run_aut_check(p, read_json(map_path), disc_method);
            bool ok = j["all_as_expected"].get<bool>();
            emit(j, ok ? "all samples as expected" : "some samples not as expected");
            return ok ? 0 : 1;
        }
        if (*verify) {
            if (!all && name.empty()) throw SchemaError("verify needs a name or --all");
            return run_verify(name, all, stress);
        }
        if (*list) {
            Json j = Json::array();
            for (const auto& e : registry()) j.push_back({{"name", e.name}, {"description", e.description}});
            for (const auto& f : families()) j.push_back({{"name", f.name}, {"description", f.description}});
            return emit(j, "");
        }
        if (*sn) {
            auto start = std::chrono::steady_clock::now();
            Json j = run_conjecture_sn(n);
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            return emit(j, std::string(j["equals_vandermonde_power"].get<bool>() ? "equals" : "differs from") +
                               " the Vandermonde power (" + std::to_string(secs) + " s)");
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 4;
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis failed: " << e.what() << "\n";
        return 3;
    } catch (const NonConfluent& e) {
        std::cerr << "hypothesis failed: " << e.what() << "\n";
        return 3;
    } catch (const NoSolution& e) {
        std::cerr << "hypothesis failed: " << e.what() << "\n";
        return 3;
    } catch (const AmbiguousSolution& e) {
        std::cerr << "hypothesis failed: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
