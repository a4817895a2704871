// bornson command-line front end. Links only against the C API.
//
// Exit codes: 0 success, 1 input error, 2 structural condition (cyclic
// transition graph).

#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "bornson/bornson.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitStructural = 2;

struct SpecDeleter {
    void operator()(bs_spec* s) const { bs_spec_free(s); }
};
using SpecHandle = std::unique_ptr<bs_spec, SpecDeleter>;

struct StringDeleter {
    void operator()(char* s) const { bs_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

int report_failure(bs_status status)
{
    std::cerr << "error (" << bs_status_name(status) << "): " << bs_last_error() << '\n';
    return status == BS_ERR_NOT_NILPOTENT ? kExitStructural : kExitInput;
}

bool load(const std::string& path, SpecHandle& out, int& rc)
{
    bs_spec* raw = nullptr;
    const bs_status st = bs_spec_load(path.c_str(), &raw);
    if (st != BS_OK) {
        rc = report_failure(st);
        return false;
    }
    out.reset(raw);
    return true;
}

void emit(char* text)
{
    OwnedString owned(text);
    std::fputs(owned.get(), stdout);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact finite Born series for acyclic transition graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(bs_version()));

    const std::map<std::string, bs_norm_kind> norms{
        {"inf", BS_NORM_INF}, {"one", BS_NORM_ONE}, {"fro", BS_NORM_FRO}};
    const std::map<std::string, bs_format> formats{
        {"json", BS_FORMAT_STRUCTURED}, {"table", BS_FORMAT_TABLE}};

    std::string norm_name = "inf";
    std::string format_name = "json";
    app.add_option("--norm", norm_name, "Operator norm for truncation reports")
        ->check(CLI::IsMember({"inf", "one", "fro"}))
        ->capture_default_str();
    app.add_option("--format", format_name, "Report format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();

    std::string spec_path;

    auto* analyze = app.add_subcommand("analyze", "Graph structure, depth, determinant, norms");
    analyze->add_option("spec", spec_path, "System spec file")->required();

    std::string phi = "1";
    long order = -1;
    auto* solve = app.add_subcommand("solve", "Born expansion of the scattered state");
    solve->add_option("spec", spec_path, "System spec file")->required();
    solve->add_option("--phi", phi, "Incoming state: 1-based basis index or vector file")
        ->default_str("1");
    solve->add_option("--order", order, "Truncate the series after T^order")
        ->check(CLI::NonNegativeNumber);

    auto* classify = app.add_subcommand("classify", "Interference regime of a diamond system");
    classify->add_option("spec", spec_path, "System spec file")->required();

    std::size_t dim = 2000;
    double density = 0.001;
    std::uint64_t seed = 42;
    auto* bench = app.add_subcommand("bench", "Finite series vs dense LU on a random DAG");
    bench->add_option("--dim", dim, "Number of levels")->default_val(2000);
    bench->add_option("--density", density, "Forward-edge probability")
        ->default_val(0.001)
        ->check(CLI::Range(0.0, 1.0));
    bench->add_option("--seed", seed, "Generator seed")->default_val(42);

    std::string scenario_name;
    std::size_t levels = 3;
    auto* scenario = app.add_subcommand("scenario", "Print a bundled system spec");
    scenario->add_option("name", scenario_name, "cascade, diamond or double-diamond")
        ->required()
        ->check(CLI::IsMember({"cascade", "diamond", "double-diamond"}));
    scenario->add_option("--levels", levels, "Cascade length")->default_val(3);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }
    const bs_norm_kind norm = norms.at(norm_name);
    const bs_format format = formats.at(format_name);

    int rc = kExitOk;
    SpecHandle spec;
    char* text = nullptr;

    if (*analyze) {
        if (!load(spec_path, spec, rc))
            return rc;
        int acyclic = 0;
        const bs_status st = bs_report_analyze(spec.get(), norm, format, &text, &acyclic);
        if (st != BS_OK)
            return report_failure(st);
        emit(text);
        return acyclic ? kExitOk : kExitStructural;
    }

    if (*solve) {
        if (!load(spec_path, spec, rc))
            return rc;
        char* warnings = nullptr;
        const bs_status st =
            bs_report_solve(spec.get(), phi.c_str(), order, norm, format, &text, &warnings);
        if (st != BS_OK) {
            if (st == BS_ERR_NOT_NILPOTENT)
                std::cerr << "hint: pass --order N to truncate the series and get a "
                             "remainder bound\n";
            return report_failure(st);
        }
        if (warnings) {
            OwnedString owned(warnings);
            std::istringstream lines(owned.get());
            for (std::string line; std::getline(lines, line);)
                std::cerr << "warning: " << line << '\n';
        }
        emit(text);
        return kExitOk;
    }

    if (*classify) {
        if (!load(spec_path, spec, rc))
            return rc;
        const bs_status st = bs_report_classify(spec.get(), format, &text);
        if (st != BS_OK)
            return report_failure(st);
        emit(text);
        return kExitOk;
    }

    if (*bench) {
        const bs_status st = bs_report_bench(dim, density, seed, format, &text);
        if (st != BS_OK)
            return report_failure(st);
        emit(text);
        return kExitOk;
    }

    if (*scenario) {
        bs_spec* raw = nullptr;
        bs_status st = bs_spec_scenario(scenario_name.c_str(), levels, &raw);
        if (st != BS_OK)
            return report_failure(st);
        spec.reset(raw);
        st = bs_spec_serialize(spec.get(), &text);
        if (st != BS_OK)
            return report_failure(st);
        emit(text);
        return kExitOk;
    }

    return kExitInput;
}
