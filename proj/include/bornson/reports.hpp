#pragma once

// Report builders behind the CLI commands. Each returns a JSON tree (the
// structured view); render_table() prints the same tree as a human table,
// formatting every number exactly as the JSON serializer does.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "bornson/algebra.hpp"
#include "bornson/system_spec.hpp"

namespace bornson {

using Report = nlohmann::ordered_json;

Report analyze_report(const SystemSpec& spec, NormKind norm = NormKind::Inf);

// phi_arg is a 1-based basis index ("3") or the path of a vector file.
StateVector resolve_phi(const SystemSpec& spec, std::string_view phi_arg);

// Without `order` the system must be acyclic (NotNilpotentError otherwise)
// and the exact expansion is reported. With `order` the partial sum is
// reported for any system, plus the truncation report when I - T is
// invertible.
Report solve_report(const SystemSpec& spec, const StateVector& phi,
                    std::optional<std::size_t> order, NormKind norm = NormKind::Inf);

Report classify_report(const SystemSpec& spec);

struct BenchOptions {
    std::size_t dim = 2000;
    double density = 0.001;
    std::uint64_t seed = 42;
};

Report bench_report(const BenchOptions& options);

// Bundled example systems: "cascade" (with `levels`), "diamond",
// "double-diamond". Unit amplitudes throughout.
SystemSpec scenario_spec(std::string_view name, std::size_t levels = 3);

std::string render_table(const Report& report);

} // namespace bornson
