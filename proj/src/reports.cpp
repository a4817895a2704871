#include "bornson/reports.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <sstream>

#include "bornson/graph.hpp"
#include "bornson/quasi_nilpotent.hpp"
#include "bornson/random_systems.hpp"
#include "bornson/scenarios.hpp"
#include "bornson/solver.hpp"

namespace bornson {

namespace {

Report complex_json(Amplitude z)
{
    return {{"re", z.real()}, {"im", z.imag()}};
}

Report vector_json(const StateVector& v)
{
    Report arr = Report::array();
    for (auto z : v.entries())
        arr.push_back(complex_json(z));
    return arr;
}

Report vertices_json(const std::vector<std::size_t>& vertices)
{
    Report arr = Report::array();
    for (auto v : vertices)
        arr.push_back(v + 1);
    return arr;
}

Report norms_json(const TransferOperator& op)
{
    Report out;
    for (auto kind : {NormKind::Inf, NormKind::One, NormKind::Frobenius})
        out[to_string(kind)] = operator_norm(op, kind);
    return out;
}

Report truncation_json(const TruncationReport& r)
{
    Report out;
    out["order"] = r.order;
    out["norm_kind"] = to_string(r.norm_kind);
    out["defect_norm"] = r.defect_norm;
    out["operator_norm"] = r.operator_norm;
    out["phi_norm"] = r.phi_norm;
    if (r.exact_remainder_norm)
        out["exact_remainder_norm"] = *r.exact_remainder_norm;
    else
        out["exact_remainder_norm"] = "unavailable (I - T is singular)";
    if (r.bound)
        out["bound"] = *r.bound;
    else
        out["bound"] = r.bound_note;
    out["quasi_nilpotent"] = r.quasi_nilpotent;
    out["quasi_nilpotent_threshold"] = kQuasiNilpotentThreshold;
    return out;
}

} // namespace

Report analyze_report(const SystemSpec& spec, NormKind norm)
{
    const auto op = transfer_operator(spec);
    const auto acyclicity = analyze_acyclicity(extract_graph(op));

    Report r;
    r["command"] = "analyze";
    r["dimension"] = op.dim();
    r["transitions"] = op.nnz();
    r["is_acyclic"] = acyclicity.is_acyclic;
    if (acyclicity.is_acyclic) {
        r["depth"] = *acyclicity.depth;
        r["term_count"] = *acyclicity.depth + 1;
        r["topological_order"] = vertices_json(acyclicity.topological_order);
    } else {
        r["witness_cycle"] = vertices_json(acyclicity.witness_cycle);
    }
    r["det_I_minus_T"] = complex_json(determinant_identity_minus(op));
    r["norms"] = norms_json(op);
    r["norm_kind"] = to_string(norm);
    return r;
}

StateVector resolve_phi(const SystemSpec& spec, std::string_view phi_arg)
{
    std::size_t index = 0;
    const auto* end = phi_arg.data() + phi_arg.size();
    auto [ptr, ec] = std::from_chars(phi_arg.data(), end, index);
    if (ec == std::errc() && ptr == end) {
        if (index < 1 || index > spec.dimension)
            throw ArgumentError("--phi basis index " + std::string(phi_arg) +
                                " out of range 1.." + std::to_string(spec.dimension));
        return StateVector::basis(spec.dimension, index - 1);
    }
    return load_state_vector(std::string(phi_arg), spec.dimension);
}

Report solve_report(const SystemSpec& spec, const StateVector& phi,
                    std::optional<std::size_t> order, NormKind norm)
{
    const auto op = transfer_operator(spec);
    if (phi.dim() != op.dim())
        throw DimensionError("phi has dimension " + std::to_string(phi.dim()) +
                             ", system has " + std::to_string(op.dim()));
    const auto acyclicity = analyze_acyclicity(extract_graph(op));

    Report r;
    r["command"] = "solve";
    r["dimension"] = op.dim();
    r["phi"] = vector_json(phi);
    r["is_acyclic"] = acyclicity.is_acyclic;
    if (acyclicity.is_acyclic)
        r["depth"] = *acyclicity.depth;
    Report warnings = Report::array();

    if (!order) {
        // Throws NotNilpotentError for cyclic graphs.
        const auto sys = make_system(op);
        const auto expansion = solve_exact(sys, phi);
        r["mode"] = "exact";
        r["term_count"] = expansion.terms.size();
        Report terms = Report::array();
        for (std::size_t k = 0; k < expansion.terms.size(); ++k)
            terms.push_back({{"k", k}, {"amplitudes", vector_json(expansion.terms[k])}});
        r["terms"] = std::move(terms);
        r["total"] = vector_json(expansion.total);
        r["warnings"] = std::move(warnings);
        return r;
    }

    r["mode"] = "truncated";
    r["order"] = *order;
    Report terms = Report::array();
    StateVector term = phi;
    StateVector partial = phi;
    terms.push_back({{"k", 0}, {"amplitudes", vector_json(term)}});
    for (std::size_t k = 1; k <= *order; ++k) {
        term = matvec(op, term);
        partial += term;
        terms.push_back({{"k", k}, {"amplitudes", vector_json(term)}});
    }
    r["term_count"] = terms.size();
    r["terms"] = std::move(terms);
    r["total"] = vector_json(partial);

    if (acyclicity.is_acyclic && *order < *acyclicity.depth) {
        const auto exact = solve_exact(make_system(op), phi);
        const std::size_t depth = *acyclicity.depth;
        const std::string omitted =
            *order + 1 == depth ? "term T^" + std::to_string(depth) + " is omitted"
                                : "terms T^" + std::to_string(*order + 1) + " .. T^" +
                                      std::to_string(depth) + " are omitted";
        warnings.push_back("order " + std::to_string(*order) + " is below the depth " +
                           std::to_string(depth) + "; " + omitted);
        for (std::size_t j = 0; j < op.dim(); ++j) {
            if (partial[j] != Amplitude{} || exact.total[j] == Amplitude{})
                continue;
            std::size_t first = *order + 1;
            while (exact.terms[first][j] == Amplitude{})
                ++first;
            warnings.push_back("state |" + spec.label(j) + "> has amplitude 0 at order " +
                               std::to_string(*order) + "; its first contribution is the "
                               "omitted order-" + std::to_string(first) + " term");
        }
    }

    r["truncation"] = truncation_json(remainder_bound(op, phi, *order, norm));
    r["warnings"] = std::move(warnings);
    return r;
}

Report classify_report(const SystemSpec& spec)
{
    const auto report = classify_interference(make_system(transfer_operator(spec)));

    Report r;
    r["command"] = "classify";
    r["regime"] = to_string(report.regime);
    r["a4"] = complex_json(report.a4);
    r["a4_born1"] = complex_json(report.a4_born1);
    Report paths = Report::array();
    double incoherent = 0.0;
    for (const auto& p : report.paths) {
        paths.push_back({{"path", vertices_json(p.path)}, {"amplitude", complex_json(p.amplitude)}});
        incoherent += std::abs(p.amplitude);
    }
    r["paths"] = std::move(paths);
    r["incoherent_sum"] = incoherent;
    if (report.relative_error_born1)
        r["relative_error_born1"] = *report.relative_error_born1;
    else
        r["relative_error_born1"] = "undefined (A4 = 0)";
    r["dark_threshold"] = kDarkThreshold;
    return r;
}

Report bench_report(const BenchOptions& options)
{
    if (options.dim < 2)
        throw ArgumentError("bench needs --dim >= 2");
    if (!(options.density >= 0.0 && options.density <= 1.0))
        throw ArgumentError("bench needs 0 <= --density <= 1");

    using clock = std::chrono::steady_clock;
    Rng rng(options.seed);
    const auto op = random_dag_operator({options.dim, options.density, 0.0, 1.0}, rng);
    const auto phi = random_state(options.dim, rng);

    const auto t0 = clock::now();
    const auto sys = make_system(op);
    const auto expansion = solve_exact(sys, phi);
    const auto t1 = clock::now();
    const auto dense = direct_solve_oracle(op, phi);
    const auto t2 = clock::now();

    const double series_s = std::chrono::duration<double>(t1 - t0).count();
    const double dense_s = std::chrono::duration<double>(t2 - t1).count();
    const double dense_norm = dense.norm(NormKind::Frobenius);
    const double diff = (expansion.total - dense).norm(NormKind::Frobenius);

    Report r;
    r["command"] = "bench";
    r["dimension"] = options.dim;
    r["density"] = options.density;
    r["seed"] = options.seed;
    r["transitions"] = op.nnz();
    r["depth"] = sys.depth();
    r["term_count"] = sys.term_count();
    r["born_son_seconds"] = series_s;
    r["dense_lu_seconds"] = dense_s;
    r["speedup"] = series_s > 0.0 ? dense_s / series_s : 0.0;
    r["agreement"] = dense_norm > 0.0 ? diff / dense_norm : diff;
    return r;
}

SystemSpec scenario_spec(std::string_view name, std::size_t levels)
{
    if (name == "cascade") {
        if (levels < 2)
            throw ArgumentError("cascade needs at least 2 levels");
        const std::vector<Amplitude> ones(levels - 1, Amplitude{1.0});
        return spec_from_operator(build_cascade(ones).op());
    }
    if (name == "diamond")
        return spec_from_operator(build_diamond({1.0, 1.0, 1.0, 1.0}).op());
    if (name == "double-diamond")
        return spec_from_operator(
            build_double_diamond({1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0}).op());
    throw ArgumentError("unknown scenario '" + std::string(name) +
                        "' (expected cascade, diamond or double-diamond)");
}

// ---------------------------------------------------------------- tables

namespace {

bool is_complex(const Report& v)
{
    return v.is_object() && v.size() == 2 && v.contains("re") && v.contains("im");
}

std::string format_value(const Report& v)
{
    if (is_complex(v)) {
        const double im = v["im"].get<double>();
        return v["re"].dump() + (std::signbit(im) ? " - " : " + ") +
               Report(std::abs(im)).dump() + "i";
    }
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_array() && std::all_of(v.begin(), v.end(),
                                    [](const Report& x) { return x.is_primitive(); })) {
        std::string s = "[";
        for (std::size_t k = 0; k < v.size(); ++k)
            s += (k ? ", " : "") + format_value(v[k]);
        return s + "]";
    }
    return v.dump();
}

void flatten(const Report& v, const std::string& prefix, std::ostream& out)
{
    if (v.is_object() && !is_complex(v)) {
        for (const auto& [key, child] : v.items())
            flatten(child, prefix.empty() ? key : prefix + "." + key, out);
        return;
    }
    if (v.is_array() && !v.empty() &&
        std::any_of(v.begin(), v.end(), [](const Report& x) { return !x.is_primitive(); })) {
        for (std::size_t k = 0; k < v.size(); ++k)
            flatten(v[k], prefix + "[" + std::to_string(k) + "]", out);
        return;
    }
    out << prefix << " = " << format_value(v) << '\n';
}

void solve_table(const Report& r, std::ostream& out)
{
    const auto& terms = r["terms"];
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"state"};
    for (const auto& t : terms)
        header.push_back("T^" + t["k"].dump() + " phi");
    header.push_back(r["mode"] == "exact" ? "psi" : "partial sum");
    rows.push_back(header);

    const std::size_t n = r["dimension"].get<std::size_t>();
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::string> row{"|" + std::to_string(j + 1) + ">"};
        for (const auto& t : terms)
            row.push_back(format_value(t["amplitudes"][j]));
        row.push_back(format_value(r["total"][j]));
        rows.push_back(std::move(row));
    }

    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << row[c];
            if (c + 1 < row.size())
                out << std::string(width[c] - row[c].size() + 2, ' ');
        }
        out << '\n';
    }

    Report rest = r;
    for (const char* key : {"terms", "total", "phi"})
        rest.erase(key);
    flatten(rest, "", out);
}

} // namespace

std::string render_table(const Report& report)
{
    std::ostringstream out;
    if (report.value("command", "") == "solve")
        solve_table(report, out);
    else
        flatten(report, "", out);
    return out.str();
}

} // namespace bornson
