#include "bornson/bornson.h"

#include <complex>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "bornson/graph.hpp"
#include "bornson/quasi_nilpotent.hpp"
#include "bornson/reports.hpp"
#include "bornson/scenarios.hpp"
#include "bornson/solver.hpp"
#include "bornson/system_spec.hpp"

struct bs_operator {
    bornson::SparseOperator op;
};

struct bs_system {
    bornson::BornSonSystem sys;
};

struct bs_spec {
    bornson::SystemSpec spec;
};

static_assert(sizeof(bs_complex) == sizeof(std::complex<double>));

namespace {

thread_local std::string last_error;

bs_status fail(bs_status status, const char* what)
{
    last_error = what;
    return status;
}

// Runs fn, translating library exceptions to status codes.
template <class Fn>
bs_status guarded(Fn&& fn) noexcept
{
    try {
        last_error.clear();
        fn();
        return BS_OK;
    } catch (const bornson::DimensionError& e) {
        return fail(BS_ERR_DIMENSION, e.what());
    } catch (const bornson::ResonanceError& e) {
        return fail(BS_ERR_RESONANCE, e.what());
    } catch (const bornson::NotNilpotentError& e) {
        return fail(BS_ERR_NOT_NILPOTENT, e.what());
    } catch (const bornson::SingularError& e) {
        return fail(BS_ERR_SINGULAR, e.what());
    } catch (const bornson::TopologyError& e) {
        return fail(BS_ERR_TOPOLOGY, e.what());
    } catch (const bornson::UnboundedEnumerationError& e) {
        return fail(BS_ERR_UNBOUNDED, e.what());
    } catch (const bornson::EnumerationLimitError& e) {
        return fail(BS_ERR_LIMIT, e.what());
    } catch (const bornson::ParseError& e) {
        return fail(BS_ERR_PARSE, e.what());
    } catch (const bornson::ArgumentError& e) {
        return fail(BS_ERR_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(BS_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(BS_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(BS_ERR_INTERNAL, "unknown error");
    }
}

void require(const void* p, const char* name)
{
    if (p == nullptr)
        throw bornson::ArgumentError(std::string(name) + " is NULL");
}

bornson::Amplitude to_cpp(bs_complex z)
{
    return {z.re, z.im};
}

bs_complex to_c(bornson::Amplitude z)
{
    return {z.real(), z.imag()};
}

bornson::StateVector read_vector(const bs_complex* v, size_t dim)
{
    require(v, "vector");
    std::vector<bornson::Amplitude> data(dim);
    for (size_t i = 0; i < dim; ++i)
        data[i] = to_cpp(v[i]);
    return bornson::StateVector(std::move(data));
}

void write_vector(const bornson::StateVector& v, bs_complex* out)
{
    for (size_t i = 0; i < v.dim(); ++i)
        out[i] = to_c(v[i]);
}

void write_dense(const bornson::DenseMatrix& m, bs_complex* out)
{
    for (Eigen::Index j = 0; j < m.rows(); ++j)
        for (Eigen::Index i = 0; i < m.cols(); ++i)
            out[j * m.cols() + i] = to_c(m(j, i));
}

std::vector<bornson::Triplet> read_transitions(const bs_transition* t, size_t count)
{
    if (count > 0)
        require(t, "transitions");
    std::vector<bornson::Triplet> out;
    out.reserve(count);
    for (size_t k = 0; k < count; ++k)
        out.push_back({t[k].to, t[k].from, to_cpp(t[k].amplitude)});
    return out;
}

bornson::NormKind to_cpp(bs_norm_kind kind)
{
    switch (kind) {
    case BS_NORM_INF: return bornson::NormKind::Inf;
    case BS_NORM_ONE: return bornson::NormKind::One;
    case BS_NORM_FRO: return bornson::NormKind::Frobenius;
    }
    throw bornson::ArgumentError("unknown norm kind");
}

char* copy_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

char* render(const bornson::Report& r, bs_format format)
{
    if (format == BS_FORMAT_TABLE)
        return copy_string(bornson::render_table(r));
    return copy_string(r.dump(2) + "\n");
}

} // namespace

extern "C" {

const char* bs_version(void)
{
    return "1.0.0";
}

const char* bs_last_error(void)
{
    return last_error.c_str();
}

const char* bs_status_name(bs_status status)
{
    switch (status) {
    case BS_OK: return "ok";
    case BS_ERR_ARGUMENT: return "argument error";
    case BS_ERR_DIMENSION: return "dimension error";
    case BS_ERR_RESONANCE: return "resonance error";
    case BS_ERR_NOT_NILPOTENT: return "not nilpotent";
    case BS_ERR_SINGULAR: return "singular";
    case BS_ERR_TOPOLOGY: return "topology error";
    case BS_ERR_UNBOUNDED: return "unbounded enumeration";
    case BS_ERR_LIMIT: return "enumeration limit";
    case BS_ERR_PARSE: return "parse error";
    case BS_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void bs_string_free(char* s)
{
    std::free(s);
}

// ---- operators

bs_status bs_operator_create(size_t dim, const bs_transition* transitions, size_t count,
                             bs_operator** out)
{
    return guarded([&] {
        require(out, "out");
        auto op = bornson::SparseOperator::from_triplets(dim, read_transitions(transitions, count));
        *out = new bs_operator{std::move(op)};
    });
}

bs_status bs_operator_from_scattering(size_t dim, const double* h0,
                                      const bs_transition* potential, size_t count,
                                      bs_complex energy, bs_operator** out)
{
    return guarded([&] {
        require(out, "out");
        require(h0, "h0");
        bornson::DiagonalOperator diag(std::vector<double>(h0, h0 + dim));
        auto v = bornson::SparseOperator::from_triplets(dim, read_transitions(potential, count));
        *out = new bs_operator{bornson::build_transfer_operator(diag, v, to_cpp(energy))};
    });
}

void bs_operator_free(bs_operator* op)
{
    delete op;
}

size_t bs_operator_dim(const bs_operator* op)
{
    return op ? op->op.dim() : 0;
}

size_t bs_operator_nnz(const bs_operator* op)
{
    return op ? op->op.nnz() : 0;
}

bs_status bs_operator_get(const bs_operator* op, size_t from, size_t to, bs_complex* out)
{
    return guarded([&] {
        require(op, "op");
        require(out, "out");
        *out = to_c(op->op.at(to, from));
    });
}

bs_status bs_operator_norm(const bs_operator* op, bs_norm_kind kind, double* out)
{
    return guarded([&] {
        require(op, "op");
        require(out, "out");
        *out = bornson::operator_norm(op->op, to_cpp(kind));
    });
}

bs_status bs_operator_power(const bs_operator* op, size_t k, bs_operator** out)
{
    return guarded([&] {
        require(op, "op");
        require(out, "out");
        *out = new bs_operator{bornson::power(op->op, k)};
    });
}

bs_status bs_operator_product(const bs_operator* a, const bs_operator* b, bs_operator** out)
{
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(out, "out");
        *out = new bs_operator{bornson::matmul(a->op, b->op)};
    });
}

bs_status bs_matvec(const bs_operator* op, const bs_complex* v, size_t dim, bs_complex* out)
{
    return guarded([&] {
        require(op, "op");
        require(out, "out");
        write_vector(bornson::matvec(op->op, read_vector(v, dim)), out);
    });
}

// ---- graph

bs_status bs_analyze_graph(const bs_operator* op, int* is_acyclic, size_t* depth,
                           size_t* cycle, size_t cycle_cap, size_t* cycle_len)
{
    return guarded([&] {
        require(op, "op");
        const auto r = bornson::analyze_acyclicity(bornson::extract_graph(op->op));
        if (is_acyclic)
            *is_acyclic = r.is_acyclic ? 1 : 0;
        if (depth)
            *depth = r.depth.value_or(0);
        if (cycle_len)
            *cycle_len = r.witness_cycle.size();
        if (cycle)
            for (size_t k = 0; k < r.witness_cycle.size() && k < cycle_cap; ++k)
                cycle[k] = r.witness_cycle[k];
    });
}

bs_status bs_path_sum_entry(const bs_operator* op, size_t from, size_t to, size_t k,
                            bs_complex* out)
{
    return guarded([&] {
        require(op, "op");
        require(out, "out");
        *out = to_c(bornson::path_sum_entry(bornson::extract_graph(op->op), from, to, k));
    });
}

// ---- systems

bs_status bs_system_create(const bs_operator* op, bs_system** out)
{
    return guarded([&] {
        require(op, "op");
        require(out, "out");
        *out = new bs_system{bornson::make_system(op->op)};
    });
}

void bs_system_free(bs_system* sys)
{
    delete sys;
}

size_t bs_system_dim(const bs_system* sys)
{
    return sys ? sys->sys.dim() : 0;
}

size_t bs_system_depth(const bs_system* sys)
{
    return sys ? sys->sys.depth() : 0;
}

bs_status bs_solve_exact(const bs_system* sys, const bs_complex* phi, size_t dim,
                         bs_complex* terms, bs_complex* total)
{
    return guarded([&] {
        require(sys, "sys");
        require(total, "total");
        const auto expansion = bornson::solve_exact(sys->sys, read_vector(phi, dim));
        if (terms)
            for (size_t k = 0; k < expansion.terms.size(); ++k)
                write_vector(expansion.terms[k], terms + k * dim);
        write_vector(expansion.total, total);
    });
}

bs_status bs_born_approximation(const bs_operator* op, const bs_complex* phi, size_t dim,
                                size_t order, bs_complex* out)
{
    return guarded([&] {
        require(op, "op");
        require(out, "out");
        write_vector(bornson::born_approximation(op->op, read_vector(phi, dim), order), out);
    });
}

bs_status bs_direct_solve(const bs_operator* op, const bs_complex* phi, size_t dim,
                          bs_complex* out)
{
    return guarded([&] {
        require(op, "op");
        require(out, "out");
        write_vector(bornson::direct_solve_oracle(op->op, read_vector(phi, dim)), out);
    });
}

bs_status bs_det_check(const bs_system* sys, bs_complex* out)
{
    return guarded([&] {
        require(sys, "sys");
        require(out, "out");
        *out = to_c(bornson::det_check(sys->sys));
    });
}

bs_status bs_finite_neumann_inverse(const bs_system* sys, bs_complex* out)
{
    return guarded([&] {
        require(sys, "sys");
        require(out, "out");
        write_dense(bornson::finite_neumann_inverse(sys->sys), out);
    });
}

bs_status bs_full_resolvent(const bs_system* sys, const bs_complex* g0, size_t dim,
                            bs_complex* out)
{
    return guarded([&] {
        require(sys, "sys");
        require(g0, "g0");
        require(out, "out");
        std::vector<bornson::Amplitude> diag(dim);
        for (size_t i = 0; i < dim; ++i)
            diag[i] = to_cpp(g0[i]);
        write_dense(bornson::full_resolvent(sys->sys, diag), out);
    });
}

bs_status bs_t_matrix(const bs_system* sys, const bs_operator* potential, bs_complex* out)
{
    return guarded([&] {
        require(sys, "sys");
        require(potential, "potential");
        require(out, "out");
        write_dense(bornson::t_matrix(sys->sys, potential->op), out);
    });
}

// ---- truncation

bs_status bs_remainder_bound(const bs_operator* op, const bs_complex* phi, size_t dim,
                             size_t order, bs_norm_kind kind, bs_truncation_report* out)
{
    return guarded([&] {
        require(op, "op");
        require(out, "out");
        const auto r =
            bornson::remainder_bound(op->op, read_vector(phi, dim), order, to_cpp(kind));
        *out = bs_truncation_report{r.order,
                                    kind,
                                    r.defect_norm,
                                    r.operator_norm,
                                    r.phi_norm,
                                    r.exact_remainder_norm ? 1 : 0,
                                    r.exact_remainder_norm.value_or(0.0),
                                    r.bound ? 1 : 0,
                                    r.bound.value_or(0.0),
                                    r.quasi_nilpotent ? 1 : 0};
    });
}

// ---- specs and reports

bs_status bs_spec_load(const char* path, bs_spec** out)
{
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        *out = new bs_spec{bornson::load_system_spec(path)};
    });
}

bs_status bs_spec_parse(const char* text, bs_spec** out)
{
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new bs_spec{bornson::parse_system_spec(text)};
    });
}

bs_status bs_spec_scenario(const char* name, size_t levels, bs_spec** out)
{
    return guarded([&] {
        require(name, "name");
        require(out, "out");
        *out = new bs_spec{bornson::scenario_spec(name, levels)};
    });
}

void bs_spec_free(bs_spec* spec)
{
    delete spec;
}

bs_status bs_spec_serialize(const bs_spec* spec, char** out)
{
    return guarded([&] {
        require(spec, "spec");
        require(out, "out");
        *out = copy_string(bornson::serialize_system_spec(spec->spec));
    });
}

bs_status bs_spec_operator(const bs_spec* spec, bs_operator** out)
{
    return guarded([&] {
        require(spec, "spec");
        require(out, "out");
        *out = new bs_operator{bornson::transfer_operator(spec->spec)};
    });
}

bs_status bs_report_analyze(const bs_spec* spec, bs_norm_kind norm, bs_format format,
                            char** out, int* is_acyclic)
{
    return guarded([&] {
        require(spec, "spec");
        require(out, "out");
        const auto r = bornson::analyze_report(spec->spec, to_cpp(norm));
        if (is_acyclic)
            *is_acyclic = r["is_acyclic"].get<bool>() ? 1 : 0;
        *out = render(r, format);
    });
}

bs_status bs_report_solve(const bs_spec* spec, const char* phi, long order, bs_norm_kind norm,
                          bs_format format, char** out, char** warnings)
{
    return guarded([&] {
        require(spec, "spec");
        require(phi, "phi");
        require(out, "out");
        if (warnings)
            *warnings = nullptr;
        std::optional<std::size_t> truncation;
        if (order >= 0)
            truncation = std::size_t(order);
        const auto r = bornson::solve_report(spec->spec, bornson::resolve_phi(spec->spec, phi),
                                             truncation, to_cpp(norm));
        std::string lines;
        for (const auto& w : r["warnings"])
            lines += w.get<std::string>() + "\n";
        char* text = render(r, format);
        if (warnings && !lines.empty()) {
            try {
                *warnings = copy_string(lines);
            } catch (...) {
                std::free(text);
                throw;
            }
        }
        *out = text;
    });
}

bs_status bs_report_classify(const bs_spec* spec, bs_format format, char** out)
{
    return guarded([&] {
        require(spec, "spec");
        require(out, "out");
        *out = render(bornson::classify_report(spec->spec), format);
    });
}

bs_status bs_report_bench(size_t dim, double density, uint64_t seed, bs_format format,
                          char** out)
{
    return guarded([&] {
        require(out, "out");
        *out = render(bornson::bench_report({dim, density, seed}), format);
    });
}

} // extern "C"
