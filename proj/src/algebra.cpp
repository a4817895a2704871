#include "bornson/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace bornson {

namespace {

void require_positive_dim(std::size_t dim, const char* what)
{
    if (dim == 0)
        throw ArgumentError(std::string(what) + ": dimension must be positive");
}

void require_same_dim(std::size_t a, std::size_t b, const char* what)
{
    if (a != b)
        throw DimensionError(std::string(what) + ": dimension mismatch (" +
                             std::to_string(a) + " vs " + std::to_string(b) + ")");
}

bool finite(Amplitude z) noexcept
{
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

} // namespace

const char* to_string(NormKind kind) noexcept
{
    switch (kind) {
    case NormKind::Inf: return "inf";
    case NormKind::One: return "one";
    case NormKind::Frobenius: return "fro";
    }
    return "?";
}

// ---------------------------------------------------------------- StateVector

StateVector::StateVector(std::size_t dim) : data_(dim)
{
    require_positive_dim(dim, "StateVector");
}

StateVector::StateVector(std::vector<Amplitude> entries) : data_(std::move(entries))
{
    require_positive_dim(data_.size(), "StateVector");
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!finite(data_[i]))
            throw ArgumentError("StateVector: non-finite amplitude at index " +
                                std::to_string(i));
}

StateVector StateVector::basis(std::size_t dim, std::size_t index)
{
    if (index >= dim)
        throw ArgumentError("basis index " + std::to_string(index) +
                            " out of range for dimension " + std::to_string(dim));
    StateVector v(dim);
    v.data_[index] = 1.0;
    return v;
}

bool StateVector::is_zero() const noexcept
{
    return std::all_of(data_.begin(), data_.end(),
                       [](Amplitude z) { return z == Amplitude{}; });
}

StateVector& StateVector::operator+=(const StateVector& other)
{
    require_same_dim(dim(), other.dim(), "StateVector +");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += other.data_[i];
    return *this;
}

StateVector& StateVector::operator-=(const StateVector& other)
{
    require_same_dim(dim(), other.dim(), "StateVector -");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] -= other.data_[i];
    return *this;
}

double StateVector::norm(NormKind kind) const noexcept
{
    double acc = 0.0;
    switch (kind) {
    case NormKind::Inf:
        for (auto z : data_)
            acc = std::max(acc, std::abs(z));
        return acc;
    case NormKind::One:
        for (auto z : data_)
            acc += std::abs(z);
        return acc;
    case NormKind::Frobenius:
        for (auto z : data_)
            acc += std::norm(z);
        return std::sqrt(acc);
    }
    return acc;
}

StateVector operator+(StateVector a, const StateVector& b)
{
    a += b;
    return a;
}

StateVector operator-(StateVector a, const StateVector& b)
{
    a -= b;
    return a;
}

// ------------------------------------------------------------- SparseOperator

SparseOperator::SparseOperator(std::size_t dim) : dim_(dim), row_ptr_(dim + 1, 0)
{
    require_positive_dim(dim, "SparseOperator");
}

SparseOperator SparseOperator::from_triplets(std::size_t dim,
                                             std::span<const Triplet> triplets,
                                             double drop_below)
{
    SparseOperator op(dim);

    std::vector<Triplet> sorted(triplets.begin(), triplets.end());
    for (const auto& t : sorted) {
        if (t.row >= dim || t.col >= dim)
            throw ArgumentError("entry (" + std::to_string(t.row) + ", " +
                                std::to_string(t.col) +
                                ") out of range for dimension " + std::to_string(dim));
        if (!finite(t.value))
            throw ArgumentError("entry (" + std::to_string(t.row) + ", " +
                                std::to_string(t.col) + ") is not finite");
    }
    std::sort(sorted.begin(), sorted.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    for (std::size_t k = 1; k < sorted.size(); ++k)
        if (sorted[k].row == sorted[k - 1].row && sorted[k].col == sorted[k - 1].col)
            throw ArgumentError("duplicate entry (" + std::to_string(sorted[k].row) +
                                ", " + std::to_string(sorted[k].col) + ")");

    op.cols_.reserve(sorted.size());
    op.values_.reserve(sorted.size());
    for (const auto& t : sorted) {
        if (std::abs(t.value) <= drop_below)
            continue;
        op.cols_.push_back(t.col);
        op.values_.push_back(t.value);
        ++op.row_ptr_[t.row + 1];
    }
    std::partial_sum(op.row_ptr_.begin(), op.row_ptr_.end(), op.row_ptr_.begin());
    return op;
}

SparseOperator SparseOperator::from_dense(const DenseMatrix& m, double drop_below)
{
    if (m.rows() != m.cols())
        throw DimensionError("from_dense: matrix is not square");
    std::vector<Triplet> triplets;
    for (Eigen::Index j = 0; j < m.rows(); ++j)
        for (Eigen::Index i = 0; i < m.cols(); ++i)
            if (std::abs(m(j, i)) > drop_below)
                triplets.push_back({std::size_t(j), std::size_t(i), m(j, i)});
    return from_triplets(std::size_t(m.rows()), triplets, drop_below);
}

SparseOperator SparseOperator::identity(std::size_t dim)
{
    SparseOperator op(dim);
    op.cols_.resize(dim);
    op.values_.assign(dim, Amplitude{1.0});
    std::iota(op.cols_.begin(), op.cols_.end(), std::size_t{0});
    std::iota(op.row_ptr_.begin(), op.row_ptr_.end(), std::size_t{0});
    return op;
}

std::span<const std::size_t> SparseOperator::row_cols(std::size_t row) const
{
    return std::span<const std::size_t>(cols_).subspan(row_ptr_[row],
                                                       row_ptr_[row + 1] - row_ptr_[row]);
}

std::span<const Amplitude> SparseOperator::row_values(std::size_t row) const
{
    return std::span<const Amplitude>(values_).subspan(row_ptr_[row],
                                                       row_ptr_[row + 1] - row_ptr_[row]);
}

bool SparseOperator::contains(std::size_t row, std::size_t col) const
{
    if (row >= dim_)
        return false;
    auto cols = row_cols(row);
    return std::binary_search(cols.begin(), cols.end(), col);
}

Amplitude SparseOperator::at(std::size_t row, std::size_t col) const
{
    if (row >= dim_ || col >= dim_)
        throw ArgumentError("index out of range");
    auto cols = row_cols(row);
    auto it = std::lower_bound(cols.begin(), cols.end(), col);
    if (it == cols.end() || *it != col)
        return {};
    return row_values(row)[std::size_t(it - cols.begin())];
}

std::vector<Triplet> SparseOperator::triplets() const
{
    std::vector<Triplet> out;
    out.reserve(nnz());
    for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = row_ptr_[j]; k < row_ptr_[j + 1]; ++k)
            out.push_back({j, cols_[k], values_[k]});
    return out;
}

DenseMatrix SparseOperator::to_dense() const
{
    DenseMatrix m = DenseMatrix::Zero(Eigen::Index(dim_), Eigen::Index(dim_));
    for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = row_ptr_[j]; k < row_ptr_[j + 1]; ++k)
            m(Eigen::Index(j), Eigen::Index(cols_[k])) = values_[k];
    return m;
}

// -------------------------------------------------------- DiagonalOperator

DiagonalOperator::DiagonalOperator(std::vector<double> diagonal)
    : diagonal_(std::move(diagonal))
{
    require_positive_dim(diagonal_.size(), "DiagonalOperator");
    for (std::size_t i = 0; i < diagonal_.size(); ++i)
        if (!std::isfinite(diagonal_[i]))
            throw ArgumentError("DiagonalOperator: non-finite energy at level " +
                                std::to_string(i));
}

// -------------------------------------------------------------- arithmetic

StateVector matvec(const SparseOperator& op, const StateVector& v)
{
    require_same_dim(op.dim(), v.dim(), "matvec");
    StateVector out(op.dim());
    for (std::size_t j = 0; j < op.dim(); ++j) {
        auto cols = op.row_cols(j);
        auto vals = op.row_values(j);
        Amplitude acc{};
        for (std::size_t k = 0; k < cols.size(); ++k)
            acc += vals[k] * v[cols[k]];
        out[j] = acc;
    }
    return out;
}

// Row-by-row Gustavson product with a dense accumulator.
SparseOperator matmul(const SparseOperator& a, const SparseOperator& b)
{
    require_same_dim(a.dim(), b.dim(), "matmul");
    const std::size_t n = a.dim();

    std::vector<Amplitude> acc(n);
    std::vector<char> touched(n, 0);
    std::vector<std::size_t> pattern;
    std::vector<Triplet> out;

    for (std::size_t j = 0; j < n; ++j) {
        pattern.clear();
        auto acols = a.row_cols(j);
        auto avals = a.row_values(j);
        for (std::size_t p = 0; p < acols.size(); ++p) {
            const std::size_t mid = acols[p];
            auto bcols = b.row_cols(mid);
            auto bvals = b.row_values(mid);
            for (std::size_t q = 0; q < bcols.size(); ++q) {
                const std::size_t i = bcols[q];
                if (!touched[i]) {
                    touched[i] = 1;
                    acc[i] = {};
                    pattern.push_back(i);
                }
                acc[i] += avals[p] * bvals[q];
            }
        }
        std::sort(pattern.begin(), pattern.end());
        for (std::size_t i : pattern) {
            touched[i] = 0;
            if (std::abs(acc[i]) > kZeroThreshold)
                out.push_back({j, i, acc[i]});
        }
    }
    return SparseOperator::from_triplets(n, out);
}

SparseOperator power(const SparseOperator& op, std::size_t k)
{
    SparseOperator result = SparseOperator::identity(op.dim());
    for (std::size_t step = 0; step < k; ++step) {
        result = matmul(result, op);
        if (result.is_zero())
            break;
    }
    return result;
}

double operator_norm(const SparseOperator& op, NormKind kind)
{
    const std::size_t n = op.dim();
    switch (kind) {
    case NormKind::Inf: {
        double best = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double row = 0.0;
            for (auto z : op.row_values(j))
                row += std::abs(z);
            best = std::max(best, row);
        }
        return best;
    }
    case NormKind::One: {
        std::vector<double> colsum(n, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            auto cols = op.row_cols(j);
            auto vals = op.row_values(j);
            for (std::size_t k = 0; k < cols.size(); ++k)
                colsum[cols[k]] += std::abs(vals[k]);
        }
        return *std::max_element(colsum.begin(), colsum.end());
    }
    case NormKind::Frobenius: {
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            for (auto z : op.row_values(j))
                sum += std::norm(z);
        return std::sqrt(sum);
    }
    }
    return 0.0;
}

double resonance_threshold(Amplitude energy) noexcept
{
    return 1e-10 * (1.0 + std::abs(energy));
}

std::vector<Amplitude> free_resolvent(const DiagonalOperator& h0, Amplitude energy)
{
    if (!finite(energy))
        throw ArgumentError("energy is not finite");
    const double threshold = resonance_threshold(energy);
    std::vector<Amplitude> g0(h0.dim());
    for (std::size_t j = 0; j < h0.dim(); ++j) {
        const Amplitude gap = energy - h0[j];
        if (std::abs(gap) <= threshold)
            throw ResonanceError(j, "energy is resonant with level " +
                                        std::to_string(j + 1) + " (E - H0 = " +
                                        std::to_string(std::abs(gap)) + ")");
        g0[j] = 1.0 / gap;
    }
    return g0;
}

TransferOperator build_transfer_operator(const DiagonalOperator& h0,
                                         const PotentialOperator& v,
                                         Amplitude energy)
{
    require_same_dim(h0.dim(), v.dim(), "build_transfer_operator");
    const auto g0 = free_resolvent(h0, energy);
    auto entries = v.triplets();
    for (auto& t : entries)
        t.value *= g0[t.row];
    // No re-thresholding: the pattern of V carries over unchanged.
    return SparseOperator::from_triplets(v.dim(), entries, 0.0);
}

} // namespace bornson
