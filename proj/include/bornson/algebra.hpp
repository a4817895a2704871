#pragma once

// Sparse complex operators and state vectors over a fixed, ordered basis.
//
// Storage convention: entry (row j, col i) holds <j|T|i>, the amplitude of
// the transition i -> j. All indices are 0-based in the C++ API; the file
// formats and CLI reports use 1-based basis labels.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "bornson/errors.hpp"

namespace bornson {

using Amplitude = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;

// Entries with modulus at or below this are treated as zero after arithmetic.
inline constexpr double kZeroThreshold = 1e-14;

enum class NormKind { Inf, One, Frobenius };

const char* to_string(NormKind kind) noexcept;

class StateVector {
public:
    explicit StateVector(std::size_t dim);
    explicit StateVector(std::vector<Amplitude> entries);

    // |index>
    static StateVector basis(std::size_t dim, std::size_t index);

    std::size_t dim() const noexcept { return data_.size(); }

    Amplitude operator[](std::size_t i) const { return data_[i]; }
    Amplitude& operator[](std::size_t i) { return data_[i]; }

    std::span<const Amplitude> entries() const noexcept { return data_; }

    bool is_zero() const noexcept;

    StateVector& operator+=(const StateVector& other);
    StateVector& operator-=(const StateVector& other);

    // Vector norm matched to the operator norm kind: inf, 1, and 2-norm
    // (the Frobenius norm is consistent with the Euclidean vector norm).
    double norm(NormKind kind = NormKind::Inf) const noexcept;

    friend bool operator==(const StateVector&, const StateVector&) = default;

private:
    std::vector<Amplitude> data_;
};

StateVector operator+(StateVector a, const StateVector& b);
StateVector operator-(StateVector a, const StateVector& b);

struct Triplet {
    std::size_t row;
    std::size_t col;
    Amplitude value;
};

// Immutable compressed-row sparse matrix.
class SparseOperator {
public:
    // Zero operator of the given dimension.
    explicit SparseOperator(std::size_t dim);

    // Entries with |value| <= drop_below are not stored. Duplicate (row, col)
    // pairs and out-of-range indices are rejected with ArgumentError.
    static SparseOperator from_triplets(std::size_t dim,
                                        std::span<const Triplet> triplets,
                                        double drop_below = kZeroThreshold);
    static SparseOperator from_dense(const DenseMatrix& m,
                                     double drop_below = kZeroThreshold);
    static SparseOperator identity(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t nnz() const noexcept { return values_.size(); }
    bool is_zero() const noexcept { return values_.empty(); }

    // Stored entry or 0.
    Amplitude at(std::size_t row, std::size_t col) const;
    bool contains(std::size_t row, std::size_t col) const;

    // Stored entries in row-major order.
    std::vector<Triplet> triplets() const;

    // Row slices. row_cols(j)[k] pairs with row_values(j)[k].
    std::span<const std::size_t> row_cols(std::size_t row) const;
    std::span<const Amplitude> row_values(std::size_t row) const;

    DenseMatrix to_dense() const;

    friend bool operator==(const SparseOperator&, const SparseOperator&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<std::size_t> row_ptr_;
    std::vector<std::size_t> cols_;
    std::vector<Amplitude> values_;
};

// The interaction potential V shares the sparse representation; the alias
// only documents intent at call sites.
using TransferOperator = SparseOperator;
using PotentialOperator = SparseOperator;

// H0, diagonal in the working basis. Energies are real.
class DiagonalOperator {
public:
    explicit DiagonalOperator(std::vector<double> diagonal);

    std::size_t dim() const noexcept { return diagonal_.size(); }
    double operator[](std::size_t i) const { return diagonal_[i]; }
    std::span<const double> diagonal() const noexcept { return diagonal_; }

private:
    std::vector<double> diagonal_;
};

StateVector matvec(const SparseOperator& op, const StateVector& v);
SparseOperator matmul(const SparseOperator& a, const SparseOperator& b);

// T^k by sequential multiplication, T^0 = I.
SparseOperator power(const SparseOperator& op, std::size_t k);

double operator_norm(const SparseOperator& op, NormKind kind = NormKind::Inf);

// Threshold below which |E - H0_j| counts as resonant.
double resonance_threshold(Amplitude energy) noexcept;

// G0(E) = (E - H0)^{-1} as its diagonal. Throws ResonanceError.
std::vector<Amplitude> free_resolvent(const DiagonalOperator& h0, Amplitude energy);

// T = G0(E) V. Keeps the sparsity pattern of V exactly.
TransferOperator build_transfer_operator(const DiagonalOperator& h0,
                                         const PotentialOperator& v,
                                         Amplitude energy);

} // namespace bornson
