#pragma once

// Truncation error control for operators whose transition graph has cycles.
//
// The order-m remainder R_m = psi - sum_{k<=m} T^k phi equals
// (I - T)^{-1} T^{m+1} phi whenever I - T is invertible, and for ||T|| < 1
//
//     ||R_m|| <= ||T^{m+1}|| ||phi|| / (1 - ||T||).

#include <cstddef>
#include <optional>

#include "bornson/algebra.hpp"

namespace bornson {

// Convention for the quasi_nilpotent flag; not a property of the operator.
inline constexpr double kQuasiNilpotentThreshold = 1e-3;

// ||T^{m+1}||
double nilpotency_defect(const TransferOperator& op, std::size_t m,
                         NormKind kind = NormKind::Inf);

// Solves (I - T) x = T^{m+1} phi. Throws SingularError.
StateVector exact_remainder(const TransferOperator& op, const StateVector& phi,
                            std::size_t m);

struct TruncationReport {
    std::size_t order = 0;
    NormKind norm_kind = NormKind::Inf;
    double defect_norm = 0.0;
    double operator_norm = 0.0;
    double phi_norm = 0.0;
    std::optional<double> exact_remainder_norm;   // absent when I - T is singular
    std::optional<double> bound;                  // absent when ||T|| >= 1
    bool quasi_nilpotent = false;                 // defect_norm <= kQuasiNilpotentThreshold
    const char* bound_note = "";                  // why the bound is absent, if it is
};

// Vector norms are the ones matched to `kind` (see StateVector::norm).
TruncationReport remainder_bound(const TransferOperator& op, const StateVector& phi,
                                 std::size_t m, NormKind kind = NormKind::Inf);

} // namespace bornson
