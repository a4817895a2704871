#pragma once

// Finite Born expansion for transfer operators with an acyclic transition
// graph. If the longest directed path has m edges then T^{m+1} = 0 and
//
//     (I - T)^{-1} = I + T + ... + T^m
//
// holds exactly, whatever the size of ||T||.

#include <cstddef>
#include <vector>

#include "bornson/algebra.hpp"
#include "bornson/graph.hpp"

namespace bornson {

// A transfer operator certified nilpotent through its graph. Immutable.
class BornSonSystem {
public:
    const TransferOperator& op() const noexcept { return op_; }
    const TransitionGraph& graph() const noexcept { return graph_; }
    const std::vector<std::size_t>& topological_order() const noexcept { return order_; }

    // Longest directed path length; T^{depth+1} = 0 and T^depth != 0.
    std::size_t depth() const noexcept { return depth_; }
    std::size_t dim() const noexcept { return op_.dim(); }

    // Number of terms in the exact expansion.
    std::size_t term_count() const noexcept { return depth_ + 1; }

private:
    friend BornSonSystem make_system(TransferOperator op);

    BornSonSystem(TransferOperator op, TransitionGraph graph,
                  std::vector<std::size_t> order, std::size_t depth)
        : op_(std::move(op)), graph_(std::move(graph)), order_(std::move(order)), depth_(depth)
    {}

    TransferOperator op_;
    TransitionGraph graph_;
    std::vector<std::size_t> order_;
    std::size_t depth_;
};

// Throws NotNilpotentError (with the witness cycle) if the graph is cyclic.
BornSonSystem make_system(TransferOperator op);

struct BornExpansion {
    std::vector<StateVector> terms;   // T^k |phi>, k = 0..m
    StateVector total;
};

// I + T + ... + T^m, powers accumulated sequentially.
DenseMatrix finite_neumann_inverse(const BornSonSystem& sys);

BornExpansion solve_exact(const BornSonSystem& sys, const StateVector& phi);

// Partial sum through T^order |phi>. Any operator, nilpotent or not.
StateVector born_approximation(const TransferOperator& op, const StateVector& phi,
                               std::size_t order);

// det(I - T) from a dense LU factorization; 1 for every valid system.
Amplitude det_check(const BornSonSystem& sys);

// G(E) = (sum_k T^k) G0(E). The caller supplies the diagonal of G0 built
// from the same (H0, E) that produced the system's operator.
DenseMatrix full_resolvent(const BornSonSystem& sys, std::span<const Amplitude> g0);

// T-matrix V (sum_k T^k).
DenseMatrix t_matrix(const BornSonSystem& sys, const PotentialOperator& v);

// ---- dense reference path, independent of the series code ----

DenseMatrix identity_minus(const TransferOperator& op);

// Dense LU solve of (I - T) psi = phi. Throws SingularError when a
// pivot falls below 1e-12 times the largest entry of I - T.
StateVector direct_solve_oracle(const TransferOperator& op, const StateVector& phi);

// det(I - T) by dense LU for any operator.
Amplitude determinant_identity_minus(const TransferOperator& op);

} // namespace bornson
