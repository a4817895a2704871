#include "bornson/quasi_nilpotent.hpp"

#include "bornson/solver.hpp"

namespace bornson {

double nilpotency_defect(const TransferOperator& op, std::size_t m, NormKind kind)
{
    return operator_norm(power(op, m + 1), kind);
}

StateVector exact_remainder(const TransferOperator& op, const StateVector& phi,
                            std::size_t m)
{
    if (op.dim() != phi.dim())
        throw DimensionError("exact_remainder: dimension mismatch");
    StateVector source = phi;
    for (std::size_t k = 0; k <= m && !source.is_zero(); ++k)
        source = matvec(op, source);
    if (source.is_zero())
        return source;
    return direct_solve_oracle(op, source);
}

TruncationReport remainder_bound(const TransferOperator& op, const StateVector& phi,
                                 std::size_t m, NormKind kind)
{
    TruncationReport r;
    r.order = m;
    r.norm_kind = kind;
    r.defect_norm = nilpotency_defect(op, m, kind);
    r.operator_norm = operator_norm(op, kind);
    r.phi_norm = phi.norm(kind);
    r.quasi_nilpotent = r.defect_norm <= kQuasiNilpotentThreshold;

    try {
        r.exact_remainder_norm = exact_remainder(op, phi, m).norm(kind);
    } catch (const SingularError&) {
        r.exact_remainder_norm.reset();
    }

    if (r.operator_norm < 1.0) {
        r.bound = r.defect_norm * r.phi_norm / (1.0 - r.operator_norm);
    } else {
        r.bound_note = "||T|| >= 1: Neumann-series bound not applicable";
    }
    return r;
}

} // namespace bornson
