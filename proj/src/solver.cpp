#include "bornson/solver.hpp"

#include <algorithm>
#include <string>

#include <Eigen/Core>

namespace bornson {

namespace {

void require_dim(std::size_t expected, std::size_t got, const char* what)
{
    if (expected != got)
        throw DimensionError(std::string(what) + ": expected dimension " +
                             std::to_string(expected) + ", got " + std::to_string(got));
}

std::string format_cycle(const std::vector<std::size_t>& cycle)
{
    std::string s;
    for (std::size_t v : cycle)
        s += std::to_string(v + 1) + " -> ";
    if (!cycle.empty())
        s += std::to_string(cycle.front() + 1);
    return s;
}

} // namespace

BornSonSystem make_system(TransferOperator op)
{
    auto graph = extract_graph(op);
    auto report = analyze_acyclicity(graph);
    if (!report.is_acyclic)
        throw NotNilpotentError(report.witness_cycle,
                                "transition graph has a directed cycle (" +
                                    format_cycle(report.witness_cycle) +
                                    "); the Born series does not terminate, use an "
                                    "explicit truncation order instead");
    return BornSonSystem(std::move(op), std::move(graph),
                         std::move(report.topological_order), *report.depth);
}

DenseMatrix finite_neumann_inverse(const BornSonSystem& sys)
{
    const auto n = Eigen::Index(sys.dim());
    DenseMatrix sum = DenseMatrix::Identity(n, n);
    SparseOperator term = sys.op();
    for (std::size_t k = 1; k <= sys.depth(); ++k) {
        for (const auto& t : term.triplets())
            sum(Eigen::Index(t.row), Eigen::Index(t.col)) += t.value;
        if (k < sys.depth())
            term = matmul(term, sys.op());
    }
    return sum;
}

BornExpansion solve_exact(const BornSonSystem& sys, const StateVector& phi)
{
    require_dim(sys.dim(), phi.dim(), "solve_exact");
    BornExpansion out{{}, phi};
    out.terms.reserve(sys.term_count());
    out.terms.push_back(phi);
    for (std::size_t k = 1; k <= sys.depth(); ++k) {
        out.terms.push_back(matvec(sys.op(), out.terms.back()));
        out.total += out.terms.back();
    }
    return out;
}

StateVector born_approximation(const TransferOperator& op, const StateVector& phi,
                               std::size_t order)
{
    require_dim(op.dim(), phi.dim(), "born_approximation");
    StateVector total = phi;
    StateVector term = phi;
    for (std::size_t k = 1; k <= order; ++k) {
        term = matvec(op, term);
        if (term.is_zero())
            break;
        total += term;
    }
    return total;
}

Amplitude det_check(const BornSonSystem& sys)
{
    return determinant_identity_minus(sys.op());
}

DenseMatrix full_resolvent(const BornSonSystem& sys, std::span<const Amplitude> g0)
{
    require_dim(sys.dim(), g0.size(), "full_resolvent");
    DenseMatrix g = finite_neumann_inverse(sys);
    for (std::size_t i = 0; i < g0.size(); ++i)
        g.col(Eigen::Index(i)) *= g0[i];
    return g;
}

DenseMatrix t_matrix(const BornSonSystem& sys, const PotentialOperator& v)
{
    require_dim(sys.dim(), v.dim(), "t_matrix");
    return v.to_dense() * finite_neumann_inverse(sys);
}

DenseMatrix identity_minus(const TransferOperator& op)
{
    const auto n = Eigen::Index(op.dim());
    return DenseMatrix::Identity(n, n) - op.to_dense();
}

namespace {

using RowMajorMatrix = Eigen::Matrix<Amplitude, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Dense LU of I - T with diagonal pivoting. A row swap happens only when the
// diagonal pivot is negligible against the matrix scale. For nilpotent T every
// Schur complement is again I - T' with T' nilpotent, so all pivots stay 1 and
// no growth occurs; partial pivoting would instead pick the large off-diagonal
// amplitudes and lose accuracy as ||T||^depth.
class DiagonalPivotLU {
public:
    explicit DiagonalPivotLU(const TransferOperator& op)
        : lu_(identity_minus(op)), perm_(std::size_t(lu_.rows()))
    {
        const Eigen::Index n = lu_.rows();
        const double scale = lu_.cwiseAbs().maxCoeff();
        for (Eigen::Index k = 0; k < n; ++k)
            perm_[std::size_t(k)] = k;

        for (Eigen::Index k = 0; k < n; ++k) {
            Eigen::Index p = k;
            if (std::abs(lu_(k, k)) <= 1e-12 * scale) {
                lu_.col(k).tail(n - k).cwiseAbs().maxCoeff(&p);
                p += k;
            }
            if (p != k) {
                lu_.row(k).swap(lu_.row(p));
                std::swap(perm_[std::size_t(k)], perm_[std::size_t(p)]);
                sign_ = -sign_;
            }
            const Amplitude pivot = lu_(k, k);
            if (std::abs(pivot) <= 1e-12 * scale)
                throw SingularError("I - T is singular: pivot " + std::to_string(k + 1) +
                                    " has modulus " + std::to_string(std::abs(pivot)));
            const Eigen::Index rest = n - k - 1;
            for (Eigen::Index j = k + 1; j < n; ++j) {
                if (lu_(j, k) == Amplitude{})
                    continue;
                const Amplitude f = lu_(j, k) / pivot;
                lu_(j, k) = f;
                lu_.row(j).tail(rest) -= f * lu_.row(k).tail(rest);
            }
        }
    }

    Eigen::VectorXcd solve(const StateVector& phi) const
    {
        const Eigen::Index n = lu_.rows();
        Eigen::VectorXcd x(n);
        for (Eigen::Index k = 0; k < n; ++k) {
            Amplitude s = phi[std::size_t(perm_[std::size_t(k)])];
            for (Eigen::Index j = 0; j < k; ++j)
                if (lu_(k, j) != Amplitude{})
                    s -= lu_(k, j) * x(j);
            x(k) = s;
        }
        for (Eigen::Index k = n - 1; k >= 0; --k) {
            Amplitude s = x(k);
            for (Eigen::Index j = k + 1; j < n; ++j)
                if (lu_(k, j) != Amplitude{})
                    s -= lu_(k, j) * x(j);
            x(k) = s / lu_(k, k);
        }
        return x;
    }

    Amplitude determinant() const
    {
        Amplitude d = sign_;
        for (Eigen::Index k = 0; k < lu_.rows(); ++k)
            d *= lu_(k, k);
        return d;
    }

private:
    RowMajorMatrix lu_;
    std::vector<Eigen::Index> perm_;
    double sign_ = 1.0;
};

} // namespace

StateVector direct_solve_oracle(const TransferOperator& op, const StateVector& phi)
{
    require_dim(op.dim(), phi.dim(), "direct_solve_oracle");
    const Eigen::VectorXcd x = DiagonalPivotLU(op).solve(phi);
    std::vector<Amplitude> out(x.data(), x.data() + x.size());
    return StateVector(std::move(out));
}

Amplitude determinant_identity_minus(const TransferOperator& op)
{
    return DiagonalPivotLU(op).determinant();
}

} // namespace bornson
