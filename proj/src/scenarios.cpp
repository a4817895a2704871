#include "bornson/scenarios.hpp"

#include <string>

namespace bornson {

BornSonSystem build_cascade(std::span<const Amplitude> amplitudes)
{
    if (amplitudes.empty())
        throw ArgumentError("cascade needs at least one amplitude (two levels)");
    const std::size_t n = amplitudes.size() + 1;
    std::vector<Triplet> entries;
    for (std::size_t k = 0; k < amplitudes.size(); ++k)
        entries.push_back({k, k + 1, amplitudes[k]});
    return make_system(SparseOperator::from_triplets(n, entries));
}

BornSonSystem build_diamond(const DiamondAmplitudes& t)
{
    const std::vector<Triplet> entries{
        {1, 0, t.t21}, {2, 0, t.t31}, {3, 1, t.t42}, {3, 2, t.t43}};
    return make_system(SparseOperator::from_triplets(4, entries));
}

BornSonSystem build_double_diamond(const DoubleDiamondAmplitudes& t)
{
    const std::vector<Triplet> entries{
        {1, 0, t.t21}, {2, 0, t.t31}, {3, 1, t.t42}, {3, 2, t.t43},
        {4, 3, t.t54}, {5, 3, t.t64}, {6, 4, t.t75}, {6, 5, t.t76}};
    return make_system(SparseOperator::from_triplets(7, entries));
}

const char* to_string(InterferenceRegime regime) noexcept
{
    switch (regime) {
    case InterferenceRegime::Constructive: return "constructive";
    case InterferenceRegime::DarkState: return "dark_state";
    case InterferenceRegime::Generic: return "generic";
    }
    return "?";
}

DiamondAmplitudes diamond_amplitudes(const BornSonSystem& sys)
{
    const auto& op = sys.op();
    const bool diamond = sys.dim() == 4 && op.nnz() == 4 && op.contains(1, 0) &&
                         op.contains(2, 0) && op.contains(3, 1) && op.contains(3, 2);
    if (!diamond) {
        std::string edges;
        for (const auto& e : sys.graph().edges())
            edges += (edges.empty() ? "" : ", ") + std::to_string(e.from + 1) + "->" +
                     std::to_string(e.to + 1);
        throw TopologyError("expected the diamond 1->2, 1->3, 2->4, 3->4 on 4 levels; got " +
                            std::to_string(sys.dim()) + " levels with edges {" + edges + "}");
    }
    return {op.at(1, 0), op.at(2, 0), op.at(3, 1), op.at(3, 2)};
}

InterferenceReport classify_interference(const BornSonSystem& sys)
{
    const auto t = diamond_amplitudes(sys);

    InterferenceReport r;
    r.a4 = solve_exact(sys, StateVector::basis(4, 0)).total[3];
    r.a4_born1 = born_approximation(sys.op(), StateVector::basis(4, 0), 1)[3];
    r.paths = {PathContribution{{0, 1, 3}, t.t42 * t.t21},
               PathContribution{{0, 2, 3}, t.t43 * t.t31}};

    const Amplitude upper = r.paths[0].amplitude;
    const Amplitude lower = r.paths[1].amplitude;
    const double incoherent = std::abs(upper) + std::abs(lower);

    if (std::abs(r.a4) <= kDarkThreshold * incoherent)
        r.regime = InterferenceRegime::DarkState;
    else if (std::abs(upper - lower) <= kDarkThreshold * incoherent)
        r.regime = InterferenceRegime::Constructive;
    else
        r.regime = InterferenceRegime::Generic;

    if (r.a4 != Amplitude{})
        r.relative_error_born1 = std::abs(r.a4 - r.a4_born1) / std::abs(r.a4);
    return r;
}

} // namespace bornson
