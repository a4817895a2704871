#include "bornson/random_systems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

namespace bornson {

Amplitude random_amplitude(Rng& rng, double min_modulus, double max_modulus)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double lo = min_modulus * min_modulus;
    const double hi = max_modulus * max_modulus;
    const double r = std::sqrt(lo + (hi - lo) * unit(rng));
    const double phase = 2.0 * std::numbers::pi * unit(rng);
    return std::polar(r, phase);
}

StateVector random_state(std::size_t dim, Rng& rng)
{
    std::vector<Amplitude> v(dim);
    for (auto& z : v)
        z = random_amplitude(rng);
    return StateVector(std::move(v));
}

TransferOperator random_dag_operator(const RandomDagOptions& options, Rng& rng)
{
    const std::size_t n = options.dim;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);

    std::bernoulli_distribution keep(options.density);
    std::vector<Triplet> entries;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (keep(rng))
                entries.push_back({order[b], order[a],
                                   random_amplitude(rng, options.min_modulus,
                                                    options.max_modulus)});
    return SparseOperator::from_triplets(n, entries);
}

TransferOperator random_cyclic_operator(std::size_t dim, double density, double inf_norm,
                                        Rng& rng)
{
    std::bernoulli_distribution keep(density);
    std::vector<Triplet> entries;
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t i = 0; i < dim; ++i)
            if (keep(rng))
                entries.push_back({j, i, random_amplitude(rng, 0.1, 1.0)});
    // Guarantee at least one cycle: a self-loop on vertex 0 if nothing else.
    if (std::none_of(entries.begin(), entries.end(),
                     [](const Triplet& t) { return t.row == 0 && t.col == 0; }))
        entries.push_back({0, 0, random_amplitude(rng, 0.1, 1.0)});

    auto op = SparseOperator::from_triplets(dim, entries);
    const double scale = inf_norm / operator_norm(op, NormKind::Inf);
    for (auto& t : entries)
        t.value *= scale;
    return SparseOperator::from_triplets(dim, entries);
}

} // namespace bornson
