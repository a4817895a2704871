#pragma once

#include <cstddef>
#include <random>

#include "bornson/algebra.hpp"

namespace bornson {

using Rng = std::mt19937_64;

// Uniform over the annulus min_modulus <= |z| <= max_modulus (by area).
Amplitude random_amplitude(Rng& rng, double min_modulus = 0.0, double max_modulus = 1.0);

StateVector random_state(std::size_t dim, Rng& rng);

struct RandomDagOptions {
    std::size_t dim = 8;
    double density = 0.3;       // probability of each forward edge
    double min_modulus = 0.0;
    double max_modulus = 1.0;
};

// Random permutation as topological order; every forward pair becomes an
// edge independently with probability `density`. Acyclic by construction.
TransferOperator random_dag_operator(const RandomDagOptions& options, Rng& rng);

// Dense-pattern operator (cycles almost surely) rescaled to the requested
// inf-norm.
TransferOperator random_cyclic_operator(std::size_t dim, double density,
                                        double inf_norm, Rng& rng);

} // namespace bornson
