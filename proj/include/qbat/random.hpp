#pragma once

#include <random>

#include "qbat/operators.hpp"

namespace qbat {

using Rng = std::mt19937_64;

/// Haar-random pure state as a rank-1 projector.
DensityOperator random_pure_state(std::size_t dim_a, std::size_t dim_b, Rng& rng);

/// Hilbert-Schmidt ensemble: G G^dag / tr(G G^dag) with G complex Gaussian.
DensityOperator random_density(std::size_t dim_a, std::size_t dim_b, Rng& rng);

/// Haar-random unitary: Gram-Schmidt orthonormalization of a complex
/// Gaussian matrix (the R factor naturally has a positive diagonal).
UnitaryOperator random_unitary(std::size_t dim, Rng& rng);

}  // namespace qbat
