#pragma once

#include <random>

#include "grgrad/module.hpp"

namespace grgrad {

using Rng = std::mt19937_64;

Elem random_scalar(Rng& rng, std::uint32_t p, bool nonzero = false);
/// Nonzero vector of the given degree, or nullopt if M_gamma = 0.
std::optional<Vector> random_homogeneous(const GradedModule& m, Morphism gamma, Rng& rng);
std::optional<Vector> random_homogeneous(const GradedModule& m, Rng& rng);

/// Random change of homogeneous basis, one invertible matrix per degree.
GradedModule scramble(const GradedModule& m, Rng& rng);

/// A validated random module of dimension 1..max_dim: a subquotient of a
/// direct sum of shifted row modules R(e)(sigma), then scrambled.
GradedModule random_module(const RingPtr& r, Rng& rng, std::size_t max_dim);

/// R / (ideal generated by a few random homogeneous elements), retried
/// until the quotient is a proper nonzero ring.
GradedRing random_graded_quotient(const GradedRing& r, Rng& rng);

/// Random element of HOM(M,M)_gamma (zero if the space is zero).
Matrix random_endomorphism(const GradedModule& m, Morphism gamma, Rng& rng);

}  // namespace grgrad
