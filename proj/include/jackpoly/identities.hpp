#pragma once

#include <cstddef>
#include <random>

#include "jackpoly/multi_poly.hpp"

namespace jackpoly {

/// (D_i D_j - D_j D_i) f == (D_j - D_i)(K_ij f)
bool dunkl_commutation_holds(const MultiPoly& f, std::size_t i, std::size_t j);

/// (D_i + m)(D_j + m + 1) f == (D_j + m)(D_i + m + 1) f; meaningful when f is
/// symmetric in x_i, x_j.
bool restricted_identity_holds(const MultiPoly& f, std::size_t i, std::size_t j, long m);

/// Unit-coefficient monomial of total degree <= max_degree.
MultiPoly random_monomial(std::mt19937_64& rng, std::size_t n, unsigned max_degree);

/// Up to `max_terms` terms with random exponents (degree <= max_degree) and
/// small coefficients in Z[alpha] of degree <= 1.
MultiPoly random_polynomial(std::mt19937_64& rng, std::size_t n, unsigned max_degree, std::size_t max_terms);

/// random_polynomial(...) + its image under K_ij.
MultiPoly random_pair_symmetric(std::mt19937_64& rng, std::size_t n, std::size_t i, std::size_t j,
                                unsigned max_degree, std::size_t max_terms);

}  // namespace jackpoly
