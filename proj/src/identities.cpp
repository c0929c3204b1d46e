#include "jackpoly/identities.hpp"

#include "jackpoly/operators.hpp"

namespace jackpoly {

bool dunkl_commutation_holds(const MultiPoly& f, std::size_t i, std::size_t j) {
  const MultiPoly lhs = apply_dunkl(apply_dunkl(f, j), i) - apply_dunkl(apply_dunkl(f, i), j);
  const MultiPoly swapped = apply_swap(f, i, j);
  const MultiPoly rhs = apply_dunkl(swapped, j) - apply_dunkl(swapped, i);
  return lhs == rhs;
}

bool restricted_identity_holds(const MultiPoly& f, std::size_t i, std::size_t j, long m) {
  auto shifted = [](const MultiPoly& g, std::size_t k, long s) {
    return apply_dunkl(g, k) + scale(g, AlphaRational(s));
  };
  return shifted(shifted(f, j, m + 1), i, m) == shifted(shifted(f, i, m + 1), j, m);
}

MultiPoly random_monomial(std::mt19937_64& rng, std::size_t n, unsigned max_degree) {
  std::uniform_int_distribution<unsigned> total(0, max_degree);
  std::uniform_int_distribution<std::size_t> slot(0, n - 1);
  Monomial m(n, 0);
  for (unsigned d = total(rng); d > 0; --d) ++m[slot(rng)];
  return MultiPoly::monomial(std::move(m));
}

MultiPoly random_polynomial(std::mt19937_64& rng, std::size_t n, unsigned max_degree, std::size_t max_terms) {
  std::uniform_int_distribution<std::size_t> count(1, max_terms);
  std::uniform_int_distribution<long> small(-3, 3);
  MultiPoly f(n);
  for (std::size_t t = count(rng); t > 0; --t) {
    const MultiPoly mono = random_monomial(rng, n, max_degree);
    const AlphaPoly c{small(rng), small(rng)};
    f += scale(mono, AlphaRational(c));
  }
  return f;
}

MultiPoly random_pair_symmetric(std::mt19937_64& rng, std::size_t n, std::size_t i, std::size_t j,
                                unsigned max_degree, std::size_t max_terms) {
  const MultiPoly f = random_polynomial(rng, n, max_degree, max_terms);
  return f + apply_swap(f, i, j);
}

}  // namespace jackpoly
