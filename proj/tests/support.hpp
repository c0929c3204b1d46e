#pragma once

#include <random>
#include <string>

#include "jackpoly/alpha_rational.hpp"
#include "jackpoly/multi_poly.hpp"
#include "jackpoly/text_format.hpp"

namespace jackpoly::test {

inline MultiPoly poly(const std::string& text, std::size_t n) { return parse_multi_poly(text, n); }

/// Alpha-polynomial from ascending integer coefficients.
inline AlphaRational ap(std::initializer_list<long> coeffs) { return AlphaRational(AlphaPoly(coeffs)); }

inline AlphaRational ratio(std::initializer_list<long> num, std::initializer_list<long> den) {
  return AlphaRational(AlphaPoly(num), AlphaPoly(den));
}

inline AlphaPoly random_alpha_poly(std::mt19937_64& rng, int max_degree, long bound) {
  std::uniform_int_distribution<int> deg(-1, max_degree);
  std::uniform_int_distribution<long> coeff(-bound, bound);
  std::vector<mpz_class> c;
  for (int k = deg(rng); k >= 0; --k) c.emplace_back(coeff(rng));
  return AlphaPoly(std::move(c));
}

/// Random polynomial with rational-function coefficients in n variables.
inline MultiPoly random_rational_poly(std::mt19937_64& rng, std::size_t n, unsigned max_degree, std::size_t terms) {
  std::uniform_int_distribution<unsigned> e(0, max_degree);
  MultiPoly f(n);
  for (std::size_t t = 0; t < terms; ++t) {
    Monomial m(n);
    for (auto& x : m) x = e(rng) / static_cast<unsigned>(n);
    AlphaPoly den = random_alpha_poly(rng, 1, 3);
    if (den.is_zero()) den = AlphaPoly{1};
    f.add_term(m, AlphaRational(random_alpha_poly(rng, 2, 5), den));
  }
  return f;
}

}  // namespace jackpoly::test
