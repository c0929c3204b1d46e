#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "jackpoly/errors.hpp"
#include "jackpoly/identities.hpp"
#include "jackpoly/operators.hpp"
#include "jackpoly/symmetric.hpp"
#include "support.hpp"

using namespace jackpoly;
using jackpoly::test::ap;
using jackpoly::test::poly;

namespace {

// D_i through the rational-function route: alpha x_i d_i f plus
// x_i (f - K_ij f)/(x_i - x_j) with the quotient taken by synthetic division.
MultiPoly dunkl_by_division(const MultiPoly& f, std::size_t i) {
  const std::size_t n = f.num_vars();
  MultiPoly r(n);
  for (const auto& [m, c] : f.terms()) {
    if (m[i - 1] > 0) r.add_term(m, c * ap({0, static_cast<long>(m[i - 1])}));
  }
  const MultiPoly xi = MultiPoly::variable(n, i);
  for (std::size_t j = 1; j <= n; ++j) {
    if (j == i) continue;
    r += xi * exact_divide_diff(f - apply_swap(f, i, j), i, j);
  }
  return r;
}

MultiPoly creation_naive(const MultiPoly& f, std::size_t i) {
  MultiPoly r(f.num_vars());
  for (const auto& J : subsets_of_size(f.num_vars(), i)) {
    r += MultiPoly::monomial(J.x_monomial()) * apply_dunkl_product(f, J);
  }
  return r;
}

MultiPoly random_symmetric(std::mt19937_64& rng, std::size_t n, unsigned degree) {
  std::uniform_int_distribution<long> coeff(-3, 3);
  MExpansion e(degree);
  for (const auto& mu : partitions_of(degree, n)) e.add(mu, ap({coeff(rng), coeff(rng)}));
  return from_m_expansion(e, n);
}

}  // namespace

TEST_CASE("subsets") {
  const auto s = subsets_of_size(4, 2);
  REQUIRE(s.size() == 6);
  CHECK(s.front().indices() == std::vector<std::size_t>{1, 2});
  CHECK(s[1].indices() == std::vector<std::size_t>{1, 3});
  CHECK(s.back().indices() == std::vector<std::size_t>{3, 4});
  CHECK(subsets_of_size(3, 3).size() == 1);
  CHECK(subsets_of_size(3, 0).size() == 1);
  CHECK(subsets_of_size(2, 3).empty());
  CHECK(SubsetJ({1, 3}, 3).x_monomial() == Monomial{1, 0, 1});
  CHECK_THROWS_AS(SubsetJ({2, 1}, 3), IndexOutOfRange);
  CHECK_THROWS_AS(SubsetJ({1, 4}, 3), IndexOutOfRange);
  CHECK_THROWS_AS(SubsetJ({0}, 3), IndexOutOfRange);
}

TEST_CASE("apply_swap") {
  CHECK(apply_swap(poly("x1^2*x2", 2), 1, 2) == poly("x1*x2^2", 2));
  CHECK(apply_swap(poly("x1 + x2", 2), 1, 2) == poly("x1 + x2", 2));
  const MultiPoly f = poly("(3 + a)*x1^3*x3 - x2", 3);
  CHECK(apply_swap(apply_swap(f, 1, 3), 1, 3) == f);
  CHECK_THROWS_AS(apply_swap(f, 1, 4), IndexOutOfRange);
  CHECK_THROWS_AS(apply_swap(f, 2, 2), IndexOutOfRange);
}

TEST_CASE("apply_dunkl examples") {
  CHECK(apply_dunkl(MultiPoly::constant(2, AlphaRational(1)), 1).is_zero());
  CHECK(apply_dunkl(poly("x1", 2), 1) == poly("(1 + a)*x1", 2));
  CHECK(apply_dunkl(poly("x2", 2), 1) == poly("-x1", 2));
  CHECK_THROWS_AS(apply_dunkl(poly("x1", 2), 3), IndexOutOfRange);
  CHECK_THROWS_AS(apply_dunkl(poly("x1", 2), 0), IndexOutOfRange);
}

TEST_CASE("telescoped exchange term agrees with synthetic division") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const MultiPoly f = test::random_rational_poly(rng, n, 7, 5);
    for (std::size_t i = 1; i <= n; ++i) CHECK(apply_dunkl(f, i) == dunkl_by_division(f, i));
  }
}

TEST_CASE("apply_dunkl_product examples") {
  CHECK(apply_dunkl_product(MultiPoly::constant(2, AlphaRational(1)), SubsetJ({1}, 2)) ==
        MultiPoly::constant(2, AlphaRational(1)));
  CHECK(apply_dunkl_product(MultiPoly::constant(2, AlphaRational(1)), SubsetJ({1, 2}, 2)) ==
        MultiPoly::constant(2, AlphaRational(2)));
  CHECK(apply_dunkl_product(MultiPoly::constant(3, AlphaRational(1)), SubsetJ({1, 2, 3}, 3)) ==
        MultiPoly::constant(3, AlphaRational(6)));
  CHECK_THROWS_AS(apply_dunkl_product(poly("x1", 2), SubsetJ({1}, 3)), VariableCountMismatch);
}

TEST_CASE("D_J applies its rightmost factor first") {
  // D_2 x_1 = -x_2 mirrors D_1 x_2 = -x_1, so (D_2 + 2) x_1 = 2 x_1 - x_2.
  const MultiPoly f = poly("x1", 2);
  const MultiPoly inner = apply_dunkl(f, 2) + scale(f, AlphaRational(2));
  CHECK(inner == poly("(2)*x1 - x2", 2));
  const MultiPoly expected = apply_dunkl(inner, 1) + inner;
  CHECK(apply_dunkl_product(f, SubsetJ({1, 2}, 2)) == expected);
  const MultiPoly other_order = [&] {
    const MultiPoly first = apply_dunkl(f, 1) + f;
    return apply_dunkl(first, 2) + scale(first, AlphaRational(2));
  }();
  CHECK(other_order != expected);
}

TEST_CASE("apply_creation examples") {
  const MultiPoly one = MultiPoly::constant(2, AlphaRational(1));
  CHECK(apply_creation(one, 1) == poly("x1 + x2", 2));
  CHECK(apply_creation(one, 2) == poly("(2)*x1*x2", 2));
  CHECK(apply_creation(poly("x1 + x2", 2), 1) == poly("(1 + a)*x1^2 + (2)*x1*x2 + (1 + a)*x2^2", 2));
  CHECK_THROWS_AS(apply_creation(one, 3), IndexOutOfRange);
  CHECK_THROWS_AS(apply_creation(one, 0), IndexOutOfRange);
}

TEST_CASE("shared-tail creation sum equals the plain subset sum, for any worker count") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const MultiPoly f = test::random_rational_poly(rng, n, 5, 4);
    for (std::size_t i = 1; i <= n; ++i) {
      const MultiPoly expected = creation_naive(f, i);
      CHECK(apply_creation(f, i) == expected);
      CHECK(apply_creation(f, i, 3) == expected);
    }
  }
}

TEST_CASE("apply_hamiltonian examples") {
  CHECK(apply_hamiltonian(MultiPoly::constant(2, AlphaRational(1))).is_zero());
  CHECK(apply_hamiltonian(poly("x1 + x2", 2)) == poly("(1 + a)*x1 + (1 + a)*x2", 2));
  CHECK(apply_hamiltonian(poly("x1*x2", 2)) == poly("(2*a)*x1*x2", 2));
  CHECK_THROWS_AS(apply_hamiltonian(poly("x1", 2)), NotSymmetric);
  CHECK_THROWS_AS(apply_hamiltonian(poly("x1^2*x2 + x3", 3)), NotSymmetric);
}

TEST_CASE("H on m_(2) in two variables is not diagonal") {
  // alpha (x d)^2 gives 4 alpha m_2; the pair term gives
  // (x1 + x2)(2x1^2 - 2x2^2)/(x1 - x2) = 2 (x1 + x2)^2 = 2 m_2 + 4 m_11.
  CHECK(apply_hamiltonian(m_poly(Partition{2}, 2)) == poly("(2 + 4*a)*x1^2 + (4)*x1*x2 + (2 + 4*a)*x2^2", 2));
}

TEST_CASE("Dunkl commutation relation on random monomials") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const MultiPoly f = random_monomial(rng, n, 5);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) CHECK(dunkl_commutation_holds(f, i, j));
    }
  }
}

TEST_CASE("restricted identity on pair-symmetric polynomials") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const std::size_t i = 1 + trial % n;
    const std::size_t j = 1 + (trial + 1) % n;
    const MultiPoly f = random_pair_symmetric(rng, n, i, j, 5, 4);
    for (long m = 0; m <= 3; ++m) CHECK(restricted_identity_holds(f, i, j, m));
  }
  // Without the symmetry the identity generally fails.
  CHECK_FALSE(restricted_identity_holds(poly("x1", 2), 1, 2, 0));
}

TEST_CASE("creation preserves symmetry and raises degree by i") {
  std::mt19937_64 rng(43);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (unsigned d = 0; d <= 3; ++d) {
      const MultiPoly f = random_symmetric(rng, n, d);
      for (std::size_t i = 1; i <= n; ++i) {
        const MultiPoly g = apply_creation(f, i);
        CHECK(is_symmetric(g));
        if (!g.is_zero()) CHECK(g.homogeneous_degree() == d + i);
      }
    }
  }
}

TEST_CASE("integer-coefficient inputs stay in Z[alpha]") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const MultiPoly f = random_polynomial(rng, n, 5, 5);
    REQUIRE(f.has_integer_coefficients());
    for (std::size_t i = 1; i <= n; ++i) {
      CHECK(apply_dunkl(f, i).has_integer_coefficients());
      CHECK(apply_creation(f, i).has_integer_coefficients());
    }
    for (const auto& J : subsets_of_size(n, n)) CHECK(apply_dunkl_product(f, J).has_integer_coefficients());
  }
}

TEST_CASE("operators are linear over Q(alpha)") {
  std::mt19937_64 rng(53);
  const AlphaRational c = test::ratio({1, 2}, {3, 1});
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const MultiPoly f = test::random_rational_poly(rng, n, 4, 3);
    const MultiPoly g = test::random_rational_poly(rng, n, 4, 3);
    const MultiPoly combo = f + scale(g, c);
    CHECK(apply_swap(combo, 1, 2) == apply_swap(f, 1, 2) + scale(apply_swap(g, 1, 2), c));
    CHECK(apply_dunkl(combo, 2) == apply_dunkl(f, 2) + scale(apply_dunkl(g, 2), c));
    const SubsetJ J({1, n}, n);
    CHECK(apply_dunkl_product(combo, J) == apply_dunkl_product(f, J) + scale(apply_dunkl_product(g, J), c));
    CHECK(apply_creation(combo, 2) == apply_creation(f, 2) + scale(apply_creation(g, 2), c));
    const MultiPoly s = random_symmetric(rng, n, 3);
    const MultiPoly t = random_symmetric(rng, n, 2);
    CHECK(apply_hamiltonian(s + scale(t, c)) == apply_hamiltonian(s) + scale(apply_hamiltonian(t), c));
  }
}
