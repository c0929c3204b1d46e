#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "jackpoly/alpha_poly.hpp"
#include "jackpoly/alpha_rational.hpp"
#include "jackpoly/multi_poly.hpp"
#include "jackpoly/partition.hpp"
#include "jackpoly/symmetric.hpp"

namespace jackpoly {

/// J_lambda(x_1..x_n; alpha) both as a polynomial and in the m-basis.
struct JackResult {
  Partition lambda;
  std::size_t n = 0;
  MultiPoly poly;
  MExpansion expansion;
};

struct RodriguesOptions {
  /// Worker count inside each creation-operator subset sum.
  unsigned jobs = 1;
  /// Called with the seed and with the state after every creation operator.
  std::function<void(const MultiPoly&)> on_stage;
};

/// Throws PartitionTooLong("partition has L parts but n = N") if l(lambda) > n.
void require_fits(const Partition& lambda, std::size_t n);

/// (B_top^+)^{lambda_top} ... (B_1^+)^{lambda_1 - lambda_2} . 1 in n variables,
/// with the exponent of B_k^+ equal to lambda_k - lambda_{k+1}. Requires
/// l(lambda) <= top <= n.
MultiPoly staged_product(const Partition& lambda, std::size_t top, std::size_t n, const RodriguesOptions& options = {});

/// Jack polynomial through the creation-operator product applied to 1.
JackResult rodrigues_jack(const Partition& lambda, std::size_t n, const RodriguesOptions& options = {});

/// Sutherland spectrum sum_j [alpha lambda_j^2 + (n + 1 - 2j) lambda_j].
AlphaPoly epsilon(const Partition& lambda, std::size_t n);

/// H(alpha) J = epsilon J, compared as exact polynomials.
bool check_eigen(const JackResult& result);
/// Same comparison for an arbitrary symmetric candidate.
bool is_eigenfunction(const MultiPoly& candidate, const Partition& lambda);

/// [H, B_i^+] phi = B_i^+ {2 alpha |lambda| + i alpha + i(n - i)} phi where
/// phi = staged_product(lambda, i, n). Requires l(lambda) <= i <= n.
bool check_commutator(const Partition& lambda, std::size_t i, std::size_t n, unsigned jobs = 1);

/// Every key mu of the expansion satisfies mu <= lambda. Requires n >= |lambda|.
bool check_triangularity(const JackResult& result);
bool is_dominance_triangular(const Partition& lambda, const MExpansion& expansion);

/// Coefficient of m_{1^N} equals N!. Requires n >= |lambda|.
bool check_normalization(const JackResult& result);
bool has_factorial_normalization(const MExpansion& expansion);

struct ConjectureEntry {
  Partition mu;
  AlphaRational v;
  bool is_integer_poly = false;
  /// v / prod_i m_i(mu)!
  AlphaRational tilde_v;
  bool is_nonneg_integer_poly = false;
};

struct ConjectureReport {
  Partition lambda;
  std::vector<ConjectureEntry> entries;

  bool all_integer() const;
  bool all_nonnegative() const;
};

/// Integrality of v_{lambda mu} and nonnegativity of the renormalized
/// coefficients, one entry per nonzero coefficient in descending
/// lexicographic order of mu. Requires n >= |lambda|.
ConjectureReport conjecture_report(const JackResult& result);

/// Renormalized coefficient v / prod_i m_i(mu)!.
AlphaRational tilde_coefficient(const Partition& mu, const AlphaRational& v);

}  // namespace jackpoly
