#include "jackpoly/jack.hpp"

#include <string>

#include "jackpoly/errors.hpp"
#include "jackpoly/operators.hpp"

namespace jackpoly {

namespace {

void require_stable(const JackResult& result, const char* what) {
  if (result.n < result.lambda.weight()) {
    throw PreconditionViolated(std::string(what) + " needs n >= |lambda| (n = " + std::to_string(result.n) +
                               ", |lambda| = " + std::to_string(result.lambda.weight()) + ")");
  }
}

}  // namespace

void require_fits(const Partition& lambda, std::size_t n) {
  if (lambda.length() > n) {
    throw PartitionTooLong("partition has " + std::to_string(lambda.length()) + " parts but n = " + std::to_string(n));
  }
}

MultiPoly staged_product(const Partition& lambda, std::size_t top, std::size_t n, const RodriguesOptions& options) {
  require_fits(lambda, top);
  if (top > n) throw IndexOutOfRange("staging index " + std::to_string(top) + " exceeds n = " + std::to_string(n));
  MultiPoly state = MultiPoly::constant(n, AlphaRational(1));
  if (options.on_stage) options.on_stage(state);
  for (std::size_t k = 1; k <= top; ++k) {
    const unsigned power = lambda.part(k - 1) - lambda.part(k);
    for (unsigned r = 0; r < power; ++r) {
      state = apply_creation(state, k, options.jobs);
      if (options.on_stage) options.on_stage(state);
    }
  }
  return state;
}

JackResult rodrigues_jack(const Partition& lambda, std::size_t n, const RodriguesOptions& options) {
  require_fits(lambda, n);
  JackResult result;
  result.lambda = lambda;
  result.n = n;
  result.poly = staged_product(lambda, n, n, options);
  result.expansion = to_m_expansion(result.poly);
  return result;
}

AlphaPoly epsilon(const Partition& lambda, std::size_t n) {
  require_fits(lambda, n);
  mpz_class linear = 0;
  mpz_class constant = 0;
  for (std::size_t j = 1; j <= lambda.length(); ++j) {
    const long part = lambda.part(j - 1);
    linear += part * part;
    constant += (static_cast<long>(n) + 1 - 2 * static_cast<long>(j)) * part;
  }
  return AlphaPoly(std::vector<mpz_class>{constant, linear});
}

bool is_eigenfunction(const MultiPoly& candidate, const Partition& lambda) {
  return apply_hamiltonian(candidate) == scale(candidate, AlphaRational(epsilon(lambda, candidate.num_vars())));
}

bool check_eigen(const JackResult& result) { return is_eigenfunction(result.poly, result.lambda); }

bool check_commutator(const Partition& lambda, std::size_t i, std::size_t n, unsigned jobs) {
  require_fits(lambda, i);
  if (i < 1 || i > n) throw IndexOutOfRange("creation index must lie in 1..n");
  RodriguesOptions options;
  options.jobs = jobs;
  const MultiPoly phi = staged_product(lambda, i, n, options);

  const MultiPoly lhs = apply_hamiltonian(apply_creation(phi, i, jobs)) - apply_creation(apply_hamiltonian(phi), i, jobs);

  const long ii = static_cast<long>(i);
  const AlphaPoly brace(std::vector<mpz_class>{ii * (static_cast<long>(n) - ii), 2L * lambda.weight() + ii});
  const MultiPoly rhs = apply_creation(scale(phi, AlphaRational(brace)), i, jobs);
  return lhs == rhs;
}

bool is_dominance_triangular(const Partition& lambda, const MExpansion& expansion) {
  for (const auto& [mu, c] : expansion.coeffs()) {
    if (mu.weight() != lambda.weight() || !dominance_leq(mu, lambda)) return false;
  }
  return true;
}

bool check_triangularity(const JackResult& result) {
  require_stable(result, "triangularity check");
  return is_dominance_triangular(result.lambda, result.expansion);
}

bool has_factorial_normalization(const MExpansion& expansion) {
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), expansion.degree());
  return expansion.coefficient(Partition::ones(expansion.degree())) == AlphaRational::from_integer(fact);
}

bool check_normalization(const JackResult& result) {
  require_stable(result, "normalization check");
  return has_factorial_normalization(result.expansion);
}

AlphaRational tilde_coefficient(const Partition& mu, const AlphaRational& v) {
  return v / AlphaRational::from_integer(mu.multiplicity_factorial());
}

bool ConjectureReport::all_integer() const {
  for (const auto& e : entries) {
    if (!e.is_integer_poly) return false;
  }
  return true;
}

bool ConjectureReport::all_nonnegative() const {
  for (const auto& e : entries) {
    if (!e.is_nonneg_integer_poly) return false;
  }
  return true;
}

ConjectureReport conjecture_report(const JackResult& result) {
  require_stable(result, "conjecture report");
  ConjectureReport report;
  report.lambda = result.lambda;
  for (const auto& [mu, v] : result.expansion.coeffs()) {
    ConjectureEntry e;
    e.mu = mu;
    e.v = v;
    e.is_integer_poly = v.is_polynomial();
    e.tilde_v = tilde_coefficient(mu, v);
    e.is_nonneg_integer_poly = e.tilde_v.is_polynomial() && e.tilde_v.num().all_nonnegative();
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace jackpoly
