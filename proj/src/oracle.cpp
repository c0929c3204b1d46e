#include "jackpoly/oracle.hpp"

#include <algorithm>
#include <string>

#include "jackpoly/errors.hpp"

namespace jackpoly {

std::vector<Partition> ascending_lex_extension(unsigned degree) {
  std::vector<Partition> order = partitions_of(degree);
  std::reverse(order.begin(), order.end());
  return order;
}

std::vector<Partition> conjugate_lex_extension(unsigned degree) {
  std::vector<Partition> order = partitions_of(degree);
  std::sort(order.begin(), order.end(),
            [](const Partition& a, const Partition& b) { return a.conjugate() > b.conjugate(); });
  return order;
}

JackTable gram_schmidt_jack(unsigned degree, std::span<const Partition> order) {
  const std::vector<Partition> all = partitions_of(degree);
  if (order.size() != all.size() || !std::is_permutation(order.begin(), order.end(), all.begin())) {
    throw PreconditionViolated("order must list every partition of " + std::to_string(degree) + " exactly once");
  }
  for (std::size_t a = 0; a < order.size(); ++a) {
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      if (dominance_leq(order[b], order[a])) {
        throw PreconditionViolated(order[b].to_string() + " is dominated by " + order[a].to_string() +
                                   " but comes later");
      }
    }
  }

  const ScalarProduct product(degree);
  std::vector<MExpansion> basis;
  std::vector<AlphaRational> norms;
  basis.reserve(order.size());
  for (const Partition& lambda : order) {
    MExpansion m_lambda(degree);
    m_lambda.add(lambda, AlphaRational(1));
    MExpansion p = m_lambda;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const AlphaRational overlap = product(m_lambda, basis[k]);
      if (!overlap.is_zero()) p = p - scale(basis[k], overlap / norms[k]);
    }
    AlphaRational norm = product(p, p);
    if (norm.is_zero()) throw DegenerateGram("vanishing norm at " + lambda.to_string());
    basis.push_back(std::move(p));
    norms.push_back(std::move(norm));
  }

  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), degree);
  const Partition bottom = Partition::ones(degree);
  JackTable table;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const AlphaRational lowest = basis[k].coefficient(bottom);
    if (lowest.is_zero()) throw DegenerateGram("m_{1^N} coefficient vanishes for " + order[k].to_string());
    MExpansion j = scale(basis[k], AlphaRational::from_integer(fact) / lowest);
    for (const auto& [mu, c] : j.coeffs()) {
      if (!c.is_polynomial()) {
        throw NonzeroRemainder("oracle coefficient of m_" + mu.to_string() + " in J_" + order[k].to_string() +
                               " is not a polynomial in alpha");
      }
    }
    table.emplace(order[k], std::move(j));
  }
  return table;
}

JackTable gram_schmidt_jack(unsigned degree) {
  const auto order = ascending_lex_extension(degree);
  return gram_schmidt_jack(degree, order);
}

namespace {

bool triangular(const Partition& lambda, const MExpansion& e) {
  return std::all_of(e.coeffs().begin(), e.coeffs().end(),
                     [&](const auto& kv) { return dominance_leq(kv.first, lambda); });
}

}  // namespace

bool verify_oracle_self(unsigned degree) {
  const JackTable table = gram_schmidt_jack(degree);
  const ScalarProduct product(degree);
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), degree);
  for (auto a = table.begin(); a != table.end(); ++a) {
    if (!triangular(a->first, a->second)) return false;
    if (a->second.coefficient(Partition::ones(degree)) != AlphaRational::from_integer(fact)) return false;
    for (auto b = std::next(a); b != table.end(); ++b) {
      if (!product(a->second, b->second).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace jackpoly
