#include "jackpoly/symmetric.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "jackpoly/errors.hpp"

namespace jackpoly {

AlphaRational MExpansion::coefficient(const Partition& mu) const {
  auto it = coeffs_.find(mu);
  return it == coeffs_.end() ? AlphaRational() : it->second;
}

void MExpansion::add(const Partition& mu, const AlphaRational& c) {
  if (mu.weight() != degree_) {
    throw WeightMismatch("m_" + mu.to_string() + " in an expansion of degree " + std::to_string(degree_));
  }
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

MExpansion operator+(const MExpansion& a, const MExpansion& b) {
  if (a.degree() != b.degree()) throw WeightMismatch("adding expansions of different degrees");
  MExpansion r = a;
  for (const auto& [mu, c] : b.coeffs()) r.add(mu, c);
  return r;
}

MExpansion operator-(const MExpansion& a, const MExpansion& b) {
  if (a.degree() != b.degree()) throw WeightMismatch("subtracting expansions of different degrees");
  MExpansion r = a;
  for (const auto& [mu, c] : b.coeffs()) r.add(mu, -c);
  return r;
}

MExpansion scale(const MExpansion& a, const AlphaRational& c) {
  MExpansion r(a.degree());
  if (c.is_zero()) return r;
  for (const auto& [mu, v] : a.coeffs()) r.add(mu, v * c);
  return r;
}

MultiPoly m_poly(const Partition& mu, std::size_t n) {
  MultiPoly f(n);
  if (mu.length() > n) return f;
  Monomial exps(n, 0);
  std::copy(mu.parts().begin(), mu.parts().end(), exps.begin());
  std::sort(exps.begin(), exps.end());
  do {
    f.add_term(exps, AlphaRational(1));
  } while (std::next_permutation(exps.begin(), exps.end()));
  return f;
}

MultiPoly p_poly(const Partition& lambda, std::size_t n) {
  MultiPoly f = MultiPoly::constant(n, AlphaRational(1));
  for (unsigned part : lambda.parts()) {
    MultiPoly power_sum(n);
    for (std::size_t k = 0; k < n; ++k) {
      Monomial m(n, 0);
      m[k] = part;
      power_sum.add_term(std::move(m), AlphaRational(1));
    }
    f = f * power_sum;
  }
  return f;
}

bool is_symmetric(const MultiPoly& f) {
  for (std::size_t k = 1; k < f.num_vars(); ++k) {
    if (swap_variables(f, k, k + 1) != f) return false;
  }
  return true;
}

MExpansion to_m_expansion(const MultiPoly& f) {
  const auto degree = f.homogeneous_degree();
  if (!degree) throw NotHomogeneous("polynomial mixes total degrees");
  if (!is_symmetric(f)) throw NotSymmetric("polynomial is not invariant under variable swaps");
  MExpansion e(*degree);
  for (const auto& [m, c] : f.terms()) {
    if (std::is_sorted(m.begin(), m.end(), std::greater<>())) e.add(Partition(m), c);
  }
  return e;
}

MultiPoly from_m_expansion(const MExpansion& e, std::size_t n) {
  MultiPoly f(n);
  for (const auto& [mu, c] : e.coeffs()) f += scale(m_poly(mu, n), c);
  return f;
}

MExpansion truncate(const MExpansion& e, std::size_t n) {
  MExpansion r(e.degree());
  for (const auto& [mu, c] : e.coeffs()) {
    if (mu.length() <= n) r.add(mu, c);
  }
  return r;
}

RationalMatrix invert(const RationalMatrix& a) {
  const std::size_t n = a.size();
  RationalMatrix work = a;
  RationalMatrix inv(n, std::vector<mpq_class>(n, 0));
  for (std::size_t k = 0; k < n; ++k) inv[k][k] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work[pivot][col] == 0) ++pivot;
    if (pivot == n) throw PreconditionViolated("singular matrix");
    std::swap(work[pivot], work[col]);
    std::swap(inv[pivot], inv[col]);
    const mpq_class p = work[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      work[col][k] /= p;
      inv[col][k] /= p;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || work[row][col] == 0) continue;
      const mpq_class f = work[row][col];
      for (std::size_t k = 0; k < n; ++k) {
        work[row][k] -= f * work[col][k];
        inv[row][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

BasisTransition p_in_m_matrix(unsigned degree) {
  BasisTransition t;
  t.basis = partitions_of(degree);
  const std::size_t size = t.basis.size();
  t.entries.assign(size, std::vector<mpq_class>(size, 0));
  for (std::size_t row = 0; row < size; ++row) {
    const MExpansion e = to_m_expansion(p_poly(t.basis[row], degree));
    for (std::size_t col = 0; col < size; ++col) {
      const AlphaRational c = e.coefficient(t.basis[col]);
      if (!c.is_zero()) t.entries[row][col] = mpq_class(c.num().coeff(0));
    }
  }
  return t;
}

BasisTransition m_to_p_matrix(unsigned degree) {
  BasisTransition t = p_in_m_matrix(degree);
  t.entries = invert(t.entries);
  return t;
}

ScalarProduct::ScalarProduct(unsigned degree) : degree_(degree), m_to_p_(m_to_p_matrix(degree)) {
  for (std::size_t k = 0; k < m_to_p_.basis.size(); ++k) {
    const Partition& lambda = m_to_p_.basis[k];
    index_.emplace(lambda, k);
    weights_.push_back(AlphaRational(AlphaPoly::monomial(z_of(lambda), lambda.length())));
  }
}

std::vector<AlphaRational> ScalarProduct::to_p(const MExpansion& f) const {
  if (f.degree() != degree_ && !f.is_zero()) {
    throw WeightMismatch("scalar product of degree " + std::to_string(degree_) + " applied to degree " +
                         std::to_string(f.degree()));
  }
  std::vector<AlphaRational> out(m_to_p_.basis.size());
  for (const auto& [mu, c] : f.coeffs()) {
    const auto& row = m_to_p_.entries[index_.at(mu)];
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] != 0) out[k] += c * AlphaRational::from_rational(row[k]);
    }
  }
  return out;
}

AlphaRational ScalarProduct::operator()(const MExpansion& f, const MExpansion& g) const {
  const auto fp = to_p(f);
  const auto gp = to_p(g);
  AlphaRational acc;
  for (std::size_t k = 0; k < fp.size(); ++k) {
    if (fp[k].is_zero() || gp[k].is_zero()) continue;
    acc += fp[k] * gp[k] * weights_[k];
  }
  return acc;
}

AlphaRational scalar_product(const MExpansion& f, const MExpansion& g) {
  if (f.degree() != g.degree() && !f.is_zero() && !g.is_zero()) {
    throw WeightMismatch("scalar product of expansions with degrees " + std::to_string(f.degree()) + " and " +
                         std::to_string(g.degree()));
  }
  return ScalarProduct(f.is_zero() ? g.degree() : f.degree())(f, g);
}

}  // namespace jackpoly
