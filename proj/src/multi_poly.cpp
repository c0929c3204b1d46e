#include "jackpoly/multi_poly.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "jackpoly/errors.hpp"

namespace jackpoly {

unsigned total_degree(const Monomial& m) noexcept {
  return std::accumulate(m.begin(), m.end(), 0U);
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const noexcept {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

MultiPoly MultiPoly::constant(std::size_t num_vars, const AlphaRational& c) {
  MultiPoly p(num_vars);
  p.add_term(Monomial(num_vars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t num_vars, std::size_t i) {
  if (i < 1 || i > num_vars) {
    throw IndexOutOfRange("variable index " + std::to_string(i) + " outside 1.." + std::to_string(num_vars));
  }
  Monomial m(num_vars, 0);
  m[i - 1] = 1;
  return monomial(std::move(m));
}

MultiPoly MultiPoly::monomial(Monomial exps, const AlphaRational& c) {
  MultiPoly p(exps.size());
  p.add_term(std::move(exps), c);
  return p;
}

AlphaRational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? AlphaRational() : it->second;
}

void MultiPoly::check_key(const Monomial& m) const {
  if (m.size() != n_) {
    throw VariableCountMismatch("monomial of length " + std::to_string(m.size()) + " in a polynomial over " +
                                std::to_string(n_) + " variables");
  }
}

void MultiPoly::add_term(const Monomial& m, const AlphaRational& c) {
  if (c.is_zero()) return;
  check_key(m);
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::add_term(Monomial&& m, const AlphaRational& c) {
  if (c.is_zero()) return;
  check_key(m);
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<unsigned> MultiPoly::homogeneous_degree() const {
  if (terms_.empty()) return 0U;
  const unsigned d = total_degree(terms_.begin()->first);
  // Grlex puts the highest degree first and the lowest last.
  if (total_degree(terms_.rbegin()->first) != d) return std::nullopt;
  return d;
}

bool MultiPoly::has_integer_coefficients() const {
  for (const auto& [m, c] : terms_) {
    if (!c.is_polynomial()) return false;
  }
  return true;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  if (rhs.n_ != n_) throw VariableCountMismatch("adding polynomials over different variable counts");
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  if (rhs.n_ != n_) throw VariableCountMismatch("subtracting polynomials over different variable counts");
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.n_ != b.n_) throw VariableCountMismatch("multiplying polynomials over different variable counts");
  MultiPoly r(a.n_);
  Monomial m(a.n_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t k = 0; k < a.n_; ++k) m[k] = ma[k] + mb[k];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op) {
  if (a.num_vars() != b.num_vars()) {
    throw VariableCountMismatch("operands have " + std::to_string(a.num_vars()) + " and " +
                                std::to_string(b.num_vars()) + " variables");
  }
  switch (op) {
    case PolyOp::add:
      return a + b;
    case PolyOp::sub:
      return a - b;
    case PolyOp::mul:
      return a * b;
  }
  return MultiPoly(a.num_vars());
}

MultiPoly scale(const MultiPoly& a, const AlphaRational& c) {
  MultiPoly r(a.num_vars());
  if (c.is_zero()) return r;
  for (const auto& [m, coeff] : a.terms()) r.add_term(m, coeff * c);
  return r;
}

MultiPoly swap_variables(const MultiPoly& f, std::size_t i, std::size_t j) {
  const std::size_t n = f.num_vars();
  if (i < 1 || i > n || j < 1 || j > n) {
    throw IndexOutOfRange("swap indices must lie in 1.." + std::to_string(n));
  }
  MultiPoly r(n);
  for (const auto& [m, c] : f.terms()) {
    Monomial s = m;
    std::swap(s[i - 1], s[j - 1]);
    r.add_term(std::move(s), c);
  }
  return r;
}

MultiPoly exact_divide_diff(const MultiPoly& f, std::size_t i, std::size_t j) {
  const std::size_t n = f.num_vars();
  if (i < 1 || i > n || j < 1 || j > n || i == j) {
    throw IndexOutOfRange("exact_divide_diff needs distinct indices in 1.." + std::to_string(n));
  }
  const std::size_t a = i - 1;
  const std::size_t b = j - 1;

  // Order the working set by x_i-exponent, largest first, so that each step
  // eliminates the current top power of x_i.
  auto by_xi = [a](const Monomial& l, const Monomial& r) {
    if (l[a] != r[a]) return l[a] > r[a];
    return l < r;
  };
  std::map<Monomial, AlphaRational, decltype(by_xi)> work(by_xi);
  for (const auto& [m, c] : f.terms()) work.emplace(m, c);

  MultiPoly q(n);
  while (!work.empty() && work.begin()->first[a] > 0) {
    auto node = work.extract(work.begin());
    Monomial m = std::move(node.key());
    const AlphaRational c = std::move(node.mapped());
    // c x_i^e r = c x_i^(e-1) r (x_i - x_j) + c x_i^(e-1) x_j r
    m[a] -= 1;
    q.add_term(m, c);
    m[b] += 1;
    auto [it, inserted] = work.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) work.erase(it);
    }
  }
  if (!work.empty()) {
    throw NonzeroRemainder("polynomial is not divisible by (x" + std::to_string(i) + " - x" + std::to_string(j) + ")");
  }
  return q;
}

}  // namespace jackpoly
