#include "jackpoly/alpha_poly.hpp"

#include <algorithm>
#include <utility>

#include "jackpoly/errors.hpp"

namespace jackpoly {

AlphaPoly::AlphaPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

AlphaPoly::AlphaPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

AlphaPoly AlphaPoly::constant(const mpz_class& c) {
  return AlphaPoly(std::vector<mpz_class>{c});
}

AlphaPoly AlphaPoly::monomial(const mpz_class& c, std::size_t degree) {
  if (c == 0) return {};
  std::vector<mpz_class> v(degree + 1);
  v[degree] = c;
  return AlphaPoly(std::move(v));
}

void AlphaPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool AlphaPoly::is_one() const noexcept {
  return coeffs_.size() == 1 && coeffs_[0] == 1;
}

mpz_class AlphaPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : mpz_class(0);
}

const mpz_class& AlphaPoly::leading() const {
  if (coeffs_.empty()) throw PreconditionViolated("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

mpz_class AlphaPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

AlphaPoly AlphaPoly::primitive_part() const {
  if (is_zero()) return {};
  AlphaPoly p = divexact(content());
  if (p.leading() < 0) p = -p;
  return p;
}

bool AlphaPoly::all_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c >= 0; });
}

mpq_class AlphaPoly::evaluate(const mpq_class& alpha) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * alpha + mpq_class(*it);
  }
  return acc;
}

AlphaPoly AlphaPoly::operator-() const {
  AlphaPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

AlphaPoly& AlphaPoly::operator+=(const AlphaPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

AlphaPoly& AlphaPoly::operator-=(const AlphaPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

AlphaPoly& AlphaPoly::operator*=(const mpz_class& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return AlphaPoly(std::move(out));
}

AlphaPoly AlphaPoly::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<mpz_class> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return AlphaPoly(std::move(v));
}

AlphaPoly AlphaPoly::divexact(const mpz_class& c) const {
  if (c == 0) throw DivisionByZero("AlphaPoly::divexact by zero");
  AlphaPoly r = *this;
  for (auto& x : r.coeffs_) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t())) {
      throw NonzeroRemainder("integer content division is not exact");
    }
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

AlphaPoly pseudo_remainder(const AlphaPoly& a, const AlphaPoly& b) {
  if (b.is_zero()) throw DivisionByZero("pseudo-remainder by the zero polynomial");
  std::vector<mpz_class> r(a.coeffs().begin(), a.coeffs().end());
  const auto bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const mpz_class& lb = bc.back();
  while (!r.empty() && r.size() - 1 >= db) {
    const std::size_t shift = r.size() - 1 - db;
    const mpz_class lr = r.back();
    for (auto& x : r) x *= lb;
    for (std::size_t k = 0; k <= db; ++k) r[shift + k] -= lr * bc[k];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return AlphaPoly(std::move(r));
}

AlphaPoly gcd(const AlphaPoly& a, const AlphaPoly& b) {
  if (a.is_zero()) return b.primitive_part() * b.content();
  if (b.is_zero()) return a.primitive_part() * a.content();
  mpz_class c;
  {
    const mpz_class ca = a.content();
    const mpz_class cb = b.content();
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  }
  AlphaPoly u = a.primitive_part();
  AlphaPoly v = b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    AlphaPoly r = pseudo_remainder(u, v);
    u = std::move(v);
    v = r.primitive_part();
  }
  return u.primitive_part() * c;
}

AlphaPoly divexact(const AlphaPoly& a, const AlphaPoly& b) {
  if (b.is_zero()) throw DivisionByZero("AlphaPoly division by zero");
  if (b.is_constant()) return a.divexact(b.leading());
  std::vector<mpz_class> r(a.coeffs().begin(), a.coeffs().end());
  const auto bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  if (r.size() < bc.size()) {
    if (!r.empty()) throw NonzeroRemainder("AlphaPoly division is not exact");
    return {};
  }
  std::vector<mpz_class> q(r.size() - db);
  for (std::size_t k = q.size(); k-- > 0;) {
    mpz_class& top = r[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), bc.back().get_mpz_t())) {
      throw NonzeroRemainder("AlphaPoly division is not exact");
    }
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), bc.back().get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) r[k + j] -= q[k] * bc[j];
  }
  for (const auto& x : r) {
    if (x != 0) throw NonzeroRemainder("AlphaPoly division is not exact");
  }
  return AlphaPoly(std::move(q));
}

}  // namespace jackpoly
