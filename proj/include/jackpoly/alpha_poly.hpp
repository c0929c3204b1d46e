#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace jackpoly {

/// Univariate polynomial in the Jack parameter alpha with arbitrary-precision
/// integer coefficients, stored densely by ascending degree. The coefficient
/// vector never carries trailing zeros; the zero polynomial is empty.
class AlphaPoly {
 public:
  AlphaPoly() = default;
  explicit AlphaPoly(std::vector<mpz_class> coeffs);
  AlphaPoly(std::initializer_list<long> coeffs);

  static AlphaPoly constant(const mpz_class& c);
  /// c * alpha^degree
  static AlphaPoly monomial(const mpz_class& c, std::size_t degree);
  static AlphaPoly alpha() { return monomial(1, 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept;
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  std::span<const mpz_class> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of alpha^k; zero beyond the degree.
  mpz_class coeff(std::size_t k) const;
  const mpz_class& leading() const;

  /// Gcd of all coefficients, nonnegative; zero for the zero polynomial.
  mpz_class content() const;
  AlphaPoly primitive_part() const;
  bool all_nonnegative() const;

  mpq_class evaluate(const mpq_class& alpha) const;

  AlphaPoly operator-() const;
  AlphaPoly& operator+=(const AlphaPoly& rhs);
  AlphaPoly& operator-=(const AlphaPoly& rhs);
  AlphaPoly& operator*=(const mpz_class& c);

  friend AlphaPoly operator+(AlphaPoly a, const AlphaPoly& b) { return a += b; }
  friend AlphaPoly operator-(AlphaPoly a, const AlphaPoly& b) { return a -= b; }
  friend AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b);
  friend AlphaPoly operator*(AlphaPoly a, const mpz_class& c) { return a *= c; }
  friend bool operator==(const AlphaPoly& a, const AlphaPoly& b) = default;

  /// Multiplies by alpha^k.
  AlphaPoly shifted(std::size_t k) const;
  /// Divides every coefficient by c, which must divide each one exactly.
  AlphaPoly divexact(const mpz_class& c) const;

 private:
  void trim();

  std::vector<mpz_class> coeffs_;
};

/// Pseudo-remainder of a by b: the remainder of lc(b)^(deg a - deg b + 1) * a.
AlphaPoly pseudo_remainder(const AlphaPoly& a, const AlphaPoly& b);

/// Greatest common divisor in Z[alpha], normalized to a positive leading
/// coefficient. gcd(0, 0) = 0.
AlphaPoly gcd(const AlphaPoly& a, const AlphaPoly& b);

/// Quotient a / b in Z[alpha]. Throws NonzeroRemainder if b does not divide a.
AlphaPoly divexact(const AlphaPoly& a, const AlphaPoly& b);

}  // namespace jackpoly
