#pragma once

#include <gmpxx.h>

#include "jackpoly/alpha_poly.hpp"

namespace jackpoly {

/// Element of Q(alpha) held as num/den with num, den in Z[alpha].
///
/// Canonical form: gcd(num, den) = 1 in Z[alpha] (integer content included),
/// den has a positive leading coefficient, and zero is 0/1. Two values are
/// equal iff their canonical forms agree componentwise.
///
/// Values with den = 1 take a fast path through +, - and * that skips the
/// polynomial gcd; this keeps integer-coefficient pipelines cheap.
class AlphaRational {
 public:
  AlphaRational() : den_(AlphaPoly::constant(1)) {}
  AlphaRational(AlphaPoly num);  // NOLINT(google-explicit-constructor)
  AlphaRational(AlphaPoly num, AlphaPoly den);
  AlphaRational(long c) : AlphaRational(AlphaPoly::constant(c)) {}  // NOLINT

  static AlphaRational from_integer(const mpz_class& c);
  static AlphaRational from_rational(const mpq_class& q);
  static AlphaRational alpha() { return AlphaRational(AlphaPoly::alpha()); }

  const AlphaPoly& num() const noexcept { return num_; }
  const AlphaPoly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  /// True iff the value lies in Z[alpha].
  bool is_polynomial() const noexcept { return den_.is_one(); }

  /// Throws DivisionByZero if the denominator vanishes at alpha.
  mpq_class evaluate(const mpq_class& alpha) const;

  AlphaRational inverse() const;

  AlphaRational operator-() const;
  AlphaRational& operator+=(const AlphaRational& rhs);
  AlphaRational& operator-=(const AlphaRational& rhs);
  AlphaRational& operator*=(const AlphaRational& rhs);
  AlphaRational& operator/=(const AlphaRational& rhs) { return *this *= rhs.inverse(); }

  friend AlphaRational operator+(AlphaRational a, const AlphaRational& b) { return a += b; }
  friend AlphaRational operator-(AlphaRational a, const AlphaRational& b) { return a -= b; }
  friend AlphaRational operator*(AlphaRational a, const AlphaRational& b) { return a *= b; }
  friend AlphaRational operator/(AlphaRational a, const AlphaRational& b) { return a /= b; }
  friend bool operator==(const AlphaRational& a, const AlphaRational& b) = default;

 private:
  struct Canonical {};
  AlphaRational(AlphaPoly num, AlphaPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  AlphaPoly num_;
  AlphaPoly den_;
};

}  // namespace jackpoly
