#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "jackpoly/alpha_rational.hpp"

namespace jackpoly {

/// Exponent vector x_1^e_1 ... x_n^e_n. Its length is the variable count of
/// the polynomial that owns it.
using Monomial = std::vector<unsigned>;

unsigned total_degree(const Monomial& m) noexcept;

/// Graded lexicographic order, largest first: higher total degree precedes
/// lower, ties broken by descending lexicographic comparison.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

/// Sparse polynomial in x_1..x_n over Q(alpha).
///
/// No stored coefficient is zero and every key has length n, so structural
/// equality is mathematical equality. Terms iterate in GrlexDescending order.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, AlphaRational, GrlexDescending>;

  explicit MultiPoly(std::size_t num_vars = 0) : n_(num_vars) {}

  static MultiPoly constant(std::size_t num_vars, const AlphaRational& c);
  /// The variable x_i, 1 <= i <= n.
  static MultiPoly variable(std::size_t num_vars, std::size_t i);
  static MultiPoly monomial(Monomial exps, const AlphaRational& c = AlphaRational(1));

  std::size_t num_vars() const noexcept { return n_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  AlphaRational coefficient(const Monomial& m) const;

  /// Accumulates c * x^m. Terms that cancel are removed.
  void add_term(const Monomial& m, const AlphaRational& c);
  void add_term(Monomial&& m, const AlphaRational& c);

  /// Common total degree of all terms; nullopt if mixed. The zero polynomial
  /// reports 0.
  std::optional<unsigned> homogeneous_degree() const;
  /// True iff every coefficient lies in Z[alpha].
  bool has_integer_coefficients() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

 private:
  void check_key(const Monomial& m) const;

  std::size_t n_;
  TermMap terms_;
};

enum class PolyOp { add, sub, mul };

/// Throws VariableCountMismatch if a and b differ in variable count.
MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op);

MultiPoly scale(const MultiPoly& a, const AlphaRational& c);

/// f with the exponents of x_i and x_j exchanged in every term (1-based).
MultiPoly swap_variables(const MultiPoly& f, std::size_t i, std::size_t j);

/// q with q * (x_i - x_j) = f, by synthetic division in x_i. Indices are
/// 1-based. Throws NonzeroRemainder if (x_i - x_j) does not divide f.
MultiPoly exact_divide_diff(const MultiPoly& f, std::size_t i, std::size_t j);

}  // namespace jackpoly
