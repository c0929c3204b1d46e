#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <vector>

#include "jackpoly/alpha_rational.hpp"
#include "jackpoly/multi_poly.hpp"
#include "jackpoly/partition.hpp"

namespace jackpoly {

/// A homogeneous symmetric polynomial of degree N in monomial-symmetric
/// coordinates: sum over mu of coeff(mu) * m_mu. Zero coefficients are never
/// stored and every key has weight N.
class MExpansion {
 public:
  using CoeffMap = std::map<Partition, AlphaRational, DescendingLex>;

  explicit MExpansion(unsigned degree = 0) : degree_(degree) {}

  unsigned degree() const noexcept { return degree_; }
  const CoeffMap& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  AlphaRational coefficient(const Partition& mu) const;
  /// Throws WeightMismatch if |mu| != degree.
  void add(const Partition& mu, const AlphaRational& c);

  friend bool operator==(const MExpansion& a, const MExpansion& b) = default;

 private:
  unsigned degree_;
  CoeffMap coeffs_;
};

MExpansion operator+(const MExpansion& a, const MExpansion& b);
MExpansion operator-(const MExpansion& a, const MExpansion& b);
MExpansion scale(const MExpansion& a, const AlphaRational& c);

/// Monomial symmetric polynomial m_mu in n variables; zero if l(mu) > n.
MultiPoly m_poly(const Partition& mu, std::size_t n);
/// Power-sum product p_lambda in n variables.
MultiPoly p_poly(const Partition& lambda, std::size_t n);

/// Swap-invariance under every transposition (checked on adjacent ones).
bool is_symmetric(const MultiPoly& f);

/// Reads the m-basis coordinates of a symmetric homogeneous polynomial from its
/// weakly decreasing exponent vectors. Throws NotHomogeneous or NotSymmetric.
MExpansion to_m_expansion(const MultiPoly& f);
/// Inverse of to_m_expansion: sum of coeff * m_poly(mu, n).
MultiPoly from_m_expansion(const MExpansion& e, std::size_t n);

/// Drops every m_mu with l(mu) > n, i.e. sets x_{n+1}, x_{n+2}, ... to zero.
MExpansion truncate(const MExpansion& e, std::size_t n);

using RationalMatrix = std::vector<std::vector<mpq_class>>;

/// Square change-of-basis matrix between bases indexed by `basis`
/// (partitions of N, descending lexicographic).
struct BasisTransition {
  std::vector<Partition> basis;
  RationalMatrix entries;
};

/// Row lambda holds p_lambda in m-coordinates (computed in N variables).
BasisTransition p_in_m_matrix(unsigned degree);
/// Row mu holds m_mu in p-coordinates; the inverse of p_in_m_matrix.
BasisTransition m_to_p_matrix(unsigned degree);

/// Gauss-Jordan inverse over Q. Throws PreconditionViolated if singular.
RationalMatrix invert(const RationalMatrix& a);

/// The alpha-deformed scalar product <p_lambda, p_mu> = delta z_lambda
/// alpha^{l(lambda)} on degree-N symmetric functions, applied to m-basis
/// expansions. Holds the m -> p transition for its degree.
class ScalarProduct {
 public:
  explicit ScalarProduct(unsigned degree);

  unsigned degree() const noexcept { return degree_; }
  /// Throws WeightMismatch if either argument has a different degree.
  AlphaRational operator()(const MExpansion& f, const MExpansion& g) const;

 private:
  std::vector<AlphaRational> to_p(const MExpansion& f) const;

  unsigned degree_;
  BasisTransition m_to_p_;
  std::map<Partition, std::size_t> index_;
  std::vector<AlphaRational> weights_;
};

/// One-shot scalar product; builds a ScalarProduct for f's degree.
AlphaRational scalar_product(const MExpansion& f, const MExpansion& g);

}  // namespace jackpoly
