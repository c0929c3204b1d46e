#pragma once

#include <cstddef>
#include <vector>

#include "jackpoly/multi_poly.hpp"

namespace jackpoly {

/// Index set J = {j_1 < ... < j_l} within 1..n labelling D_J and x_J.
class SubsetJ {
 public:
  /// Throws IndexOutOfRange unless indices are strictly increasing in 1..n.
  SubsetJ(std::vector<std::size_t> indices, std::size_t num_vars);

  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  std::size_t num_vars() const noexcept { return n_; }
  /// Exponent vector of x_J = prod_{j in J} x_j.
  Monomial x_monomial() const;

 private:
  std::vector<std::size_t> indices_;
  std::size_t n_;
};

/// All k-subsets of 1..n in lexicographic order.
std::vector<SubsetJ> subsets_of_size(std::size_t n, std::size_t k);

/// K_ij: exchanges x_i and x_j. Requires 1 <= i != j <= n.
MultiPoly apply_swap(const MultiPoly& f, std::size_t i, std::size_t j);

/// Dunkl operator D_i = alpha x_i d/dx_i + sum_{j != i} x_i/(x_i - x_j) (1 - K_ij).
///
/// The exchange part acts term by term through the telescoped quotient
///   x_i (x_i^a x_j^b - x_i^b x_j^a)/(x_i - x_j) = sum_{t<a-b} x_i^{b+1+t} x_j^{a-1-t}   (a > b)
/// and its negated mirror for a < b, so Z[alpha] coefficients stay in Z[alpha].
MultiPoly apply_dunkl(const MultiPoly& f, std::size_t i);

/// D_J = (D_{j_1} + 1)(D_{j_2} + 2)...(D_{j_l} + l), rightmost factor first.
MultiPoly apply_dunkl_product(const MultiPoly& f, const SubsetJ& J);

/// Creation operator B_i^+ = sum_{|J| = i} x_J D_J.
///
/// Subsets sharing a common tail (j_k, ..., j_i) share the partial product
/// (D_{j_k} + k)...(D_{j_i} + i) f. With jobs > 1 the branches for distinct
/// j_i run concurrently; the final sum is exact, so the result does not depend
/// on the worker count.
MultiPoly apply_creation(const MultiPoly& f, std::size_t i, unsigned jobs = 1);

/// Sutherland operator
///   H = alpha sum_j (x_j d_j)^2 + sum_{j<k} (x_j + x_k)/(x_j - x_k) (x_j d_j - x_k d_k).
/// Throws NotSymmetric unless f is invariant under all variable swaps.
MultiPoly apply_hamiltonian(const MultiPoly& f);

}  // namespace jackpoly
