#include "jackpoly/operators.hpp"

#include <string>
#include <utility>

#include "jackpoly/errors.hpp"
#include "jackpoly/parallel.hpp"
#include "jackpoly/symmetric.hpp"

namespace jackpoly {

namespace {

void check_index(std::size_t i, std::size_t n, const char* what) {
  if (i < 1 || i > n) {
    throw IndexOutOfRange(std::string(what) + " index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  }
}

MultiPoly times_monomial(const MultiPoly& f, const Monomial& shift) {
  MultiPoly r(f.num_vars());
  for (const auto& [m, c] : f.terms()) {
    Monomial s = m;
    for (std::size_t k = 0; k < s.size(); ++k) s[k] += shift[k];
    r.add_term(std::move(s), c);
  }
  return r;
}

// (D_i + shift) f
MultiPoly dunkl_plus(const MultiPoly& f, std::size_t i, long shift) {
  MultiPoly r = apply_dunkl(f, i);
  if (shift != 0) r += scale(f, AlphaRational(shift));
  return r;
}

void creation_tail(const MultiPoly& g, std::size_t position, std::size_t upper, const Monomial& xj,
                   MultiPoly& acc) {
  // Position `position` picks j in [position, upper); the smaller positions
  // need position - 1 indices below j.
  for (std::size_t j = position; j < upper; ++j) {
    MultiPoly next = dunkl_plus(g, j, static_cast<long>(position));
    Monomial mono = xj;
    mono[j - 1] = 1;
    if (position == 1) {
      acc += times_monomial(next, mono);
    } else {
      creation_tail(next, position - 1, j, mono, acc);
    }
  }
}

}  // namespace

SubsetJ::SubsetJ(std::vector<std::size_t> indices, std::size_t num_vars) : indices_(std::move(indices)), n_(num_vars) {
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    check_index(indices_[k], n_, "subset");
    if (k > 0 && indices_[k - 1] >= indices_[k]) throw IndexOutOfRange("subset indices must be strictly increasing");
  }
}

Monomial SubsetJ::x_monomial() const {
  Monomial m(n_, 0);
  for (std::size_t j : indices_) m[j - 1] = 1;
  return m;
}

std::vector<SubsetJ> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<SubsetJ> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t t = 0; t < k; ++t) idx[t] = t + 1;
  while (true) {
    out.emplace_back(idx, n);
    std::size_t t = k;
    while (t > 0 && idx[t - 1] == n - k + t) --t;
    if (t == 0) break;
    ++idx[t - 1];
    for (std::size_t u = t; u < k; ++u) idx[u] = idx[u - 1] + 1;
  }
  return out;
}

MultiPoly apply_swap(const MultiPoly& f, std::size_t i, std::size_t j) {
  check_index(i, f.num_vars(), "swap");
  check_index(j, f.num_vars(), "swap");
  if (i == j) throw IndexOutOfRange("swap needs two distinct indices");
  return swap_variables(f, i, j);
}

MultiPoly apply_dunkl(const MultiPoly& f, std::size_t i) {
  const std::size_t n = f.num_vars();
  check_index(i, n, "Dunkl");
  const std::size_t a_idx = i - 1;
  MultiPoly r(n);
  for (const auto& [m, c] : f.terms()) {
    const unsigned a = m[a_idx];
    if (a > 0) r.add_term(m, c * AlphaRational(AlphaPoly::monomial(a, 1)));
    for (std::size_t b_idx = 0; b_idx < n; ++b_idx) {
      if (b_idx == a_idx) continue;
      const unsigned b = m[b_idx];
      if (a == b) continue;
      const bool forward = a > b;
      const unsigned lo = forward ? b : a;
      const unsigned hi = forward ? a : b;
      const AlphaRational sc = forward ? c : -c;
      Monomial s = m;
      for (unsigned t = 0; t < hi - lo; ++t) {
        s[a_idx] = lo + 1 + t;
        s[b_idx] = hi - 1 - t;
        r.add_term(s, sc);
      }
    }
  }
  return r;
}

MultiPoly apply_dunkl_product(const MultiPoly& f, const SubsetJ& J) {
  if (J.num_vars() != f.num_vars()) throw VariableCountMismatch("subset built for a different variable count");
  MultiPoly g = f;
  const auto& idx = J.indices();
  for (std::size_t k = idx.size(); k-- > 0;) g = dunkl_plus(g, idx[k], static_cast<long>(k + 1));
  return g;
}

MultiPoly apply_creation(const MultiPoly& f, std::size_t i, unsigned jobs) {
  const std::size_t n = f.num_vars();
  check_index(i, n, "creation operator");
  // One branch per choice of the last index j_i in [i, n].
  const std::size_t branches = n - i + 1;
  auto partials = parallel_map(branches, jobs, [&](std::size_t b) {
    const std::size_t j = i + b;
    MultiPoly acc(n);
    MultiPoly g = dunkl_plus(f, j, static_cast<long>(i));
    Monomial mono(n, 0);
    mono[j - 1] = 1;
    if (i == 1) {
      acc += times_monomial(g, mono);
    } else {
      creation_tail(g, i - 1, j, mono, acc);
    }
    return acc;
  });
  MultiPoly result(n);
  for (const auto& p : partials) result += p;
  return result;
}

MultiPoly apply_hamiltonian(const MultiPoly& f) {
  const std::size_t n = f.num_vars();
  if (!is_symmetric(f)) throw NotSymmetric("the Sutherland operator acts on symmetric polynomials only");
  MultiPoly r(n);
  for (const auto& [m, c] : f.terms()) {
    unsigned long sq = 0;
    for (unsigned e : m) sq += static_cast<unsigned long>(e) * e;
    if (sq != 0) r.add_term(m, c * AlphaRational(AlphaPoly::monomial(sq, 1)));
  }
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t k = j + 1; k <= n; ++k) {
      MultiPoly euler_diff(n);
      for (const auto& [m, c] : f.terms()) {
        const long d = static_cast<long>(m[j - 1]) - static_cast<long>(m[k - 1]);
        if (d != 0) euler_diff.add_term(m, c * AlphaRational(d));
      }
      if (euler_diff.is_zero()) continue;
      const MultiPoly q = exact_divide_diff(euler_diff, j, k);
      r += q * (MultiPoly::variable(n, j) + MultiPoly::variable(n, k));
    }
  }
  return r;
}

}  // namespace jackpoly
