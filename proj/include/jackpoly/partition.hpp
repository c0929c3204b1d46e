#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace jackpoly {

/// Integer partition: weakly decreasing positive parts, trailing zeros
/// trimmed on construction.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidPartition unless parts are weakly decreasing. Trailing
  /// zeros are dropped; a zero followed by a positive part is rejected.
  explicit Partition(std::vector<unsigned> parts);
  Partition(std::initializer_list<unsigned> parts) : Partition(std::vector<unsigned>(parts)) {}

  /// All-ones partition 1^N.
  static Partition ones(unsigned n);

  /// Accepts "3,1,1"; "0" and the empty string give the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<unsigned>& parts() const noexcept { return parts_; }
  /// k-th part, 0-based, zero-padded past the length.
  unsigned part(std::size_t k) const noexcept { return k < parts_.size() ? parts_[k] : 0; }
  std::size_t length() const noexcept { return parts_.size(); }
  unsigned weight() const noexcept { return weight_; }
  bool empty() const noexcept { return parts_.empty(); }

  /// m_i: number of parts equal to i.
  unsigned multiplicity(unsigned i) const noexcept;
  /// prod_i m_i!
  mpz_class multiplicity_factorial() const;
  Partition conjugate() const;

  /// "3,1,1"; the empty partition renders as "0".
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  /// Lexicographic on parts, which coincides with zero-padded comparison.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<unsigned> parts_;
  unsigned weight_ = 0;
};

/// Orders map keys so that iteration runs in descending lexicographic order.
struct DescendingLex {
  bool operator()(const Partition& a, const Partition& b) const noexcept { return a > b; }
};

/// Partitions of n with at most max_length parts, descending lexicographic.
std::vector<Partition> partitions_of(unsigned n, std::size_t max_length);
inline std::vector<Partition> partitions_of(unsigned n) { return partitions_of(n, n); }

/// mu <= lambda in dominance order. Throws WeightMismatch on unequal weights.
bool dominance_leq(const Partition& mu, const Partition& lambda);

/// z_lambda = prod_i i^{m_i} m_i!
mpz_class z_of(const Partition& lambda);

}  // namespace jackpoly
