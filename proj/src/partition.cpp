#include "jackpoly/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <utility>

#include "jackpoly/errors.hpp"

namespace jackpoly {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t k = 0; k + 1 < parts_.size(); ++k) {
    if (parts_[k] < parts_[k + 1]) throw InvalidPartition("parts must be weakly decreasing: " + to_string());
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0U);
}

Partition Partition::ones(unsigned n) { return Partition(std::vector<unsigned>(n, 1)); }

Partition Partition::parse(std::string_view text) {
  if (text.empty() || text == "0") return {};
  std::vector<unsigned> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    unsigned v = 0;
    const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size() || v == 0) {
      throw InvalidPartition("malformed partition \"" + std::string(text) + "\": parts must be positive integers");
    }
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

unsigned Partition::multiplicity(unsigned i) const noexcept {
  return static_cast<unsigned>(std::count(parts_.begin(), parts_.end(), i));
}

mpz_class Partition::multiplicity_factorial() const {
  mpz_class r = 1;
  std::size_t k = 0;
  while (k < parts_.size()) {
    std::size_t run = 1;
    while (k + run < parts_.size() && parts_[k + run] == parts_[k]) ++run;
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), run);
    r *= f;
    k += run;
  }
  return r;
}

Partition Partition::conjugate() const {
  std::vector<unsigned> c(parts_.empty() ? 0 : parts_.front(), 0);
  for (unsigned p : parts_) {
    for (unsigned k = 0; k < p; ++k) ++c[k];
  }
  return Partition(std::move(c));
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(parts_[k]);
  }
  return s;
}

namespace {

void enumerate(unsigned remaining, unsigned max_part, std::size_t slots, std::vector<unsigned>& prefix,
               std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (slots == 0) return;
  for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    enumerate(remaining - p, p, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(unsigned n, std::size_t max_length) {
  std::vector<Partition> out;
  std::vector<unsigned> prefix;
  enumerate(n, n, max_length, prefix, out);
  return out;
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.weight() != lambda.weight()) {
    throw WeightMismatch("dominance order compares partitions of equal weight, got " + mu.to_string() + " and " +
                         lambda.to_string());
  }
  const std::size_t len = std::max(mu.length(), lambda.length());
  unsigned sm = 0;
  unsigned sl = 0;
  for (std::size_t k = 0; k < len; ++k) {
    sm += mu.part(k);
    sl += lambda.part(k);
    if (sm > sl) return false;
  }
  return true;
}

mpz_class z_of(const Partition& lambda) {
  mpz_class z = lambda.multiplicity_factorial();
  for (unsigned p : lambda.parts()) z *= p;
  return z;
}

}  // namespace jackpoly
