#include "jackpoly/alpha_rational.hpp"

#include <utility>

#include "jackpoly/errors.hpp"

namespace jackpoly {

AlphaRational::AlphaRational(AlphaPoly num) : num_(std::move(num)), den_(AlphaPoly::constant(1)) {}

AlphaRational::AlphaRational(AlphaPoly num, AlphaPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("AlphaRational with zero denominator");
  normalize();
}

AlphaRational AlphaRational::from_integer(const mpz_class& c) { return AlphaRational(AlphaPoly::constant(c)); }

AlphaRational AlphaRational::from_rational(const mpq_class& q) {
  return AlphaRational(AlphaPoly::constant(q.get_num()), AlphaPoly::constant(q.get_den()));
}

void AlphaRational::normalize() {
  if (num_.is_zero()) {
    den_ = AlphaPoly::constant(1);
    return;
  }
  if (den_.is_one()) return;
  const AlphaPoly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = divexact(num_, g);
    den_ = divexact(den_, g);
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

mpq_class AlphaRational::evaluate(const mpq_class& alpha) const {
  const mpq_class d = den_.evaluate(alpha);
  if (d == 0) throw DivisionByZero("denominator vanishes at the requested alpha");
  return num_.evaluate(alpha) / d;
}

AlphaRational AlphaRational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(alpha)");
  AlphaPoly n = den_;
  AlphaPoly d = num_;
  if (d.leading() < 0) {
    n = -n;
    d = -d;
  }
  return AlphaRational(std::move(n), std::move(d), Canonical{});
}

AlphaRational AlphaRational::operator-() const { return AlphaRational(-num_, den_, Canonical{}); }

AlphaRational& AlphaRational::operator+=(const AlphaRational& rhs) {
  if (den_.is_one() && rhs.den_.is_one()) {
    num_ += rhs.num_;
    return *this;
  }
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
  }
  normalize();
  return *this;
}

AlphaRational& AlphaRational::operator-=(const AlphaRational& rhs) { return *this += -rhs; }

AlphaRational& AlphaRational::operator*=(const AlphaRational& rhs) {
  if (den_.is_one() && rhs.den_.is_one()) {
    num_ = num_ * rhs.num_;
    return *this;
  }
  num_ = num_ * rhs.num_;
  den_ = den_ * rhs.den_;
  normalize();
  return *this;
}

}  // namespace jackpoly
