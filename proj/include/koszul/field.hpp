#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "koszul/rational.hpp"

namespace koszul {

using Scalar = Rational;

// The rationals or a prime field GF(p). Elements of GF(p) are stored as
// integers in [0, p).
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(int64_t p);
  // Accepts "q", "Q", "p:K" or "GF(K)".
  static Field parse(std::string_view spec);

  bool is_rational() const { return p_ == 0; }
  int64_t characteristic() const { return p_; }

  Scalar zero() const { return Scalar(); }
  Scalar one() const { return Scalar(1); }
  Scalar from_int(int64_t v) const;
  // Image of a rational number; throws if the denominator vanishes mod p.
  Scalar from_rational(const Rational& q) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  std::string name() const;
  std::string spec_string() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

 private:
  explicit Field(int64_t p) : p_(p) {}
  int64_t p_ = 0;
};

bool is_prime(int64_t n);
int64_t mod_inverse(int64_t a, int64_t p);

}  // namespace koszul
