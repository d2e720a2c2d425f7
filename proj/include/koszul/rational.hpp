#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>

namespace koszul {

// Exact rational in lowest terms with positive denominator. Values whose
// numerator and denominator fit in 64 bits stay inline; anything larger is
// promoted to an immutable shared GMP rational.
class Rational {
 public:
  Rational() = default;
  Rational(int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int64_t n, int64_t d);
  explicit Rational(const mpq_class& q);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  bool is_small() const { return !big_; }
  int sign() const;

  // Only meaningful when is_small().
  int64_t small_num() const { return num_; }
  int64_t small_den() const { return den_; }

  mpq_class to_mpq() const;
  std::string str() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator<(const Rational& a, const Rational& b);

  static Rational parse(const std::string& s);

 private:
  static Rational from_wide(__int128 n, __int128 d);

  int64_t num_ = 0;
  int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

}  // namespace koszul
