#include "koszul/rational.hpp"

#include <stdexcept>

namespace koszul {

namespace {

__int128 wide_gcd(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(__int128 v) {
  return v >= static_cast<__int128>(INT64_MIN) && v <= static_cast<__int128>(INT64_MAX);
}

mpz_class mpz_from_wide(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(int64_t n, int64_t d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(n, d);
}

Rational::Rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  if (c.get_num().fits_slong_p() && c.get_den().fits_slong_p()) {
    num_ = c.get_num().get_si();
    den_ = c.get_den().get_si();
  } else {
    big_ = std::make_shared<const mpq_class>(std::move(c));
  }
}

Rational Rational::from_wide(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = wide_gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rational r;
  if (fits64(n) && fits64(d)) {
    r.num_ = static_cast<int64_t>(n);
    r.den_ = static_cast<int64_t>(d);
  } else {
    mpq_class q(mpz_from_wide(n), mpz_from_wide(d));
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
  }
  return r;
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q{mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_))};
  return q;
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  if (num_ == INT64_MIN) return from_wide(-static_cast<__int128>(num_), den_);
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
  if (a.den_ == 1 && b.den_ == 1) {
    int64_t s;
    if (!__builtin_add_overflow(a.num_, b.num_, &s)) return Rational(s);
  }
  __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
  __int128 d = static_cast<__int128>(a.den_) * b.den_;
  return Rational::from_wide(n, d);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return Rational();
  if (a.big_ || b.big_) return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
  if (a.den_ == 1 && b.den_ == 1) {
    int64_t p;
    if (!__builtin_mul_overflow(a.num_, b.num_, &p)) return Rational(p);
  }
  __int128 n = static_cast<__int128>(a.num_) * b.num_;
  __int128 d = static_cast<__int128>(a.den_) * b.den_;
  return Rational::from_wide(n, d);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("rational division by zero");
  if (a.big_ || b.big_) return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
  __int128 n = static_cast<__int128>(a.num_) * b.den_;
  __int128 d = static_cast<__int128>(a.den_) * b.num_;
  return Rational::from_wide(n, d);
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  if (a.big_ || b.big_) return false;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

bool operator<(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return a.to_mpq() < b.to_mpq();
  return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

Rational Rational::parse(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational number: " + s);
  return Rational(q);
}

}  // namespace koszul
