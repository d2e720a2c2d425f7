#include "koszul/field.hpp"

#include <charconv>
#include <stdexcept>

namespace koszul {

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d <= n / d; ++d)
    if (n % d == 0) return false;
  return true;
}

int64_t mod_inverse(int64_t a, int64_t p) {
  int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  if (new_r < 0) new_r += p;
  while (new_r != 0) {
    int64_t q = r / new_r;
    int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("element not invertible modulo " + std::to_string(p));
  return t < 0 ? t + p : t;
}

Field Field::prime(int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (p >= (int64_t{1} << 62)) throw std::invalid_argument("prime too large");
  return Field(p);
}

Field Field::parse(std::string_view spec) {
  if (spec == "q" || spec == "Q" || spec == "rational" || spec == "rationals") return rationals();
  std::string_view digits;
  if (spec.substr(0, 2) == "p:")
    digits = spec.substr(2);
  else if (spec.substr(0, 3) == "GF(" && spec.back() == ')')
    digits = spec.substr(3, spec.size() - 4);
  else
    throw std::invalid_argument("unknown field '" + std::string(spec) + "' (expected q or p:K)");
  int64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw std::invalid_argument("bad characteristic in field '" + std::string(spec) + "'");
  return prime(p);
}

Scalar Field::from_int(int64_t v) const {
  if (p_ == 0) return Scalar(v);
  int64_t r = v % p_;
  return Scalar(r < 0 ? r + p_ : r);
}

Scalar Field::from_rational(const Rational& q) const {
  if (p_ == 0) return q;
  if (q.is_small()) return div(from_int(q.small_num()), from_int(q.small_den()));
  mpq_class v = q.to_mpq();
  mpz_class pz(static_cast<long>(p_));
  mpz_class n = v.get_num() % pz, d = v.get_den() % pz;
  return div(from_int(n.get_si()), from_int(d.get_si()));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a + b;
  int64_t s = a.small_num() + b.small_num();
  return Scalar(s >= p_ ? s - p_ : s);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a - b;
  int64_t s = a.small_num() - b.small_num();
  return Scalar(s < 0 ? s + p_ : s);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a * b;
  return Scalar(static_cast<int64_t>(static_cast<__int128>(a.small_num()) * b.small_num() % p_));
}

Scalar Field::neg(const Scalar& a) const {
  if (p_ == 0) return -a;
  return a.is_zero() ? a : Scalar(p_ - a.small_num());
}

Scalar Field::inv(const Scalar& a) const {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  if (p_ == 0) return Scalar(1) / a;
  return Scalar(mod_inverse(a.small_num(), p_));
}

std::string Field::name() const { return p_ == 0 ? "Q" : "GF(" + std::to_string(p_) + ")"; }

std::string Field::spec_string() const { return p_ == 0 ? "q" : "p:" + std::to_string(p_); }

}  // namespace koszul
