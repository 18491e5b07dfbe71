#include "lpa/scalar.hpp"

namespace lpa {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using Int = boost::multiprecision::cpp_int;

Int mod_inverse(Int a, Int p) {
  // extended Euclid
  Int t = 0, new_t = 1, r = p, new_r = a % p;
  if (new_r < 0) new_r += p;
  while (new_r != 0) {
    Int q = r / new_r;
    Int tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("not invertible mod p");
  if (t < 0) t += p;
  return t;
}

}  // namespace

Field Field::gf(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("GF(p) requires prime p");
  return Field{p};
}

Scalar::Scalar(Field f, long n, long d) : field_(f), v_(Rational(n, d)) {
  if (d == 0) throw std::invalid_argument("zero denominator");
  canon();
}

Scalar::Scalar(Field f, Rational v) : field_(f), v_(std::move(v)) { canon(); }

void Scalar::canon() {
  if (field_.p == 0) return;
  Int p = field_.p;
  Int num = numerator(v_) % p;
  if (num < 0) num += p;
  Int den = denominator(v_) % p;
  if (den < 0) den += p;
  if (den == 0) throw std::domain_error("denominator vanishes in GF(p)");
  v_ = Rational(num * mod_inverse(den, p) % p);
}

Scalar Scalar::operator+(const Scalar& o) const {
  check(o);
  return Scalar(field_, v_ + o.v_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  check(o);
  return Scalar(field_, v_ - o.v_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  check(o);
  return Scalar(field_, v_ * o.v_);
}

Scalar Scalar::operator-() const { return Scalar(field_, -v_); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (field_.p == 0) return Scalar(field_, 1 / v_);
  return Scalar(field_, Rational(mod_inverse(numerator(v_), Int(field_.p))));
}

std::string Scalar::str() const {
  if (denominator(v_) == 1) return numerator(v_).str();
  return numerator(v_).str() + "/" + denominator(v_).str();
}

}  // namespace lpa
