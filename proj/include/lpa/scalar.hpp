#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lpa {

// Run-level coefficient field: the rationals (p == 0) or GF(p) for prime p.
struct Field {
  std::uint32_t p = 0;

  bool operator==(const Field&) const = default;
  bool is_rational() const { return p == 0; }
  std::string str() const { return p == 0 ? "Q" : "GF(" + std::to_string(p) + ")"; }

  static Field rationals() { return Field{0}; }
  static Field gf(std::uint32_t p);
};

// Exact field element. Rational values use arbitrary precision; GF(p) values
// are stored as the canonical representative in [0, p).
class Scalar {
 public:
  using Rational = boost::multiprecision::cpp_rational;

  Scalar() = default;
  Scalar(Field f, long n, long d = 1);
  Scalar(Field f, Rational v);

  static Scalar zero(Field f) { return Scalar(f, 0); }
  static Scalar one(Field f) { return Scalar(f, 1); }

  Field field() const { return field_; }
  bool is_zero() const { return v_ == 0; }
  const Rational& value() const { return v_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;  // throws on zero

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const { return field_ == o.field_ && v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void canon();
  void check(const Scalar& o) const {
    if (field_ != o.field_) throw std::invalid_argument("scalar field mismatch");
  }

  Field field_{};
  Rational v_ = 0;
};

}  // namespace lpa
