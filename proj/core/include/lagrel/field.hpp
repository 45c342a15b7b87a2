#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "lagrel/error.hpp"

namespace lagrel {

using BigInt = boost::multiprecision::cpp_int;

enum class FieldKind { prime, rational_function };

// Value type naming a coefficient field: F_p for prime p, or Q(x).
class Field {
 public:
  static Field fp(std::uint64_t p);
  static Field qx();

  FieldKind kind() const { return kind_; }
  bool is_prime() const { return kind_ == FieldKind::prime; }
  // Prime modulus; only meaningful for prime fields.
  std::uint64_t modulus() const;
  std::uint64_t characteristic() const {
    return kind_ == FieldKind::prime ? p_ : 0;
  }

  bool operator==(const Field& o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }
  bool operator!=(const Field& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Field(FieldKind kind, std::uint64_t p) : kind_(kind), p_(p) {}
  FieldKind kind_;
  std::uint64_t p_;
};

// Dense integer polynomial, coefficients stored low degree first with no
// trailing zeros; the zero polynomial has an empty coefficient vector.
class Poly {
 public:
  Poly() = default;
  explicit Poly(BigInt constant);
  static Poly x();
  static Poly from_coeffs(std::vector<BigInt> low_to_high);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  BigInt coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : BigInt(0);
  }
  const BigInt& lead() const { return c_.back(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }

  // Greatest common divisor over the integers, contents included, with a
  // positive leading coefficient (primitive pseudo-remainder sequence).
  static Poly gcd(const Poly& a, const Poly& b);
  // Quotient of an exact division; the remainder must vanish.
  Poly divexact(const Poly& g) const;

  BigInt content() const;
  Poly primitive_part() const;
  Poly with_positive_lead() const;

  std::string str() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

// Element of a named field.  Prime fields keep a reduced residue; Q(x)
// keeps a reduced fraction num/den with coprime parts and a positive
// leading denominator coefficient.
class Scalar {
 public:
  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(const Field& f, long long v);
  static Scalar from_bigint(const Field& f, const BigInt& v);
  static Scalar from_fraction(const Field& f, Poly num, Poly den);
  static Scalar variable(const Field& f);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;
  Scalar pow(long long e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Residue in [0, p); prime fields only.
  std::uint64_t residue() const;
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  std::string str() const;

 private:
  explicit Scalar(const Field& f) : field_(f) {}
  void canonicalize();
  void check_same_field(const Scalar& o) const;

  Field field_;
  std::uint64_t r_ = 0;
  Poly num_, den_;
};

// Parses an arithmetic expression over the field: integer literals, the
// indeterminate x (rational-function fields only), + - * / ^ and parens.
// Positions in errors are 1-based columns into the given string.
Scalar parse_scalar(const Field& f, const std::string& text);

}  // namespace lagrel
