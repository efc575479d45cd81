#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace weakcp {

/// Error type for contract violations: malformed scalars, mismatched
/// spaces or fields, division by zero, singular matrices where an inverse
/// is required. Verification *verdicts* are never exceptions; they are
/// reported as data.
class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Ground field: the rationals or Z/p for a prime p.
///
/// A Field is a small value object carried by every Scalar; mixing scalars
/// from different fields is an error.
class Field {
public:
  static Field rationals() { return Field(0); }

  /// Prime field Z/p. Rejects p that is not prime.
  static Field prime(unsigned long p);

  bool is_rationals() const { return p_ == 0; }
  bool is_prime() const { return p_ != 0; }

  /// 0 for the rationals, p for Z/p.
  unsigned long modulus() const { return p_; }

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

  /// "rational" or "prime <p>", as used in instance files.
  std::string description() const;

private:
  explicit Field(unsigned long p) : p_(p) {}
  unsigned long p_;
};

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator; prime-field elements are residues in [0, p) with
/// denominator 1. Equality is therefore plain coordinate equality.
class Scalar {
public:
  /// Zero over the rationals. Prefer Scalar::zero(field) in generic code.
  Scalar() : field_(Field::rationals()), v_(0) {}

  Scalar(const Field& field, long value);

  static Scalar zero(const Field& f) { return Scalar(f, 0); }
  static Scalar one(const Field& f) { return Scalar(f, 1); }

  /// Wraps an arbitrary mpq value, canonicalizing (and reducing mod p for
  /// prime fields). Prime fields reject non-integral values.
  static Scalar from_mpq(const Field& f, mpq_class v);

  /// Parses "n" or "n/d" (rationals) or a bare integer (prime fields).
  /// Anything else -- including decimal notation -- is an error.
  static Scalar parse(const Field& f, const std::string& text);

  const Field& field() const { return field_; }
  const mpq_class& value() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on zero divisor
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const { return one(field_) / *this; }

  bool operator==(const Scalar& o) const {
    return field_ == o.field_ && v_ == o.v_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical text form: "n" or "n/d". Round-trips through parse().
  std::string str() const;

private:
  Scalar(Field f, mpq_class v) : field_(f), v_(std::move(v)) {}
  void reduce();
  static void check_same_field(const Scalar& a, const Scalar& b);

  Field field_;
  mpq_class v_;
};

}  // namespace weakcp
