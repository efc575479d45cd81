#include "weakcp/scalar.hpp"

#include <cctype>

namespace weakcp {

Field Field::prime(unsigned long p) {
  if (p < 2) throw error("field modulus must be a prime, got " + std::to_string(p));
  mpz_class z(p);
  if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
    throw error("field modulus " + std::to_string(p) + " is not prime");
  return Field(p);
}

std::string Field::description() const {
  return is_rationals() ? "rational" : "prime " + std::to_string(p_);
}

Scalar::Scalar(const Field& field, long value) : field_(field), v_(value) {
  reduce();
}

Scalar Scalar::from_mpq(const Field& f, mpq_class v) {
  v.canonicalize();
  if (f.is_prime() && v.get_den() != 1)
    throw error("non-integral value " + v.get_str() + " in prime field");
  Scalar s(f, std::move(v));
  s.reduce();
  return s;
}

void Scalar::reduce() {
  if (field_.is_rationals()) {
    v_.canonicalize();
    return;
  }
  mpz_class p(field_.modulus());
  mpz_class n = v_.get_num() % p;
  if (n < 0) n += p;
  v_ = mpq_class(n);
}

void Scalar::check_same_field(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_)
    throw error("scalar field mismatch: " + a.field_.description() + " vs " +
                b.field_.description());
}

Scalar Scalar::operator-() const {
  Scalar r(field_, mpq_class(-v_));
  r.reduce();
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(*this, o);
  Scalar r(field_, mpq_class(v_ + o.v_));
  if (field_.is_prime()) r.reduce();
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(*this, o);
  Scalar r(field_, mpq_class(v_ - o.v_));
  if (field_.is_prime()) r.reduce();
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(*this, o);
  if (is_zero() || o.is_zero()) return zero(field_);
  Scalar r(field_, mpq_class(v_ * o.v_));
  if (field_.is_prime()) r.reduce();
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_field(*this, o);
  if (o.is_zero()) throw error("division by zero");
  if (field_.is_rationals()) return Scalar(field_, mpq_class(v_ / o.v_));
  mpz_class p(field_.modulus());
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), o.v_.get_num().get_mpz_t(), p.get_mpz_t()) == 0)
    throw error("division by zero");  // only 0 is non-invertible mod a prime
  Scalar r(field_, mpq_class(v_.get_num() * inv));
  r.reduce();
  return r;
}

std::string Scalar::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  auto bad = [&]() -> error {
    return error("malformed scalar '" + text + "' (expected integer" +
                 std::string(f.is_rationals() ? " or fraction n/d" : "") + ")");
  };
  if (text.empty()) throw bad();
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_int(text)) throw bad();
    return from_mpq(f, mpq_class(mpz_class(text)));
  }
  if (f.is_prime()) throw bad();  // prime-field scalars are bare integers
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-') throw bad();
  mpz_class d(den);
  if (d == 0) throw error("malformed scalar '" + text + "': zero denominator");
  return from_mpq(f, mpq_class(mpz_class(num), d));
}

}  // namespace weakcp
