#include "framekit/field.hpp"

#include <ostream>

#include "framekit/error.hpp"

namespace framekit {

namespace {

void require_same_field(const Scalar& a, const Scalar& b) {
  if (!(a.field() == b.field())) throw FieldMismatch();
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // Extended Euclid on (a, p); p prime and a != 0 so gcd is 1.
  std::int64_t r0 = p, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t0 < 0) t0 += p;
  return static_cast<std::uint32_t>(t0);
}

}  // namespace

bool is_prime_u32(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::int64_t p) {
  if (p < 2 || p >= (std::int64_t{1} << 31)) {
    throw DomainError("modulus " + std::to_string(p) +
                      " outside [2, 2^31)");
  }
  if (!is_prime_u32(static_cast<std::uint64_t>(p))) {
    throw DomainError("modulus " + std::to_string(p) + " is not prime");
  }
  return FieldSpec(Kind::kPrime, static_cast<std::uint32_t>(p));
}

std::string FieldSpec::to_string() const {
  return is_prime() ? "gf " + std::to_string(modulus_) : "q";
}

Scalar Scalar::zero(const FieldSpec& field) { return from_int(field, 0); }
Scalar Scalar::one(const FieldSpec& field) { return from_int(field, 1); }

Scalar Scalar::from_int(const FieldSpec& field, std::int64_t value) {
  if (field.is_prime()) {
    std::int64_t r = value % static_cast<std::int64_t>(field.modulus());
    if (r < 0) r += field.modulus();
    return Scalar(field, static_cast<std::uint32_t>(r));
  }
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return Scalar(field, mpq_class(mpz_class(static_cast<long>(value))));
}

Scalar Scalar::from_fraction(const FieldSpec& field, const mpz_class& num,
                             const mpz_class& den) {
  if (field.is_prime()) {
    const mpz_class p = field.modulus();
    mpz_class n = num % p;
    mpz_class d = den % p;
    if (n < 0) n += p;
    if (d < 0) d += p;
    if (d == 0) throw DomainError("denominator is zero in GF(p)");
    const Scalar sn(field, static_cast<std::uint32_t>(n.get_ui()));
    const Scalar sd(field, static_cast<std::uint32_t>(d.get_ui()));
    return sn / sd;
  }
  if (den == 0) throw DomainError("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(field, std::move(q));
}

Scalar Scalar::parse(std::string_view text, const FieldSpec& field) {
  const std::string original(text);
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  if (!all_digits(num_text)) {
    throw ParseError("malformed scalar '" + original + "'");
  }
  if (slash != std::string_view::npos) {
    if (field.is_prime()) {
      throw ParseError("fraction syntax '" + original +
                       "' is not allowed in " + field.to_string());
    }
    const std::string_view den_text = body.substr(slash + 1);
    if (!all_digits(den_text)) {
      throw ParseError("malformed scalar '" + original + "'");
    }
    mpz_class num(std::string(num_text), 10);
    const mpz_class den(std::string(den_text), 10);
    if (den == 0) throw ParseError("zero denominator in '" + original + "'");
    if (negative) num = -num;
    return from_fraction(field, num, den);
  }
  if (field.is_prime()) {
    std::uint64_t r = 0;
    for (char c : num_text) {
      r = (r * 10 + static_cast<std::uint64_t>(c - '0')) % field.modulus();
    }
    if (negative && r != 0) r = field.modulus() - r;
    return Scalar(field, static_cast<std::uint32_t>(r));
  }
  mpz_class num(std::string(num_text), 10);
  if (negative) num = -num;
  return Scalar(field, mpq_class(num));
}

bool Scalar::is_zero() const {
  if (field_.is_prime()) return residue() == 0;
  return sgn(rational()) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_prime()) return residue() == 1;
  return rational() == 1;
}

std::string Scalar::to_string() const {
  if (field_.is_prime()) return std::to_string(residue());
  return rational().get_str();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("zero has no inverse");
  if (field_.is_prime()) {
    return Scalar(field_, mod_inverse(residue(), field_.modulus()));
  }
  return Scalar(field_, mpq_class(1) / rational());
}

Scalar Scalar::pow(std::uint64_t exponent) const {
  Scalar result = one(field_);
  Scalar base = *this;
  while (exponent != 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

Scalar Scalar::operator-() const {
  if (field_.is_prime()) {
    const std::uint32_t r = residue();
    return Scalar(field_, r == 0 ? 0u : field_.modulus() - r);
  }
  return Scalar(field_, mpq_class(-rational()));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  if (a.field_.is_prime()) {
    const std::uint64_t s = std::uint64_t{a.residue()} + b.residue();
    return Scalar(a.field_,
                  static_cast<std::uint32_t>(s % a.field_.modulus()));
  }
  return Scalar(a.field_, mpq_class(a.rational() + b.rational()));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  if (a.field_.is_prime()) {
    const std::uint64_t s = std::uint64_t{a.residue()} * b.residue();
    return Scalar(a.field_,
                  static_cast<std::uint32_t>(s % a.field_.modulus()));
  }
  return Scalar(a.field_, mpq_class(a.rational() * b.rational()));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

std::ostream& operator<<(std::ostream& os, const FieldSpec& f) {
  return os << f.to_string();
}

}  // namespace framekit
