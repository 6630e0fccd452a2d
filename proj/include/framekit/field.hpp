#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace framekit {

// The scalar field: a prime field GF(p) with 2 <= p < 2^31, or the rationals.
class FieldSpec {
 public:
  enum class Kind { kPrime, kRationals };

  // Throws DomainError unless p is a prime in [2, 2^31).
  static FieldSpec prime(std::int64_t p);
  static FieldSpec rationals() { return FieldSpec(Kind::kRationals, 0); }

  Kind kind() const { return kind_; }
  bool is_prime() const { return kind_ == Kind::kPrime; }
  // 0 for the rationals.
  std::uint32_t modulus() const { return modulus_; }

  // "gf <p>" or "q", as in the matrix file header.
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint32_t modulus)
      : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  std::uint32_t modulus_;
};

bool is_prime_u32(std::uint64_t n);

// An exact element of a FieldSpec, always in canonical form: a residue in
// [0, p) for GF(p), a reduced fraction with positive denominator for Q.
class Scalar {
 public:
  static Scalar zero(const FieldSpec& field);
  static Scalar one(const FieldSpec& field);
  static Scalar from_int(const FieldSpec& field, std::int64_t value);
  // Throws DomainError on a zero denominator (or one divisible by p).
  static Scalar from_fraction(const FieldSpec& field, const mpz_class& num,
                              const mpz_class& den);

  // Accepts [+-]?digits, and for Q also [+-]?digits/digits.
  static Scalar parse(std::string_view text, const FieldSpec& field);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  // GF(p) only.
  std::uint32_t residue() const { return std::get<std::uint32_t>(value_); }
  // Q only.
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  // Canonical text: "3", "-1/2". parse(to_string()) round-trips.
  std::string to_string() const;

  // Throws DomainError for zero.
  Scalar inverse() const;
  Scalar pow(std::uint64_t exponent) const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  Scalar(const FieldSpec& field, std::uint32_t residue)
      : field_(field), value_(residue) {}
  Scalar(const FieldSpec& field, mpq_class value)
      : field_(field), value_(std::move(value)) {}

  FieldSpec field_;
  std::variant<std::uint32_t, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);
std::ostream& operator<<(std::ostream& os, const FieldSpec& f);

}  // namespace framekit
