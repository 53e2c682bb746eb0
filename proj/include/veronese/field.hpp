#pragma once

// Exact scalars over the rationals or a prime field.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace veronese {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class FieldMismatchError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

class Scalar;

/// The field all scalars of one computation live in: ℚ or 𝔽_p.
class Field {
 public:
  enum class Kind { Rationals, PrimeField };

  static constexpr std::uint64_t kDefaultPrime = 65521;

  Field() = default;  // ℚ

  static Field rationals() { return Field{}; }
  /// Throws Error unless p is a prime below 2^32.
  static Field prime(std::uint64_t p);
  static Field default_prime() { return prime(kDefaultPrime); }

  /// Accepts "Q" or "Fp:<p>" (also "Fp" for the default prime).
  static Field parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rationals; }
  /// 0 for ℚ.
  std::uint64_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_mpz(const mpz_class& v) const;
  /// "a", "-a" or "a/b" for ℚ; an integer (reduced) for 𝔽_p.
  Scalar parse_scalar(std::string_view text) const;

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;

  Field(Kind k, std::uint64_t p) : kind_(k), p_(p) {}

  Kind kind_ = Kind::Rationals;
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Residue class modulo a prime p < 2^32.
struct Residue {
  std::uint64_t value = 0;
  std::uint64_t modulus = 0;

  friend bool operator==(const Residue&, const Residue&) = default;
};

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p);

/// An exact field element. Mixing elements of different fields throws
/// FieldMismatchError. Rationals are kept canonical (lowest terms, positive
/// denominator), residues in [0, p).
class Scalar {
 public:
  Scalar() : rep_(mpq_class(0)) {}
  explicit Scalar(mpq_class q) : rep_(std::move(q)) { std::get<mpq_class>(rep_).canonicalize(); }
  explicit Scalar(Residue r) : rep_(r) {}

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  /// Only valid over ℚ.
  const mpq_class& rational() const;
  /// Only valid over 𝔽_p.
  std::uint64_t residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Throws DivisionByZeroError on zero.
  Scalar inverse() const;
  Scalar pow(unsigned e) const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "a/b" (or "a") over ℚ, decimal residue over 𝔽_p.
  std::string to_string() const;

 private:
  std::variant<mpq_class, Residue> rep_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);
std::ostream& operator<<(std::ostream& os, const Field& f);

}  // namespace veronese
