#include "veronese/field.hpp"

#include <charconv>
#include <ostream>

namespace veronese {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull}) {
    if (n % q == 0) return n == q;
  }
  for (std::uint64_t q = 11; q * q <= n; q += 2) {
    if (n % q == 0) return false;
  }
  return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw DivisionByZeroError("inverse of zero residue");
  return mod_pow(a, p - 2, p);
}

Field Field::prime(std::uint64_t p) {
  if (p >= (1ull << 32)) throw Error("prime field characteristic must be below 2^32");
  if (!is_prime(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
  return Field{Kind::PrimeField, p};
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "QQ") return rationals();
  if (text == "Fp") return default_prime();
  if (text.starts_with("Fp:")) {
    auto digits = text.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw Error("malformed field characteristic: " + std::string(text));
    }
    return prime(p);
  }
  throw Error("unknown field '" + std::string(text) + "' (expected Q or Fp:<p>)");
}

std::string Field::to_string() const {
  return is_rational() ? std::string("Q") : "Fp:" + std::to_string(p_);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  if (is_rational()) return Scalar(mpq_class(static_cast<long>(v)));
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += static_cast<long long>(p_);
  return Scalar(Residue{static_cast<std::uint64_t>(r), p_});
}

Scalar Field::from_mpz(const mpz_class& v) const {
  if (is_rational()) return Scalar(mpq_class(v));
  mpz_class r = v % static_cast<unsigned long>(p_);
  if (r < 0) r += static_cast<unsigned long>(p_);
  return Scalar(Residue{r.get_ui(), p_});
}

Scalar Field::parse_scalar(std::string_view text) const {
  std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw Error("malformed scalar '" + s + "'");
  if (q.get_den() == 0) throw DivisionByZeroError("zero denominator in scalar '" + s + "'");
  q.canonicalize();
  if (is_rational()) return Scalar(std::move(q));
  Scalar num = from_mpz(q.get_num());
  Scalar den = from_mpz(q.get_den());
  return num / den;
}

Field Scalar::field() const {
  if (auto r = std::get_if<Residue>(&rep_)) return Field{Field::Kind::PrimeField, r->modulus};
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (auto r = std::get_if<Residue>(&rep_)) return r->value == 0;
  return sgn(std::get<mpq_class>(rep_)) == 0;
}

bool Scalar::is_one() const {
  if (auto r = std::get_if<Residue>(&rep_)) return r->value == 1;
  return std::get<mpq_class>(rep_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (auto q = std::get_if<mpq_class>(&rep_)) return *q;
  throw FieldMismatchError("scalar is not rational");
}

std::uint64_t Scalar::residue() const {
  if (auto r = std::get_if<Residue>(&rep_)) return r->value;
  throw FieldMismatchError("scalar is not a prime-field residue");
}

namespace {

// Applies fn to matching representations; throws on a field mismatch.
template <class Fn>
void combine(std::variant<mpq_class, Residue>& lhs, const std::variant<mpq_class, Residue>& rhs, Fn&& fn) {
  if (lhs.index() != rhs.index()) throw FieldMismatchError("scalars from different fields");
  if (auto a = std::get_if<Residue>(&lhs)) {
    const auto& b = std::get<Residue>(rhs);
    if (a->modulus != b.modulus) throw FieldMismatchError("residues modulo different primes");
    fn(*a, b);
  } else {
    fn(std::get<mpq_class>(lhs), std::get<mpq_class>(rhs));
  }
}

}  // namespace

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (auto r = std::get_if<Residue>(&out.rep_)) {
    r->value = r->value == 0 ? 0 : r->modulus - r->value;
  } else {
    auto& q = std::get<mpq_class>(out.rep_);
    q = -q;
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  combine(rep_, o.rep_, [](auto& a, const auto& b) {
    if constexpr (std::is_same_v<std::decay_t<decltype(a)>, Residue>) {
      a.value = (a.value + b.value) % a.modulus;
    } else {
      a += b;
    }
  });
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  combine(rep_, o.rep_, [](auto& a, const auto& b) {
    if constexpr (std::is_same_v<std::decay_t<decltype(a)>, Residue>) {
      a.value = (a.value + a.modulus - b.value) % a.modulus;
    } else {
      a -= b;
    }
  });
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  combine(rep_, o.rep_, [](auto& a, const auto& b) {
    if constexpr (std::is_same_v<std::decay_t<decltype(a)>, Residue>) {
      a.value = a.value * b.value % a.modulus;
    } else {
      a *= b;
    }
  });
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZeroError("division by zero scalar");
  combine(rep_, o.rep_, [](auto& a, const auto& b) {
    if constexpr (std::is_same_v<std::decay_t<decltype(a)>, Residue>) {
      a.value = a.value * mod_inverse(b.value, a.modulus) % a.modulus;
    } else {
      a /= b;
    }
  });
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero scalar");
  if (auto r = std::get_if<Residue>(&rep_)) return Scalar(Residue{mod_inverse(r->value, r->modulus), r->modulus});
  mpq_class q = 1 / std::get<mpq_class>(rep_);
  return Scalar(std::move(q));
}

Scalar Scalar::pow(unsigned e) const {
  Scalar result = field().one();
  Scalar base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.rep_.index() != b.rep_.index()) throw FieldMismatchError("comparing scalars from different fields");
  if (auto r = std::get_if<Residue>(&a.rep_)) {
    const auto& s = std::get<Residue>(b.rep_);
    if (r->modulus != s.modulus) throw FieldMismatchError("comparing residues modulo different primes");
    return r->value == s.value;
  }
  return std::get<mpq_class>(a.rep_) == std::get<mpq_class>(b.rep_);
}

std::string Scalar::to_string() const {
  if (auto r = std::get_if<Residue>(&rep_)) return std::to_string(r->value);
  return std::get<mpq_class>(rep_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }
std::ostream& operator<<(std::ostream& os, const Field& f) { return os << f.to_string(); }

}  // namespace veronese
