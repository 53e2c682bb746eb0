#pragma once

// First-order jets: a value together with its exact partial derivatives.

#include <cstddef>
#include <vector>

#include "veronese/field.hpp"

namespace veronese {

class JetScalar {
 public:
  JetScalar(Scalar value, std::size_t num_vars);
  /// The coordinate function x_index evaluated at `value`.
  static JetScalar variable(Scalar value, std::size_t index, std::size_t num_vars);
  static JetScalar constant(Scalar value, std::size_t num_vars) { return JetScalar(std::move(value), num_vars); }

  const Scalar& value() const { return value_; }
  const std::vector<Scalar>& partials() const { return partials_; }
  std::size_t num_vars() const { return partials_.size(); }

  JetScalar& operator+=(const JetScalar& o);
  JetScalar& operator-=(const JetScalar& o);
  JetScalar& operator*=(const JetScalar& o);
  /// Quotient rule; throws DivisionByZeroError if o.value() is zero.
  JetScalar& operator/=(const JetScalar& o);

  friend JetScalar operator+(JetScalar a, const JetScalar& b) { return a += b; }
  friend JetScalar operator-(JetScalar a, const JetScalar& b) { return a -= b; }
  friend JetScalar operator*(JetScalar a, const JetScalar& b) { return a *= b; }
  friend JetScalar operator/(JetScalar a, const JetScalar& b) { return a /= b; }

 private:
  void check_compatible(const JetScalar& o) const;

  Scalar value_;
  std::vector<Scalar> partials_;
};

}  // namespace veronese
