#include "veronese/jet.hpp"

namespace veronese {

JetScalar::JetScalar(Scalar value, std::size_t num_vars)
    : value_(std::move(value)), partials_(num_vars, value_.field().zero()) {}

JetScalar JetScalar::variable(Scalar value, std::size_t index, std::size_t num_vars) {
  if (index >= num_vars) throw ShapeError("jet variable index out of range");
  JetScalar j(std::move(value), num_vars);
  j.partials_[index] = j.value_.field().one();
  return j;
}

void JetScalar::check_compatible(const JetScalar& o) const {
  if (partials_.size() != o.partials_.size()) throw ShapeError("jets over different variable counts");
}

JetScalar& JetScalar::operator+=(const JetScalar& o) {
  check_compatible(o);
  value_ += o.value_;
  for (std::size_t i = 0; i < partials_.size(); ++i) partials_[i] += o.partials_[i];
  return *this;
}

JetScalar& JetScalar::operator-=(const JetScalar& o) {
  check_compatible(o);
  value_ -= o.value_;
  for (std::size_t i = 0; i < partials_.size(); ++i) partials_[i] -= o.partials_[i];
  return *this;
}

JetScalar& JetScalar::operator*=(const JetScalar& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < partials_.size(); ++i) {
    partials_[i] = value_ * o.partials_[i] + o.value_ * partials_[i];
  }
  value_ *= o.value_;
  return *this;
}

JetScalar& JetScalar::operator/=(const JetScalar& o) {
  check_compatible(o);
  if (o.value_.is_zero()) throw DivisionByZeroError("jet division by a zero value");
  const Scalar inv = o.value_.inverse();
  const Scalar q = value_ * inv;
  // (a/b)' = (a' − q·b') / b
  for (std::size_t i = 0; i < partials_.size(); ++i) partials_[i] = (partials_[i] - q * o.partials_[i]) * inv;
  value_ = q;
  return *this;
}

}  // namespace veronese
