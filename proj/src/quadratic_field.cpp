#include "tauex/quadratic_field.hpp"

#include <utility>

#include "tauex/error.hpp"

namespace tauex {

QuadExtValue::QuadExtValue(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

mpq_class QuadExtValue::norm() const { return a_ * a_ - 3 * b_ * b_; }

QuadExtValue QuadExtValue::inverse() const {
  const mpq_class nrm = norm();
  if (nrm == 0) throw InvalidArgument("zero has no inverse in Q(sqrt 3)");
  return {a_ / nrm, -b_ / nrm};
}

QuadExtValue QuadExtValue::pow(long exponent) const {
  QuadExtValue base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  QuadExtValue out = rational(1);
  while (e > 0) {
    if (e & 1u) out = out * base;
    base = base * base;
    e >>= 1u;
  }
  return out;
}

QuadExtValue operator+(const QuadExtValue& x, const QuadExtValue& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
QuadExtValue operator-(const QuadExtValue& x, const QuadExtValue& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
QuadExtValue operator*(const QuadExtValue& x, const QuadExtValue& y) {
  return {x.a_ * y.a_ + 3 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
}
QuadExtValue operator/(const QuadExtValue& x, const QuadExtValue& y) { return x * y.inverse(); }

std::string to_string(const QuadExtValue& v) {
  return v.a().get_str() + " + " + v.b().get_str() + "*sqrt(3)";
}

}  // namespace tauex
