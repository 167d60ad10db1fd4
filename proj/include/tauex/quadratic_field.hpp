#pragma once

#include <string>

#include <gmpxx.h>

namespace tauex {

/// Exact element a + b√3 of Q(√3).
class QuadExtValue {
 public:
  QuadExtValue() = default;
  QuadExtValue(mpq_class a, mpq_class b);
  static QuadExtValue rational(const mpq_class& a) { return {a, 0}; }
  static QuadExtValue sqrt3() { return {0, 1}; }

  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }

  /// a² - 3b²; nonzero for every nonzero element.
  mpq_class norm() const;
  QuadExtValue conjugate() const { return {a_, -b_}; }
  QuadExtValue inverse() const;
  /// Any integer exponent; negative powers go through the inverse.
  QuadExtValue pow(long exponent) const;

  bool is_integer() const { return b_ == 0 && a_.get_den() == 1; }

  QuadExtValue operator-() const { return {-a_, -b_}; }
  friend QuadExtValue operator+(const QuadExtValue& x, const QuadExtValue& y);
  friend QuadExtValue operator-(const QuadExtValue& x, const QuadExtValue& y);
  friend QuadExtValue operator*(const QuadExtValue& x, const QuadExtValue& y);
  friend QuadExtValue operator/(const QuadExtValue& x, const QuadExtValue& y);
  friend bool operator==(const QuadExtValue& x, const QuadExtValue& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  mpq_class a_ = 0;
  mpq_class b_ = 0;
};

std::string to_string(const QuadExtValue& v);

}  // namespace tauex
