#include "tauex/algebra.hpp"

#include <algorithm>

#include "tauex/error.hpp"

namespace tauex {

bool is_valid(const AlgebraId& a) {
  if (a.is_gamma()) {
    if (a.n < 0) return false;
    if (a.n == 0) return a.t >= 0;
    return a.t >= 1 && a.t <= a.n;
  }
  return a.n >= 1 && a.t >= 1;
}

void require_valid(const AlgebraId& a) {
  if (!is_valid(a)) throw InvalidArgument("invalid algebra " + to_string(a));
}

AlgebraId Gamma(int n, int t) {
  AlgebraId a{Family::LinearGamma, n, t};
  require_valid(a);
  return a;
}

AlgebraId Lambda(int n, int t) {
  AlgebraId a{Family::CyclicLambda, n, t};
  require_valid(a);
  return a;
}

AlgebraId canonical(Family family, int n, int t) {
  if (n <= 0) return AlgebraId{family, n, t};
  if (family == Family::LinearGamma) return AlgebraId{family, n, std::clamp(t, 1, n)};
  if (n == 1 && t == 1) return AlgebraId{Family::LinearGamma, 1, 1};
  return AlgebraId{family, n, t};
}

std::string to_string(const AlgebraId& a) {
  std::string name = a.is_gamma() ? "Gamma" : "Lambda";
  return name + "(" + std::to_string(a.n) + "," + std::to_string(a.t) + ")";
}

std::string to_string(const Indecomposable& m) {
  return "(" + std::to_string(m.top) + "," + std::to_string(m.len) + ")";
}

}  // namespace tauex
