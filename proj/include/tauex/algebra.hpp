#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>

namespace tauex {

enum class Family { LinearGamma, CyclicLambda };

/// Names a Nakayama algebra: the linear quiver A_n or the cyclic quiver C_n
/// modulo the t-th power of the arrow ideal.
///
/// Gamma(n, n) is the hereditary path algebra of A_n, Gamma(n, 1) is
/// semisimple and Gamma(0, t) is the zero algebra.
struct AlgebraId {
  Family family = Family::LinearGamma;
  int n = 0;
  int t = 0;

  auto operator<=>(const AlgebraId&) const = default;

  bool is_gamma() const { return family == Family::LinearGamma; }
  bool is_lambda() const { return family == Family::CyclicLambda; }
};

/// Validating constructors.
AlgebraId Gamma(int n, int t);
AlgebraId Lambda(int n, int t);

bool is_valid(const AlgebraId& a);
void require_valid(const AlgebraId& a);

/// Rewrites degenerate ids into their canonical form: Gamma(n, t) with t >= n
/// becomes Gamma(n, n) and Lambda(1, 1) becomes Gamma(1, 1). Rank-0 ids are
/// returned unchanged (callers drop them).
AlgebraId canonical(Family family, int n, int t);

std::string to_string(const AlgebraId& a);

/// An indecomposable module P_top / rad^len(P_top).
struct Indecomposable {
  int top = 1;
  int len = 1;

  auto operator<=>(const Indecomposable&) const = default;
};

std::string to_string(const Indecomposable& m);

/// Coordinates in the Auslander-Reiten lattice of a cyclic Nakayama algebra.
struct LatticePoint {
  int a = 0;
  int b = 0;

  auto operator<=>(const LatticePoint&) const = default;
};

}  // namespace tauex

template <>
struct std::hash<tauex::AlgebraId> {
  std::size_t operator()(const tauex::AlgebraId& a) const noexcept {
    std::size_t h = static_cast<std::size_t>(a.family);
    h = h * 1000003u + static_cast<std::size_t>(a.n);
    h = h * 1000003u + static_cast<std::size_t>(a.t);
    return h;
  }
};
