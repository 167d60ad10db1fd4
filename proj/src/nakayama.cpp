#include "tauex/nakayama.hpp"

#include <algorithm>

#include "tauex/error.hpp"

namespace tauex {

int residue(int x, int n) {
  int r = (x - 1) % n;
  if (r < 0) r += n;
  return r + 1;
}

bool in_interval(const AlgebraId& a, int x, int start, int count) {
  if (count <= 0) return false;
  if (a.is_gamma()) return start <= x && x <= start + count - 1;
  if (count >= a.n) return true;
  int offset = residue(x, a.n) - residue(start, a.n);
  if (offset < 0) offset += a.n;
  return offset < count;
}

int projective_length(const AlgebraId& a, int top) {
  if (a.is_lambda()) return a.t;
  return std::min(a.t, a.n - top + 1);
}

bool is_valid(const AlgebraId& a, const Indecomposable& m) {
  if (!is_valid(a)) return false;
  if (m.top < 1 || m.top > a.n) return false;
  return m.len >= 1 && m.len <= projective_length(a, m.top);
}

void require_valid(const AlgebraId& a, const Indecomposable& m) {
  require_valid(a);
  if (!is_valid(a, m)) {
    throw InvalidArgument("module " + to_string(m) + " is not an indecomposable of " + to_string(a));
  }
}

bool is_projective(const AlgebraId& a, const Indecomposable& m) {
  return m.len == projective_length(a, m.top);
}

bool is_simple(const Indecomposable& m) { return m.len == 1; }

Indecomposable projective(const AlgebraId& a, int vertex) {
  return Indecomposable{vertex, projective_length(a, vertex)};
}

Indecomposable radical_power(const AlgebraId& a, const Indecomposable& m, int s) {
  if (s < 0 || s >= m.len) throw InvalidArgument("radical power out of range");
  return Indecomposable{residue(m.top + s, a.n), m.len - s};
}

std::vector<Indecomposable> indecomposables(const AlgebraId& a) {
  require_valid(a);
  std::vector<Indecomposable> out;
  for (int top = 1; top <= a.n; ++top) {
    for (int len = 1; len <= projective_length(a, top); ++len) out.push_back({top, len});
  }
  return out;
}

std::optional<Indecomposable> tau(const AlgebraId& a, const Indecomposable& m) {
  require_valid(a, m);
  if (is_projective(a, m)) return std::nullopt;
  // For Gamma a non-projective never has top n, so no wraparound happens.
  return Indecomposable{residue(m.top + 1, a.n), m.len};
}

int isoc(const AlgebraId& a, const Indecomposable& m) {
  require_valid(a, m);
  return residue(m.top + m.len - 1, a.n);
}

LatticePoint lattice_L(const AlgebraId& a, const Indecomposable& m) {
  if (!a.is_lambda()) throw InvalidArgument("lattice coordinates are defined for Lambda algebras only");
  return LatticePoint{a.n - isoc(a, m), m.len - 1};
}

Indecomposable lattice_Linv(const AlgebraId& a, const LatticePoint& p) {
  if (!a.is_lambda()) throw InvalidArgument("lattice coordinates are defined for Lambda algebras only");
  require_valid(a);
  if (p.b < 0 || p.b >= a.t) throw InvalidArgument("lattice row out of range");
  int col = p.a % a.n;
  if (col < 0) col += a.n;
  const int len = p.b + 1;
  const int socle = a.n - col;
  return Indecomposable{residue(socle - len + 1, a.n), len};
}

bool hom_nonzero(const AlgebraId& a, const Indecomposable& m, const Indecomposable& n) {
  require_valid(a, m);
  require_valid(a, n);
  // m = P_j / rad^l P_j, n = P_i / rad^k P_i.
  const int j = m.top, l = m.len, i = n.top, k = n.len;
  const int n_socle = a.is_lambda() ? residue(i + k - 1, a.n) : i + k - 1;
  return in_interval(a, j, i, k) && in_interval(a, n_socle, j, l);
}

int hom_dim(const AlgebraId& a, const Indecomposable& m, const Indecomposable& n) {
  require_valid(a, m);
  require_valid(a, n);
  int dim = 0;
  for (int r = 1; r <= std::min(m.len, n.len); ++r) {
    if (residue(n.top + n.len - r, a.n) == m.top) ++dim;
  }
  return dim;
}

std::optional<Indecomposable> syzygy(const AlgebraId& a, const Indecomposable& m) {
  require_valid(a, m);
  if (is_projective(a, m)) return std::nullopt;
  return Indecomposable{residue(m.top + m.len, a.n), projective_length(a, m.top) - m.len};
}

int ext1_dim(const AlgebraId& a, const Indecomposable& m, const Indecomposable& n) {
  const auto omega = syzygy(a, m);
  if (!omega) return 0;
  const Indecomposable cover = projective(a, m.top);
  return hom_dim(a, *omega, n) - hom_dim(a, cover, n) + hom_dim(a, m, n);
}

bool is_tau_rigid(const AlgebraId& a, const Indecomposable& m) {
  const auto tm = tau(a, m);
  return !tm || !hom_nonzero(a, m, *tm);
}

std::vector<Indecomposable> left_perp_of_tau(const AlgebraId& a, const Indecomposable& m) {
  const auto tm = tau(a, m);
  std::vector<Indecomposable> out;
  for (const auto& x : indecomposables(a)) {
    if (!tm || !hom_nonzero(a, x, *tm)) out.push_back(x);
  }
  return out;
}

std::vector<Indecomposable> bongartz(const AlgebraId& a, const Indecomposable& m) {
  if (!is_tau_rigid(a, m)) {
    throw NotTauRigid(to_string(m) + " is not tau-rigid in " + to_string(a));
  }
  const auto sub = left_perp_of_tau(a, m);
  std::vector<Indecomposable> out;
  for (const auto& x : sub) {
    const bool ext_projective = std::all_of(sub.begin(), sub.end(), [&](const Indecomposable& y) {
      return ext1_dim(a, x, y) == 0;
    });
    if (ext_projective) out.push_back(x);
  }
  return out;
}

}  // namespace tauex
