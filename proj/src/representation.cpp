#include "tauex/representation.hpp"

#include <utility>

#include "tauex/nakayama.hpp"

namespace tauex {

std::vector<Arrow> quiver_arrows(const AlgebraId& a) {
  require_valid(a);
  std::vector<Arrow> arrows;
  const int count = a.is_gamma() ? a.n - 1 : a.n;
  for (int v = 0; v < count; ++v) arrows.push_back({v, (v + 1) % a.n});
  return arrows;
}

Representation module_representation(const AlgebraId& a, const Indecomposable& m) {
  require_valid(a, m);
  Representation rep;
  rep.dims.assign(a.n, 0);

  // Composition factor s sits at vertex residue(top + s); record its index
  // within that vertex's basis.
  std::vector<std::pair<int, int>> slot(m.len);
  for (int s = 0; s < m.len; ++s) {
    const int v = residue(m.top + s, a.n) - 1;
    slot[s] = {v, rep.dims[v]++};
  }

  for (const auto& arrow : quiver_arrows(a)) {
    RationalMatrix mat(rep.dims[arrow.target], std::vector<mpq_class>(rep.dims[arrow.source], 0));
    for (int s = 0; s + 1 < m.len; ++s) {
      if (slot[s].first == arrow.source && slot[s + 1].first == arrow.target) {
        mat[slot[s + 1].second][slot[s].second] = 1;
      }
    }
    rep.maps.push_back(std::move(mat));
  }
  return rep;
}

int rank(RationalMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const mpq_class factor = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

int hom_space_dim(const std::vector<Arrow>& arrows, const Representation& from, const Representation& to) {
  // Unknowns: the entries of f_v (to.dims[v] x from.dims[v]) for every vertex v.
  const std::size_t vertices = from.dims.size();
  std::vector<std::size_t> offset(vertices + 1, 0);
  for (std::size_t v = 0; v < vertices; ++v) {
    offset[v + 1] = offset[v] + static_cast<std::size_t>(to.dims[v] * from.dims[v]);
  }
  const std::size_t unknowns = offset[vertices];
  if (unknowns == 0) return 0;
  auto var = [&](std::size_t v, int row, int col) {
    return offset[v] + static_cast<std::size_t>(row * from.dims[v] + col);
  };

  // For each arrow x -> y: to_map * f_x - f_y * from_map = 0.
  RationalMatrix system;
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const auto x = static_cast<std::size_t>(arrows[k].source);
    const auto y = static_cast<std::size_t>(arrows[k].target);
    const auto& to_map = to.maps[k];
    const auto& from_map = from.maps[k];
    for (int i = 0; i < to.dims[y]; ++i) {
      for (int j = 0; j < from.dims[x]; ++j) {
        std::vector<mpq_class> eq(unknowns, 0);
        for (int p = 0; p < to.dims[x]; ++p) eq[var(x, p, j)] += to_map[i][p];
        for (int q = 0; q < from.dims[y]; ++q) eq[var(y, i, q)] -= from_map[q][j];
        system.push_back(std::move(eq));
      }
    }
  }
  return static_cast<int>(unknowns) - rank(std::move(system));
}

int hom_dim_oracle(const AlgebraId& a, const Indecomposable& m, const Indecomposable& n) {
  return hom_space_dim(quiver_arrows(a), module_representation(a, m), module_representation(a, n));
}

}  // namespace tauex
