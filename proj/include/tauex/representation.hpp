#pragma once

#include <vector>

#include <gmpxx.h>

#include "tauex/algebra.hpp"

// Explicit quiver representations over Q, used as an independent oracle for
// the combinatorial Hom criterion.

namespace tauex {

using RationalMatrix = std::vector<std::vector<mpq_class>>;

struct Arrow {
  int source = 0;  // 0-based vertex
  int target = 0;
};

/// The quiver of a Nakayama algebra: A_n linearly oriented or the cycle C_n.
std::vector<Arrow> quiver_arrows(const AlgebraId& a);

struct Representation {
  std::vector<int> dims;            // vector space dimension per vertex
  std::vector<RationalMatrix> maps; // one dims[target] x dims[source] matrix per arrow
};

/// Representation of P_top / rad^len(P_top): one basis vector per composition
/// factor, arrows acting as shift matrices.
Representation module_representation(const AlgebraId& a, const Indecomposable& m);

/// Rank of a dense rational matrix by Gaussian elimination.
int rank(RationalMatrix m);

/// Dimension of the space of morphisms between two representations of the
/// same quiver, as the nullity of the intertwining system.
int hom_space_dim(const std::vector<Arrow>& arrows, const Representation& from, const Representation& to);

int hom_dim_oracle(const AlgebraId& a, const Indecomposable& m, const Indecomposable& n);

}  // namespace tauex
