#pragma once

#include <optional>
#include <vector>

#include "tauex/algebra.hpp"

// Combinatorial model of the module categories of Gamma(n, t) and Lambda(n, t).
// Every indecomposable is uniserial and is identified by its top and length.

namespace tauex {

/// Label of x in 1..n, i.e. ((x - 1) mod n) + 1.
int residue(int x, int n);

/// Membership of vertex x in the interval {start, start+1, ..., start+count-1}.
/// Gamma intervals never wrap; Lambda intervals are taken modulo n.
bool in_interval(const AlgebraId& a, int x, int start, int count);

/// Length of the indecomposable projective P_top.
int projective_length(const AlgebraId& a, int top);

bool is_valid(const AlgebraId& a, const Indecomposable& m);
void require_valid(const AlgebraId& a, const Indecomposable& m);

bool is_projective(const AlgebraId& a, const Indecomposable& m);
bool is_simple(const Indecomposable& m);

Indecomposable projective(const AlgebraId& a, int vertex);

/// rad^s(M) for 0 <= s < l(M).
Indecomposable radical_power(const AlgebraId& a, const Indecomposable& m, int s);

/// All indecomposables, sorted by (top, len).
std::vector<Indecomposable> indecomposables(const AlgebraId& a);

/// Auslander-Reiten translate; empty for projectives.
std::optional<Indecomposable> tau(const AlgebraId& a, const Indecomposable& m);

/// Index of the socle of M.
int isoc(const AlgebraId& a, const Indecomposable& m);

/// M -> (n - isoc(M), l(M) - 1). Lambda algebras only.
LatticePoint lattice_L(const AlgebraId& a, const Indecomposable& m);

/// Inverse of lattice_L; the horizontal coordinate is first reduced mod n.
Indecomposable lattice_Linv(const AlgebraId& a, const LatticePoint& p);

/// Hom(M, N) != 0, decided by the cyclic-interval criterion on tops and
/// lengths.
bool hom_nonzero(const AlgebraId& a, const Indecomposable& m, const Indecomposable& n);

/// dim Hom(M, N): the number of submodules rad^{k-r}(N), 1 <= r <= min(l(M), l(N)),
/// whose top is top(M).
int hom_dim(const AlgebraId& a, const Indecomposable& m, const Indecomposable& n);

/// Kernel of the projective cover P_top -> M; empty for projectives.
std::optional<Indecomposable> syzygy(const AlgebraId& a, const Indecomposable& m);

/// dim Ext^1(M, N) = dim Hom(ΩM, N) - dim Hom(P_top, N) + dim Hom(M, N).
int ext1_dim(const AlgebraId& a, const Indecomposable& m, const Indecomposable& n);

bool is_tau_rigid(const AlgebraId& a, const Indecomposable& m);

/// The modules X with Hom(X, τM) = 0 (everything when M is projective).
std::vector<Indecomposable> left_perp_of_tau(const AlgebraId& a, const Indecomposable& m);

/// Bongartz completion: the Ext-projectives of ⊥(τM), sorted. Throws
/// NotTauRigid.
std::vector<Indecomposable> bongartz(const AlgebraId& a, const Indecomposable& m);

}  // namespace tauex
