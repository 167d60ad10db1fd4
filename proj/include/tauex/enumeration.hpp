#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "tauex/algebra.hpp"
#include "tauex/perpendicular.hpp"

// Counting and enumeration of complete τ-exceptional sequences.
//
// A complete sequence (M_1, ..., M_n) in a category C is built from the end:
// M_n is τ-rigid in C and (M_1, ..., M_{n-1}) is complete in J(M_n). When C is
// a direct sum, sequences are interleavings of sequences in the summands,
// which turns the count of a shape into a multinomial times a product.

namespace tauex {

using Count = mpz_class;

/// Hereditary Gamma(m, m), semisimple Gamma(m, 1) or the zero algebra.
bool is_leaf(const AlgebraId& a);

/// (m+1)^(m-1) for hereditary A_m, m! for semisimple rank m.
Count leaf_count(const AlgebraId& a);

/// J(M) inside a leaf algebra: A_{l-1} ⊕ A_{m-l} for hereditary A_m, and
/// the semisimple algebra of rank m-1 for semisimple rank m.
CategoryShape leaf_perpendicular(const AlgebraId& a, const Indecomposable& m);

/// One recursion step: the closed-form J(M) where one exists, the leaf
/// expansion otherwise.
CategoryShape perpendicular_step(const AlgebraId& a, const Indecomposable& m);

std::vector<Indecomposable> tau_rigid_modules(const AlgebraId& a);

/// (Σ sizes)! / Π sizes_i!
Count multinomial(const std::vector<int>& sizes);

/// Memoising counter. The cache is keyed by algebra only and is safe to share
/// between threads: concurrent misses may compute the same entry twice, but
/// always store the same value.
class Counter {
 public:
  explicit Counter(bool memoize = true) : memoize_(memoize) {}

  Counter(const Counter&) = delete;
  Counter& operator=(const Counter&) = delete;

  Count count_algebra(const AlgebraId& a);

  /// Structural count with the top-level J(M) computed by a specific rule;
  /// sub-categories use Auto.
  Count count_algebra(const AlgebraId& a, PerpRule top_rule);

  Count count_shape(const CategoryShape& s);

  std::size_t cache_size() const;

 private:
  Count structural(const AlgebraId& a, PerpRule rule);

  bool memoize_;
  mutable std::mutex mutex_;
  std::unordered_map<AlgebraId, Count> cache_;
};

/// Process-wide counter used by the free functions below.
Counter& shared_counter();

Count count_algebra(const AlgebraId& a);
Count count_shape(const CategoryShape& s);

/// Definitional recursion over the whole shape, without the interleaving
/// formula. Exponential in the rank; intended as an oracle.
Count count_shape_naive(const CategoryShape& s);

struct ChainStep {
  std::size_t component = 0;  // index into the canonical shape at this step
  AlgebraId algebra;
  Indecomposable module;

  bool operator==(const ChainStep&) const = default;
};

/// One complete sequence, recorded outermost first: steps[0] is the last
/// module of the sequence.
struct ChoiceChain {
  std::vector<ChainStep> steps;

  bool operator==(const ChoiceChain&) const = default;
};

bool is_valid_chain(const CategoryShape& start, const ChoiceChain& chain);

/// Depth-first stream of chains, ordered by component index and then by
/// module (top, len).
class ChainStream {
 public:
  explicit ChainStream(CategoryShape start, std::optional<std::uint64_t> limit = std::nullopt);

  std::optional<ChoiceChain> next();

  std::uint64_t yielded() const { return yielded_; }

 private:
  struct Frame {
    CategoryShape shape;
    std::vector<ChainStep> choices;
    std::size_t next = 0;
  };

  void push(CategoryShape shape);

  std::vector<Frame> stack_;
  std::optional<std::uint64_t> limit_;
  std::uint64_t yielded_ = 0;
};

enum class SeqFamily { G, L, H, K };

/// The algebra counted by the n-th term of a family: Gamma(n,2), Lambda(n,2),
/// Lambda(n,n), Gamma(n,n-1). Small n map to their canonical degenerations
/// (G_1 and K_1 on Gamma(1,1), K_2 on the semisimple Gamma(2,1)).
AlgebraId family_algebra(SeqFamily family, int n);

/// Terms n = 1..n_max. With `parallel`, terms are computed on separate threads
/// against the shared counter; the output is identical.
std::vector<Count> sequence_table(SeqFamily family, int n_max, bool parallel = false);

}  // namespace tauex
