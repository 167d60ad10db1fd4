#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

// Truncated power series over Q, used to check exponential generating
// function identities coefficient by coefficient.

namespace tauex {

/// Σ_{k=0}^{order} c_k x^k. Arithmetic between two series requires equal
/// orders.
class TruncatedEGF {
 public:
  explicit TruncatedEGF(int order);
  explicit TruncatedEGF(std::vector<mpq_class> coeffs);

  /// Series whose k-th coefficient is seq[k] / k!, truncated at `order`.
  /// Missing terms are zero.
  static TruncatedEGF from_sequence(const std::vector<mpz_class>& seq, int order);
  static TruncatedEGF constant(const mpq_class& c, int order);
  static TruncatedEGF x(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  const mpq_class& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }

  /// k! c_k, the sequence term behind the exponential generating function.
  mpq_class coefficient_times_factorial(int k) const;

  TruncatedEGF truncate(int order) const;

  friend TruncatedEGF operator+(const TruncatedEGF& f, const TruncatedEGF& g);
  friend TruncatedEGF operator-(const TruncatedEGF& f, const TruncatedEGF& g);
  /// Cauchy product c_k = Σ_{l=0}^{k} a_l b_{k-l}.
  friend TruncatedEGF operator*(const TruncatedEGF& f, const TruncatedEGF& g);
  TruncatedEGF operator-() const;

  bool operator==(const TruncatedEGF&) const = default;

 private:
  std::vector<mpq_class> coeffs_;
};

TruncatedEGF add(const TruncatedEGF& f, const TruncatedEGF& g);
TruncatedEGF mul(const TruncatedEGF& f, const TruncatedEGF& g);
TruncatedEGF scale(const TruncatedEGF& f, const mpq_class& c);
/// Lowers the order by one.
TruncatedEGF derivative(const TruncatedEGF& f);
/// x f(x) at the same order; the top coefficient of f falls off.
TruncatedEGF shift_mul_x(const TruncatedEGF& f);
/// Throws ZeroConstantTerm when f(0) = 0.
TruncatedEGF inverse(const TruncatedEGF& f);
/// exp(f) for f(0) = 0, from (exp f)' = f' exp f.
TruncatedEGF exp(const TruncatedEGF& f);

/// Tree function T(x) = Σ_{n>=1} n^{n-1} x^n / n!, equal to -W(-x).
TruncatedEGF tree_series(int order);

/// e^{-W(-x)} = Σ_{b>=0} (1+b)^{b-1} x^b / b!.
TruncatedEGF exp_neg_w(int order);

enum class Identity {
  GFubini,         // Σ G_n x^n/n! = 1 / (1 - x - x²/2)
  LfromG,          // Σ L_n x^n/n! = (x + x²) / (1 - x - x²/2)
  HTree,           // (Σ H_n x^n/n!) (1 - T) = 1
  TreeFixedPoint,  // T = x e^T
  KODE,            // h'(1 - x e^{-W(-x)}) + h e^{-W(-x)} = 2e^{-2W(-x)} - e^{-W(-x)} + W(-x) + x W(-x)/2
};

std::string to_string(Identity id);
std::optional<Identity> identity_from_string(const std::string& name);

struct Mismatch {
  int order = 0;
  mpq_class lhs;
  mpq_class rhs;
};

struct IdentityReport {
  Identity identity = Identity::GFubini;
  int order = 0;
  /// Highest k such that orders 0..k all agree; -1 if order 0 already fails.
  int holds_to = -1;
  std::optional<Mismatch> first_mismatch;
  /// Agreement at each order 0..order.
  std::vector<bool> per_order;

  bool holds_between(int lo, int hi) const;
};

/// Coefficientwise comparison of two series of equal order.
IdentityReport compare_series(Identity id, const TruncatedEGF& lhs, const TruncatedEGF& rhs);

/// Sequence inputs for the identities, indexed from 0. Each vector must have
/// at least order+1 terms (order+2 for K, whose derivative is taken).
struct IdentityInputs {
  std::vector<mpz_class> g;
  std::vector<mpz_class> l;
  std::vector<mpz_class> h;
  std::vector<mpz_class> k;
};

/// Pulls G, L, H, K from the counting engine (G_0 = H_0 = 1, L_0 = K_0 = 0).
IdentityInputs inputs_from_counts(int order);

IdentityReport verify_identity(Identity id, int order, const IdentityInputs& inputs);
IdentityReport verify_identity(Identity id, int order);

}  // namespace tauex
