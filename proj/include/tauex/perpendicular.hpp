#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "tauex/algebra.hpp"

namespace tauex {

/// A formal direct sum of module categories mod A_1 ⊕ ... ⊕ mod A_k.
///
/// Components are canonicalised (see `canonical`), rank-0 components are
/// dropped and the remainder is kept sorted, so equality is multiset equality.
class CategoryShape {
 public:
  CategoryShape() = default;
  CategoryShape(std::initializer_list<AlgebraId> components);
  explicit CategoryShape(std::vector<AlgebraId> components);

  const std::vector<AlgebraId>& components() const { return components_; }
  std::size_t size() const { return components_.size(); }
  bool empty() const { return components_.empty(); }
  int rank() const;

  /// The shape with component `index` replaced by the components of `with`.
  CategoryShape replace(std::size_t index, const CategoryShape& with) const;

  bool operator==(const CategoryShape&) const = default;
  auto operator<=>(const CategoryShape&) const = default;

 private:
  std::vector<AlgebraId> components_;
};

/// e.g. "Gamma(1,1) ⊕ Gamma(3,2)"; the empty shape prints as "0".
std::string to_string(const CategoryShape& s);

/// Which closed form computes J(M).
enum class PerpRule {
  Auto,
  GammaTwo,         // Gamma(n, 2)
  GammaNMinusOne,   // Gamma(n, n-1), n >= 3
  LambdaTwo,        // Lambda(n, 2)
  LambdaN,          // Lambda(n, n)
};

std::string to_string(PerpRule rule);

/// Every rule whose family contains `a`, in Auto priority order.
std::vector<PerpRule> applicable_rules(const AlgebraId& a);

/// τ-perpendicular category J(M) for an indecomposable τ-rigid M. Throws
/// UnsupportedFamily when `a` is outside the requested family (or outside all
/// four families for Auto) and NotTauRigid for non-rigid M.
CategoryShape j_category(const AlgebraId& a, const Indecomposable& m, PerpRule rule = PerpRule::Auto);

struct GammaNm1Class {
  enum class Kind { Projective, RadPowerOfP1, Other };
  Kind kind = Kind::Other;
  int power = 0;  // i for rad^i(P_1), 0 otherwise

  bool operator==(const GammaNm1Class&) const = default;
};

/// Sorts an indecomposable of Gamma(n, n-1), n >= 3, into the three disjoint
/// classes used by the Gamma(n, n-1) closed forms.
GammaNm1Class classify_gamma_nm1(const AlgebraId& a, const Indecomposable& m);

/// Bongartz completion as given by the explicit closed forms of each family.
std::vector<Indecomposable> closed_form_bongartz(const AlgebraId& a, const Indecomposable& m,
                                                 PerpRule rule = PerpRule::Auto);

/// Compares the brute-force Bongartz completion with the closed form for every
/// rule that applies to `a`.
bool verify_bongartz_closed_form(const AlgebraId& a, const Indecomposable& m);

}  // namespace tauex
