#include "tauex/perpendicular.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "tauex/error.hpp"
#include "tauex/nakayama.hpp"

namespace tauex {

namespace {

AlgebraId gamma_component(int n, int t) { return canonical(Family::LinearGamma, n, t); }
AlgebraId lambda_component(int n, int t) { return canonical(Family::CyclicLambda, n, t); }
AlgebraId hereditary(int n) { return gamma_component(n, n); }

bool in_rule_family(const AlgebraId& a, PerpRule rule) {
  switch (rule) {
    case PerpRule::GammaTwo:
      return a.is_gamma() && a.n >= 2 && a.t == 2;
    case PerpRule::GammaNMinusOne:
      return a.is_gamma() && a.n >= 3 && a.t == a.n - 1;
    case PerpRule::LambdaTwo:
      return a.is_lambda() && a.t == 2;
    case PerpRule::LambdaN:
      return a.is_lambda() && a.t == a.n;
    case PerpRule::Auto:
      return false;
  }
  return false;
}

PerpRule resolve(const AlgebraId& a, PerpRule rule) {
  if (rule == PerpRule::Auto) {
    const auto rules = applicable_rules(a);
    if (rules.empty()) {
      throw UnsupportedFamily(to_string(a) +
                              " is not in Gamma(n,2), Gamma(n,n-1), Lambda(n,2) or Lambda(n,n)");
    }
    return rules.front();
  }
  if (!in_rule_family(a, rule)) {
    throw UnsupportedFamily(to_string(a) + " is not covered by rule " + to_string(rule));
  }
  return rule;
}

std::vector<Indecomposable> all_projectives(const AlgebraId& a) {
  std::vector<Indecomposable> out;
  for (int v = 1; v <= a.n; ++v) out.push_back(projective(a, v));
  return out;
}

// M ⊕ rad^1(M) ⊕ ... ⊕ rad^{l-1}(M) ⊕ (P_j for j outside [i+1, i+l]).
std::vector<Indecomposable> radical_tower_completion(const AlgebraId& a, const Indecomposable& m) {
  std::vector<Indecomposable> out;
  for (int s = 0; s < m.len; ++s) out.push_back(radical_power(a, m, s));
  for (int j = 1; j <= a.n; ++j) {
    if (!in_interval(a, j, m.top + 1, m.len)) out.push_back(projective(a, j));
  }
  return out;
}

}  // namespace

CategoryShape::CategoryShape(std::initializer_list<AlgebraId> components)
    : CategoryShape(std::vector<AlgebraId>(components)) {}

CategoryShape::CategoryShape(std::vector<AlgebraId> components) {
  for (const auto& c : components) {
    if (c.n <= 0) continue;
    AlgebraId canon = canonical(c.family, c.n, c.t);
    require_valid(canon);
    if (canon.t == 1) {
      // semisimple: one A_1 per vertex
      components_.insert(components_.end(), static_cast<std::size_t>(canon.n), Gamma(1, 1));
    } else {
      components_.push_back(canon);
    }
  }
  std::sort(components_.begin(), components_.end());
}

int CategoryShape::rank() const {
  return std::accumulate(components_.begin(), components_.end(), 0,
                         [](int acc, const AlgebraId& a) { return acc + a.n; });
}

CategoryShape CategoryShape::replace(std::size_t index, const CategoryShape& with) const {
  if (index >= components_.size()) throw InvalidArgument("component index out of range");
  std::vector<AlgebraId> next;
  next.reserve(components_.size() + with.size());
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (k != index) next.push_back(components_[k]);
  }
  next.insert(next.end(), with.components().begin(), with.components().end());
  return CategoryShape(std::move(next));
}

std::string to_string(const CategoryShape& s) {
  if (s.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k > 0) out += " ⊕ ";
    out += to_string(s.components()[k]);
  }
  return out;
}

std::string to_string(PerpRule rule) {
  switch (rule) {
    case PerpRule::Auto: return "auto";
    case PerpRule::GammaTwo: return "gamma2";
    case PerpRule::GammaNMinusOne: return "gamman1";
    case PerpRule::LambdaTwo: return "lambda2";
    case PerpRule::LambdaN: return "lambdan";
  }
  return "?";
}

std::vector<PerpRule> applicable_rules(const AlgebraId& a) {
  std::vector<PerpRule> out;
  if (!is_valid(a)) return out;
  for (PerpRule r : {PerpRule::GammaTwo, PerpRule::GammaNMinusOne, PerpRule::LambdaTwo, PerpRule::LambdaN}) {
    if (in_rule_family(a, r)) out.push_back(r);
  }
  return out;
}

GammaNm1Class classify_gamma_nm1(const AlgebraId& a, const Indecomposable& m) {
  if (!in_rule_family(a, PerpRule::GammaNMinusOne)) {
    throw InvalidArgument(to_string(a) + " is not Gamma(n,n-1) with n >= 3");
  }
  require_valid(a, m);
  if (is_projective(a, m)) return {GammaNm1Class::Kind::Projective, 0};
  // rad^i(P_1) has top i+1 and length n-1-i.
  const int i = m.top - 1;
  if (i >= 1 && i <= a.n - 2 && m.len == a.n - 1 - i) return {GammaNm1Class::Kind::RadPowerOfP1, i};
  return {GammaNm1Class::Kind::Other, 0};
}

CategoryShape j_category(const AlgebraId& a, const Indecomposable& m, PerpRule rule) {
  require_valid(a, m);
  rule = resolve(a, rule);
  if (!is_tau_rigid(a, m)) throw NotTauRigid(to_string(m) + " is not tau-rigid in " + to_string(a));

  const int n = a.n, i = m.top, l = m.len;
  const bool proj = is_projective(a, m);
  switch (rule) {
    case PerpRule::GammaTwo:
      if (proj) return {gamma_component(i - 1, 2), gamma_component(n - i, 2)};
      return {gamma_component(i - 1, 2), gamma_component(n - i - 1, 2), gamma_component(1, 2)};

    case PerpRule::LambdaTwo:
      if (proj) return {gamma_component(n - 1, 2)};
      return {gamma_component(n - 2, 2), gamma_component(1, 2)};

    case PerpRule::LambdaN:
      if (proj) return {hereditary(n - 1)};
      return {hereditary(l - 1), lambda_component(n - l, n - l)};

    case PerpRule::GammaNMinusOne: {
      const auto cls = classify_gamma_nm1(a, m);
      switch (cls.kind) {
        case GammaNm1Class::Kind::Projective:
          return {hereditary(n - i), hereditary(i - 1)};
        case GammaNm1Class::Kind::RadPowerOfP1:
          if (cls.power == 1) return {hereditary(l - 1), hereditary(1), hereditary(1)};
          return {hereditary(n - l), hereditary(l - 1)};
        case GammaNm1Class::Kind::Other:
          return {hereditary(l - 1), gamma_component(n - l, n - l - 1)};
      }
      break;
    }
    case PerpRule::Auto:
      break;
  }
  throw UnsupportedFamily("no closed form for " + to_string(a));
}

std::vector<Indecomposable> closed_form_bongartz(const AlgebraId& a, const Indecomposable& m, PerpRule rule) {
  require_valid(a, m);
  rule = resolve(a, rule);
  if (!is_tau_rigid(a, m)) throw NotTauRigid(to_string(m) + " is not tau-rigid in " + to_string(a));

  std::vector<Indecomposable> out;
  if (is_projective(a, m)) {
    out = all_projectives(a);
  } else {
    switch (rule) {
      case PerpRule::GammaTwo:
      case PerpRule::LambdaTwo:
        // S_i ⊕ (P_j for j != i+1), taken mod n for Lambda.
        out.push_back(m);
        for (int j = 1; j <= a.n; ++j) {
          const int excluded = a.is_lambda() ? residue(m.top + 1, a.n) : m.top + 1;
          if (j != excluded) out.push_back(projective(a, j));
        }
        break;
      case PerpRule::LambdaN:
        out = radical_tower_completion(a, m);
        break;
      case PerpRule::GammaNMinusOne: {
        const auto cls = classify_gamma_nm1(a, m);
        if (cls.kind == GammaNm1Class::Kind::RadPowerOfP1) {
          const Indecomposable p1 = projective(a, 1);
          out.push_back(m);
          for (int s = cls.power + 1; s <= a.n - 2; ++s) out.push_back(radical_power(a, p1, s));
          for (int j = 1; j <= cls.power + 1; ++j) out.push_back(projective(a, j));
        } else {
          out = radical_tower_completion(a, m);
        }
        break;
      }
      case PerpRule::Auto:
        break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool verify_bongartz_closed_form(const AlgebraId& a, const Indecomposable& m) {
  const auto generic = bongartz(a, m);
  const auto rules = applicable_rules(a);
  if (rules.empty()) throw UnsupportedFamily(to_string(a) + " has no closed-form Bongartz completion");
  return std::all_of(rules.begin(), rules.end(),
                     [&](PerpRule r) { return closed_form_bongartz(a, m, r) == generic; });
}

}  // namespace tauex
