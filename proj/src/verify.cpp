#include "tauex/verify.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "tauex/combinatorics.hpp"
#include "tauex/egf.hpp"
#include "tauex/enumeration.hpp"
#include "tauex/nakayama.hpp"
#include "tauex/representation.hpp"

namespace tauex {

namespace {

// Published terms, used as an offline golden table.
const std::vector<const char*> kGoldenG = {"1", "1", "3", "12", "66", "450", "3690", "35280", "385560", "4740120"};
const std::vector<const char*> kGoldenL = {"1", "4", "15", "84", "570", "4680", "44730", "488880", "6010200", "82101600"};

void add(SuiteResult& r, std::string name, bool ok, std::string detail = {}) {
  r.checks.push_back({std::move(name), ok, std::move(detail)});
}

mpz_class g_count(int n) { return n == 0 ? mpz_class(1) : count_algebra(family_algebra(SeqFamily::G, n)); }

SuiteResult egf_suite(const SuiteOptions& opt) {
  const int order = opt.order.value_or(20);
  SuiteResult r{"egf", {}, {}};
  const auto inputs = inputs_from_counts(order);
  for (Identity id : {Identity::GFubini, Identity::LfromG, Identity::HTree, Identity::TreeFixedPoint}) {
    const auto rep = verify_identity(id, order, inputs);
    add(r, to_string(id), rep.holds_to == order, "holds_to=" + std::to_string(rep.holds_to));
  }
  const auto kode = verify_identity(Identity::KODE, order, inputs);
  const int lo = std::min(3, order);
  add(r, "KODE orders " + std::to_string(lo) + ".." + std::to_string(order), kode.holds_between(lo, order));
  for (int k = 0; k < lo; ++k) {
    r.notes.push_back("KODE order " + std::to_string(k) + ": " + (kode.per_order[k] ? "holds" : "differs"));
  }
  return r;
}

SuiteResult fubini_suite(const SuiteOptions& opt) {
  const int n_max = opt.n_max.value_or(7);
  SuiteResult r{"fubini", {}, {}};
  for (int n = 0; n <= n_max; ++n) {
    const auto brute = ordered_partitions_count_bruteforce(n, 2);
    const auto rec = restricted_fubini(n, 2);
    const auto g = g_count(n);
    bool ok = brute == rec && rec == g;
    if (n < static_cast<int>(kGoldenG.size())) ok = ok && g == mpz_class(kGoldenG[n]);
    add(r, "F(" + std::to_string(n) + ",<=2) = G_" + std::to_string(n), ok, g.get_str());
  }
  return r;
}

SuiteResult closedform_suite(const SuiteOptions& opt) {
  const int n_max = opt.n_max.value_or(30);
  SuiteResult r{"closedform", {}, {}};
  for (int n = 0; n <= n_max; ++n) {
    add(r, "g_closed(" + std::to_string(n) + ")", g_closed(n) == g_count(n));
  }
  for (int n = 1; n <= n_max; ++n) {
    const auto l = count_algebra(family_algebra(SeqFamily::L, n));
    bool ok = l_closed(n) == l;
    if (n <= static_cast<int>(kGoldenL.size())) ok = ok && l == mpz_class(kGoldenL[n - 1]);
    add(r, "l_closed(" + std::to_string(n) + ")", ok);
  }
  return r;
}

SuiteResult bongartz_suite(const SuiteOptions& opt) {
  const int n_max = opt.n_max.value_or(8);
  SuiteResult r{"bongartz", {}, {}};
  for (const auto& a : counting_family_algebras(n_max)) {
    if (applicable_rules(a).empty()) continue;
    bool ok = true;
    for (const auto& m : tau_rigid_modules(a)) {
      const auto t = bongartz(a, m);
      ok = ok && verify_bongartz_closed_form(a, m) && static_cast<int>(t.size()) == a.n &&
           std::binary_search(t.begin(), t.end(), m);
    }
    add(r, to_string(a), ok);
  }
  return r;
}

SuiteResult interleaving_suite(const SuiteOptions& opt) {
  const int n_max = opt.n_max.value_or(6);
  SuiteResult r{"interleaving", {}, {}};
  const auto shapes = reachable_shapes(n_max);
  int bad = 0;
  for (const auto& s : shapes) {
    if (count_shape(s) != count_shape_naive(s)) {
      ++bad;
      add(r, to_string(s), false);
    }
  }
  add(r, std::to_string(shapes.size()) + " shapes up to rank " + std::to_string(n_max), bad == 0);
  return r;
}

std::vector<AlgebraId> hom_algebras(int n_max) {
  std::vector<AlgebraId> out;
  for (int n = 1; n <= n_max; ++n) {
    for (int t : {2, n - 1, n}) {
      for (Family f : {Family::LinearGamma, Family::CyclicLambda}) {
        AlgebraId a{f, n, t};
        if (t >= 1 && t <= n && std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
      }
    }
  }
  return out;
}

SuiteResult hom_suite(const SuiteOptions& opt) {
  const int n_max = opt.n_max.value_or(6);
  SuiteResult r{"hom", {}, {}};
  for (const auto& a : hom_algebras(n_max)) {
    bool ok = true;
    const auto mods = indecomposables(a);
    for (const auto& m : mods) {
      for (const auto& n : mods) {
        const int dim = hom_dim_oracle(a, m, n);
        ok = ok && (dim == 0 || dim == 1) && (dim == 1) == hom_nonzero(a, m, n) && dim == hom_dim(a, m, n);
      }
    }
    add(r, to_string(a), ok);
  }
  return r;
}

SuiteResult rigidity_suite(const SuiteOptions& opt) {
  const int n_max = opt.n_max.value_or(8);
  SuiteResult r{"rigidity", {}, {}};
  for (int n = 1; n <= n_max; ++n) {
    const AlgebraId a = Lambda(n, n);
    bool ok = true;
    for (const auto& m : indecomposables(a)) {
      ok = ok && is_tau_rigid(a, m) == (is_projective(a, m) || m.len < n);
    }
    add(r, "length criterion on " + to_string(a), ok);
  }
  for (const auto& a : counting_family_algebras(n_max)) {
    if (a == Lambda(1, 2)) continue;
    const auto mods = indecomposables(a);
    const bool ok = std::all_of(mods.begin(), mods.end(), [&](const auto& m) { return is_tau_rigid(a, m); });
    add(r, "all rigid in " + to_string(a), ok);
  }
  add(r, "simple of Lambda(1,2) is not rigid", !is_tau_rigid(Lambda(1, 2), {1, 1}));
  return r;
}

}  // namespace

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"egf",          "fubini", "closedform", "bongartz",
                                                 "interleaving", "hom",    "rigidity"};
  return names;
}

std::optional<SuiteResult> run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "egf") return egf_suite(options);
  if (name == "fubini") return fubini_suite(options);
  if (name == "closedform") return closedform_suite(options);
  if (name == "bongartz") return bongartz_suite(options);
  if (name == "interleaving") return interleaving_suite(options);
  if (name == "hom") return hom_suite(options);
  if (name == "rigidity") return rigidity_suite(options);
  return std::nullopt;
}

std::vector<AlgebraId> counting_family_algebras(int n_max) {
  std::vector<AlgebraId> out;
  for (int n = 1; n <= n_max; ++n) {
    for (AlgebraId a : {canonical(Family::LinearGamma, n, 2), canonical(Family::LinearGamma, n, std::max(n - 1, 1)),
                        canonical(Family::CyclicLambda, n, 2), canonical(Family::CyclicLambda, n, n)}) {
      if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
    }
  }
  return out;
}

std::set<CategoryShape> reachable_shapes(int max_rank) {
  std::set<CategoryShape> seen;
  std::deque<CategoryShape> queue;
  // Seeds: every direct sum of family algebras with total rank <= max_rank.
  const auto family = counting_family_algebras(max_rank);
  std::vector<std::pair<std::vector<AlgebraId>, std::size_t>> partial{{{}, 0}};
  while (!partial.empty()) {
    auto [parts, from] = partial.back();
    partial.pop_back();
    int rank = 0;
    for (const auto& p : parts) rank += p.n;
    if (!parts.empty()) {
      CategoryShape s{parts};
      if (seen.insert(s).second) queue.push_back(s);
    }
    for (std::size_t k = from; k < family.size(); ++k) {
      if (rank + family[k].n > max_rank) continue;
      auto more = parts;
      more.push_back(family[k]);
      partial.emplace_back(std::move(more), k);
    }
  }
  while (!queue.empty()) {
    const CategoryShape s = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < s.size(); ++k) {
      const AlgebraId& c = s.components()[k];
      for (const auto& m : tau_rigid_modules(c)) {
        CategoryShape next = s.replace(k, perpendicular_step(c, m));
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
    }
  }
  return seen;
}

}  // namespace tauex
