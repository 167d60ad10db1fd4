#include "tauex/enumeration.hpp"

#include <future>
#include <map>
#include <numeric>
#include <utility>

#include "tauex/error.hpp"
#include "tauex/nakayama.hpp"

namespace tauex {

namespace {

Count factorial(int n) {
  Count out = 1;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

Count power(int base, int exponent) {
  Count out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exponent));
  return out;
}

Count naive(const CategoryShape& s, std::map<CategoryShape, Count>& seen) {
  if (s.empty()) return 1;
  if (auto it = seen.find(s); it != seen.end()) return it->second;
  Count total = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const AlgebraId& c = s.components()[k];
    for (const auto& m : tau_rigid_modules(c)) total += naive(s.replace(k, perpendicular_step(c, m)), seen);
  }
  seen.emplace(s, total);
  return total;
}

}  // namespace

bool is_leaf(const AlgebraId& a) {
  return a.is_gamma() && (a.n == 0 || a.t == a.n || a.t == 1);
}

Count leaf_count(const AlgebraId& a) {
  require_valid(a);
  if (!is_leaf(a)) throw InvalidArgument(to_string(a) + " is not a hereditary or semisimple leaf");
  const int m = a.n;
  if (m <= 1) return 1;
  if (a.t == m) return power(m + 1, m - 1);
  return factorial(m);
}

CategoryShape leaf_perpendicular(const AlgebraId& a, const Indecomposable& m) {
  require_valid(a, m);
  if (!is_leaf(a)) throw InvalidArgument(to_string(a) + " is not a hereditary or semisimple leaf");
  if (a.t == a.n) {
    return {AlgebraId{Family::LinearGamma, m.len - 1, m.len - 1},
            AlgebraId{Family::LinearGamma, a.n - m.len, a.n - m.len}};
  }
  return {AlgebraId{Family::LinearGamma, a.n - 1, 1}};
}

CategoryShape perpendicular_step(const AlgebraId& a, const Indecomposable& m) {
  if (!applicable_rules(a).empty()) return j_category(a, m);
  if (is_leaf(a)) return leaf_perpendicular(a, m);
  throw UnsupportedFamily(to_string(a) + " has no closed-form perpendicular categories");
}

std::vector<Indecomposable> tau_rigid_modules(const AlgebraId& a) {
  std::vector<Indecomposable> out;
  for (const auto& m : indecomposables(a)) {
    if (is_tau_rigid(a, m)) out.push_back(m);
  }
  return out;
}

Count multinomial(const std::vector<int>& sizes) {
  // Product of binomials C(prefix + size, size).
  Count out = 1;
  unsigned long total = 0;
  for (int s : sizes) {
    if (s < 0) throw InvalidArgument("multinomial part must be nonnegative");
    total += static_cast<unsigned long>(s);
    Count b;
    mpz_bin_uiui(b.get_mpz_t(), total, static_cast<unsigned long>(s));
    out *= b;
  }
  return out;
}

Count Counter::count_algebra(const AlgebraId& a) {
  require_valid(a);
  const AlgebraId key = canonical(a.family, a.n, a.t);
  if (memoize_) {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  Count value = is_leaf(key) ? leaf_count(key) : structural(key, PerpRule::Auto);
  if (memoize_) {
    std::lock_guard lock(mutex_);
    cache_.try_emplace(key, value);
  }
  return value;
}

Count Counter::count_algebra(const AlgebraId& a, PerpRule top_rule) {
  require_valid(a);
  if (top_rule == PerpRule::Auto) return count_algebra(a);
  return structural(a, top_rule);
}

Count Counter::structural(const AlgebraId& a, PerpRule rule) {
  Count total = 0;
  for (const auto& m : tau_rigid_modules(a)) total += count_shape(j_category(a, m, rule));
  return total;
}

Count Counter::count_shape(const CategoryShape& s) {
  std::vector<int> ranks;
  Count product = 1;
  for (const auto& c : s.components()) {
    ranks.push_back(c.n);
    product *= count_algebra(c);
  }
  return multinomial(ranks) * product;
}

std::size_t Counter::cache_size() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

Counter& shared_counter() {
  static Counter counter;
  return counter;
}

Count count_algebra(const AlgebraId& a) { return shared_counter().count_algebra(a); }
Count count_shape(const CategoryShape& s) { return shared_counter().count_shape(s); }

Count count_shape_naive(const CategoryShape& s) {
  std::map<CategoryShape, Count> seen;
  return naive(s, seen);
}

bool is_valid_chain(const CategoryShape& start, const ChoiceChain& chain) {
  CategoryShape shape = start;
  for (const auto& step : chain.steps) {
    if (step.component >= shape.size()) return false;
    const AlgebraId& c = shape.components()[step.component];
    if (c != step.algebra) return false;
    if (!is_valid(c, step.module) || !is_tau_rigid(c, step.module)) return false;
    try {
      shape = shape.replace(step.component, perpendicular_step(c, step.module));
    } catch (const Error&) {
      return false;
    }
  }
  return shape.empty();
}

ChainStream::ChainStream(CategoryShape start, std::optional<std::uint64_t> limit) : limit_(limit) {
  push(std::move(start));
}

void ChainStream::push(CategoryShape shape) {
  Frame frame;
  for (std::size_t k = 0; k < shape.size(); ++k) {
    const AlgebraId& c = shape.components()[k];
    for (const auto& m : tau_rigid_modules(c)) frame.choices.push_back({k, c, m});
  }
  frame.shape = std::move(shape);
  stack_.push_back(std::move(frame));
}

std::optional<ChoiceChain> ChainStream::next() {
  if (limit_ && yielded_ >= *limit_) return std::nullopt;
  while (!stack_.empty()) {
    Frame& top = stack_.back();
    if (top.shape.empty()) {
      ChoiceChain chain;
      for (std::size_t f = 0; f + 1 < stack_.size(); ++f) {
        chain.steps.push_back(stack_[f].choices[stack_[f].next - 1]);
      }
      stack_.pop_back();
      ++yielded_;
      return chain;
    }
    if (top.next < top.choices.size()) {
      const ChainStep step = top.choices[top.next++];
      push(top.shape.replace(step.component, perpendicular_step(step.algebra, step.module)));
      continue;
    }
    stack_.pop_back();
  }
  return std::nullopt;
}

AlgebraId family_algebra(SeqFamily family, int n) {
  if (n == 0 && family == SeqFamily::G) return Gamma(0, 0);
  if (n < 1) throw InvalidArgument("family index must be at least 1");
  switch (family) {
    case SeqFamily::G: return canonical(Family::LinearGamma, n, 2);
    case SeqFamily::L: return Lambda(n, 2);
    case SeqFamily::H: return canonical(Family::CyclicLambda, n, n);
    case SeqFamily::K: return canonical(Family::LinearGamma, n, std::max(n - 1, 1));
  }
  throw InvalidArgument("unknown family");
}

std::vector<Count> sequence_table(SeqFamily family, int n_max, bool parallel) {
  if (n_max < 1) throw InvalidArgument("n_max must be at least 1");
  std::vector<Count> out(static_cast<std::size_t>(n_max));
  if (!parallel) {
    for (int n = 1; n <= n_max; ++n) out[n - 1] = count_algebra(family_algebra(family, n));
    return out;
  }
  std::vector<std::future<Count>> jobs;
  for (int n = 1; n <= n_max; ++n) {
    jobs.push_back(std::async(std::launch::async, [family, n] { return count_algebra(family_algebra(family, n)); }));
  }
  for (std::size_t k = 0; k < jobs.size(); ++k) out[k] = jobs[k].get();
  return out;
}

}  // namespace tauex
