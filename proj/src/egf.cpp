#include "tauex/egf.hpp"

#include <algorithm>
#include <utility>

#include "tauex/enumeration.hpp"
#include "tauex/error.hpp"

namespace tauex {

namespace {

mpz_class factorial(int n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

void require_same_order(const TruncatedEGF& f, const TruncatedEGF& g) {
  if (f.order() != g.order()) throw InvalidArgument("series orders differ");
}

void require_terms(const std::vector<mpz_class>& seq, int needed, const char* name) {
  if (static_cast<int>(seq.size()) < needed) {
    throw InvalidArgument(std::string("not enough terms for sequence ") + name);
  }
}

}  // namespace

TruncatedEGF::TruncatedEGF(int order) {
  if (order < 0) throw InvalidArgument("series order must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, 0);
}

TruncatedEGF::TruncatedEGF(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidArgument("series needs at least one coefficient");
}

TruncatedEGF TruncatedEGF::from_sequence(const std::vector<mpz_class>& seq, int order) {
  TruncatedEGF f(order);
  for (int k = 0; k <= order && k < static_cast<int>(seq.size()); ++k) {
    f.coeffs_[k] = mpq_class(seq[k], factorial(k));
    f.coeffs_[k].canonicalize();
  }
  return f;
}

TruncatedEGF TruncatedEGF::constant(const mpq_class& c, int order) {
  TruncatedEGF f(order);
  f.coeffs_[0] = c;
  return f;
}

TruncatedEGF TruncatedEGF::x(int order) {
  TruncatedEGF f(order);
  if (order >= 1) f.coeffs_[1] = 1;
  return f;
}

mpq_class TruncatedEGF::coefficient_times_factorial(int k) const { return (*this)[k] * factorial(k); }

TruncatedEGF TruncatedEGF::truncate(int order) const {
  if (order > this->order()) throw InvalidArgument("cannot raise the order of a truncated series");
  return TruncatedEGF(std::vector<mpq_class>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedEGF operator+(const TruncatedEGF& f, const TruncatedEGF& g) {
  require_same_order(f, g);
  TruncatedEGF out = f;
  for (std::size_t k = 0; k < out.coeffs_.size(); ++k) out.coeffs_[k] += g.coeffs_[k];
  return out;
}

TruncatedEGF operator-(const TruncatedEGF& f, const TruncatedEGF& g) { return f + (-g); }

TruncatedEGF TruncatedEGF::operator-() const {
  TruncatedEGF out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

TruncatedEGF operator*(const TruncatedEGF& f, const TruncatedEGF& g) {
  require_same_order(f, g);
  const int n = f.order();
  TruncatedEGF out(n);
  for (int k = 0; k <= n; ++k) {
    mpq_class sum = 0;
    for (int l = 0; l <= k; ++l) sum += f.coeffs_[l] * g.coeffs_[k - l];
    out.coeffs_[k] = sum;
  }
  return out;
}

TruncatedEGF add(const TruncatedEGF& f, const TruncatedEGF& g) { return f + g; }
TruncatedEGF mul(const TruncatedEGF& f, const TruncatedEGF& g) { return f * g; }

TruncatedEGF scale(const TruncatedEGF& f, const mpq_class& c) {
  std::vector<mpq_class> coeffs = f.coeffs();
  for (auto& v : coeffs) v *= c;
  return TruncatedEGF(std::move(coeffs));
}

TruncatedEGF derivative(const TruncatedEGF& f) {
  if (f.order() == 0) throw InvalidArgument("derivative of an order-0 series has no coefficients");
  std::vector<mpq_class> coeffs(static_cast<std::size_t>(f.order()));
  for (int k = 1; k <= f.order(); ++k) coeffs[k - 1] = f[k] * k;
  return TruncatedEGF(std::move(coeffs));
}

TruncatedEGF shift_mul_x(const TruncatedEGF& f) {
  std::vector<mpq_class> coeffs(f.coeffs().size(), 0);
  for (int k = 1; k <= f.order(); ++k) coeffs[k] = f[k - 1];
  return TruncatedEGF(std::move(coeffs));
}

TruncatedEGF inverse(const TruncatedEGF& f) {
  if (f[0] == 0) throw ZeroConstantTerm("series with zero constant term has no inverse");
  const int n = f.order();
  std::vector<mpq_class> g(static_cast<std::size_t>(n) + 1, 0);
  g[0] = 1 / f[0];
  for (int k = 1; k <= n; ++k) {
    mpq_class sum = 0;
    for (int l = 1; l <= k; ++l) sum += f[l] * g[k - l];
    g[k] = -sum / f[0];
  }
  return TruncatedEGF(std::move(g));
}

TruncatedEGF exp(const TruncatedEGF& f) {
  if (f[0] != 0) throw InvalidArgument("exp needs a series with zero constant term");
  // E' = f' E  =>  k e_k = Σ_{j=1}^{k} j f_j e_{k-j}.
  const int n = f.order();
  std::vector<mpq_class> e(static_cast<std::size_t>(n) + 1, 0);
  e[0] = 1;
  for (int k = 1; k <= n; ++k) {
    mpq_class sum = 0;
    for (int j = 1; j <= k; ++j) sum += j * f[j] * e[k - j];
    e[k] = sum / k;
  }
  return TruncatedEGF(std::move(e));
}

TruncatedEGF tree_series(int order) {
  std::vector<mpz_class> seq(static_cast<std::size_t>(order) + 1, 0);
  for (int n = 1; n <= order; ++n) {
    mpz_ui_pow_ui(seq[n].get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n - 1));
  }
  return TruncatedEGF::from_sequence(seq, order);
}

TruncatedEGF exp_neg_w(int order) {
  std::vector<mpz_class> seq(static_cast<std::size_t>(order) + 1, 1);
  for (int b = 2; b <= order; ++b) {
    mpz_ui_pow_ui(seq[b].get_mpz_t(), static_cast<unsigned long>(b + 1), static_cast<unsigned long>(b - 1));
  }
  return TruncatedEGF::from_sequence(seq, order);
}

std::string to_string(Identity id) {
  switch (id) {
    case Identity::GFubini: return "GFubini";
    case Identity::LfromG: return "LfromG";
    case Identity::HTree: return "HTree";
    case Identity::TreeFixedPoint: return "TreeFixedPoint";
    case Identity::KODE: return "KODE";
  }
  return "?";
}

std::optional<Identity> identity_from_string(const std::string& name) {
  for (Identity id : {Identity::GFubini, Identity::LfromG, Identity::HTree, Identity::TreeFixedPoint, Identity::KODE}) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

bool IdentityReport::holds_between(int lo, int hi) const {
  if (lo < 0 || hi >= static_cast<int>(per_order.size())) return false;
  for (int k = lo; k <= hi; ++k) {
    if (!per_order[k]) return false;
  }
  return true;
}

IdentityReport compare_series(Identity id, const TruncatedEGF& lhs, const TruncatedEGF& rhs) {
  require_same_order(lhs, rhs);
  IdentityReport report;
  report.identity = id;
  report.order = lhs.order();
  for (int k = 0; k <= lhs.order(); ++k) {
    const bool ok = lhs[k] == rhs[k];
    report.per_order.push_back(ok);
    if (!ok && !report.first_mismatch) report.first_mismatch = Mismatch{k, lhs[k], rhs[k]};
    if (ok && !report.first_mismatch) report.holds_to = k;
  }
  return report;
}

IdentityInputs inputs_from_counts(int order) {
  IdentityInputs in;
  const int terms = order + 2;
  in.g.push_back(1);
  in.l.push_back(0);
  in.h.push_back(1);
  in.k.push_back(0);
  for (int n = 1; n < terms; ++n) {
    in.g.push_back(count_algebra(family_algebra(SeqFamily::G, n)));
    in.l.push_back(count_algebra(family_algebra(SeqFamily::L, n)));
    in.h.push_back(count_algebra(family_algebra(SeqFamily::H, n)));
    in.k.push_back(count_algebra(family_algebra(SeqFamily::K, n)));
  }
  return in;
}

IdentityReport verify_identity(Identity id, int order, const IdentityInputs& in) {
  if (order < 0) throw InvalidArgument("order must be nonnegative");
  const auto one = TruncatedEGF::constant(1, order);
  const auto x = TruncatedEGF::x(order);
  const auto denominator = one - x - scale(x * x, mpq_class(1, 2));

  switch (id) {
    case Identity::GFubini: {
      require_terms(in.g, order + 1, "G");
      return compare_series(id, TruncatedEGF::from_sequence(in.g, order), inverse(denominator));
    }
    case Identity::LfromG: {
      require_terms(in.l, order + 1, "L");
      return compare_series(id, TruncatedEGF::from_sequence(in.l, order), (x + x * x) * inverse(denominator));
    }
    case Identity::HTree: {
      require_terms(in.h, order + 1, "H");
      const auto h = TruncatedEGF::from_sequence(in.h, order);
      return compare_series(id, h * (one - tree_series(order)), one);
    }
    case Identity::TreeFixedPoint: {
      const auto t = tree_series(order);
      return compare_series(id, t, x * exp(t));
    }
    case Identity::KODE: {
      require_terms(in.k, order + 2, "K");
      // h' needs one extra coefficient of h.
      const auto h = TruncatedEGF::from_sequence(in.k, order + 1);
      const auto hp = derivative(h);
      const auto hh = h.truncate(order);
      const auto g = exp_neg_w(order);
      const auto w = -tree_series(order);  // W(-x)
      const auto lhs = hp * (one - x * g) + hh * g;
      const auto rhs = scale(g * g, 2) - g + w + scale(x * w, mpq_class(1, 2));
      return compare_series(id, lhs, rhs);
    }
  }
  throw InvalidArgument("unknown identity");
}

IdentityReport verify_identity(Identity id, int order) {
  return verify_identity(id, order, inputs_from_counts(order));
}

}  // namespace tauex
