#include "tauex/combinatorics.hpp"

#include <vector>

#include "tauex/error.hpp"

namespace tauex {

namespace {

mpz_class binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

mpz_class factorial(int n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw InvalidArgument(what);
}

// Restricted-growth strings: element k joins an existing block or opens a new
// one; block sizes are tracked so that oversized blocks are pruned early.
void grow(int k, int n, int m, std::vector<int>& sizes, mpz_class& total) {
  if (k == n) {
    total += factorial(static_cast<int>(sizes.size()));
    return;
  }
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    if (sizes[b] == m) continue;
    ++sizes[b];
    grow(k + 1, n, m, sizes, total);
    --sizes[b];
  }
  sizes.push_back(1);
  grow(k + 1, n, m, sizes, total);
  sizes.pop_back();
}

mpz_class to_integer(const QuadExtValue& v) {
  if (!v.is_integer()) throw NonIntegerResult("closed form did not reduce to an integer: " + to_string(v));
  return v.a().get_num();
}

}  // namespace

mpz_class restricted_fubini(int n, int m) {
  require(n >= 0 && m >= 1, "restricted_fubini needs n >= 0, m >= 1");
  std::vector<mpz_class> f(static_cast<std::size_t>(n) + 1);
  f[0] = 1;
  for (int k = 1; k <= n; ++k) {
    for (int l = 1; l <= std::min(m, k); ++l) f[k] += binomial(k, l) * f[k - l];
  }
  return f[n];
}

mpz_class ordered_partitions_count_bruteforce(int n, int m) {
  require(n >= 0 && m >= 1, "ordered_partitions_count_bruteforce needs n >= 0, m >= 1");
  mpz_class total = 0;
  std::vector<int> sizes;
  grow(0, n, m, sizes, total);
  return total;
}

mpz_class restricted_stirling(int n, int k, int m) {
  require(n >= 0 && k >= 0 && m >= 1, "restricted_stirling needs n, k >= 0, m >= 1");
  // s[p][q]: partitions of p elements into q blocks; the block holding the
  // first element has size l and takes l-1 companions.
  std::vector<std::vector<mpz_class>> s(n + 1, std::vector<mpz_class>(k + 1, 0));
  s[0][0] = 1;
  for (int p = 1; p <= n; ++p) {
    for (int q = 1; q <= k; ++q) {
      for (int l = 1; l <= std::min(m, p); ++l) s[p][q] += binomial(p - 1, l - 1) * s[p - l][q - 1];
    }
  }
  return s[n][k];
}

mpz_class acyclic_count(int a, int b) {
  require(a >= 1 && b >= 0, "acyclic_count needs a >= 1, b >= 0");
  if (b == 0) return 1;
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(a + b), static_cast<unsigned long>(b - 1));
  return a * p;
}

mpz_class acyclic_count_bruteforce(int a, int b) {
  require(a >= 1 && b >= 0, "acyclic_count_bruteforce needs a >= 1, b >= 0");
  const int codomain = a + b;
  // Domain is 0..b-1, codomain 0..a+b-1; f is an odometer over codomain^b.
  std::vector<int> f(static_cast<std::size_t>(b), 0);
  mpz_class count = 0;
  while (true) {
    bool acyclic = true;
    for (int x = 0; x < b && acyclic; ++x) {
      // A walk that stays inside the domain for b steps has met a cycle.
      int y = x;
      int steps = 0;
      while (y < b && steps <= b) {
        y = f[y];
        ++steps;
      }
      acyclic = y >= b;
    }
    if (acyclic) ++count;

    int pos = 0;
    while (pos < b && ++f[pos] == codomain) f[pos++] = 0;
    if (pos == b) break;
  }
  return count;
}

QuadExtValue sqrt3_difference_term(int n, long exponent) {
  const QuadExtValue plus{-1, 1};    //  √3 - 1
  const QuadExtValue minus{-1, -1};  // -√3 - 1
  const QuadExtValue diff = plus.pow(exponent) - minus.pow(exponent);
  return QuadExtValue::rational(mpq_class(factorial(n))) * diff / QuadExtValue::sqrt3();
}

mpz_class g_closed(int n) {
  require(n >= 0, "g_closed needs n >= 0");
  return to_integer(sqrt3_difference_term(n, -static_cast<long>(n) - 1));
}

mpz_class l_closed(int n) {
  require(n >= 1, "l_closed needs n >= 1");
  const long e = -static_cast<long>(n);
  return to_integer(sqrt3_difference_term(n, e) + sqrt3_difference_term(n, e + 1));
}

}  // namespace tauex
