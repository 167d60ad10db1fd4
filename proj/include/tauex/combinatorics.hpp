#pragma once

#include <gmpxx.h>

#include "tauex/quadratic_field.hpp"

namespace tauex {

/// Ordered set partitions of {1..n} into blocks of size at most m, by
/// F(n) = Σ_{l=1}^{m} C(n, l) F(n - l), F(0) = 1.
mpz_class restricted_fubini(int n, int m);

/// The same count by enumerating restricted-growth strings with block sizes
/// at most m and weighting each k-block partition by k!.
mpz_class ordered_partitions_count_bruteforce(int n, int m);

/// Unordered partitions of {1..n} into k blocks of size at most m.
mpz_class restricted_stirling(int n, int k, int m);

/// Acyclic functions {1..b} -> {1..a+b}: a (a+b)^(b-1).
mpz_class acyclic_count(int a, int b);
mpz_class acyclic_count_bruteforce(int a, int b);

/// n!/√3 ((√3-1)^{-n-1} - (-√3-1)^{-n-1}), evaluated in Q(√3).
mpz_class g_closed(int n);

/// n G_{n-1} + n(n-1) G_{n-2} written through the G closed form:
/// n!/√3 ((√3-1)^{-n} - (-√3-1)^{-n}) + n!/√3 ((√3-1)^{-n+1} - (-√3-1)^{-n+1}).
mpz_class l_closed(int n);

/// n!/√3 ((√3-1)^e - (-√3-1)^e) without the integrality check.
QuadExtValue sqrt3_difference_term(int n, long exponent);

}  // namespace tauex
