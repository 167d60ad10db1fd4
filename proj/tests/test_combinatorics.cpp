#include <doctest.h>

#include "oracles.hpp"
#include "tauex/combinatorics.hpp"
#include "tauex/error.hpp"
#include "tauex/quadratic_field.hpp"

using namespace tauex;

TEST_SUITE("combinatorics") {

TEST_CASE("restricted fubini") {
  CHECK(restricted_fubini(2, 2) == 3);
  CHECK(restricted_fubini(0, 2) == 1);
  CHECK(restricted_fubini(4, 2) == 66);
  CHECK(ordered_partitions_count_bruteforce(2, 2) == 3);
  CHECK(ordered_partitions_count_bruteforce(3, 1) == 6);
  CHECK(ordered_partitions_count_bruteforce(5, 2) == 450);
  const auto g = oracle::G(8);
  for (int n = 0; n <= 8; ++n) {
    CHECK(ordered_partitions_count_bruteforce(n, 2) == g[n]);
    CHECK(restricted_fubini(n, 2) == g[n]);
  }
  for (int n = 0; n <= 6; ++n) {
    for (int m = 1; m <= 4; ++m) CHECK(restricted_fubini(n, m) == ordered_partitions_count_bruteforce(n, m));
  }
}

TEST_CASE("restricted stirling") {
  CHECK(restricted_stirling(2, 1, 2) == 1);
  CHECK(restricted_stirling(2, 2, 2) == 1);
  CHECK(restricted_stirling(4, 2, 2) == 3);
  CHECK(restricted_stirling(4, 1, 2) == 0);
  CHECK(restricted_stirling(0, 0, 2) == 1);
}

TEST_CASE("acyclic functions") {
  CHECK(acyclic_count(2, 1) == 2);
  CHECK(acyclic_count(3, 0) == 1);
  CHECK(acyclic_count(1, 3) == 16);
  CHECK(acyclic_count_bruteforce(1, 3) == 16);
  for (int a = 1; a <= 7; ++a) {
    for (int b = 0; a + b <= 7; ++b) CHECK(acyclic_count(a, b) == acyclic_count_bruteforce(a, b));
  }
  CHECK_THROWS_AS(acyclic_count(0, 2), InvalidArgument);
}

TEST_CASE("quadratic field arithmetic") {
  const QuadExtValue s = QuadExtValue::sqrt3();
  CHECK(s * s == QuadExtValue::rational(3));
  const QuadExtValue x{-1, 1};
  CHECK(x.norm() == -2);
  CHECK(x * x.inverse() == QuadExtValue::rational(1));
  CHECK(x.pow(-2) * x.pow(2) == QuadExtValue::rational(1));
  CHECK(x.pow(0) == QuadExtValue::rational(1));
  CHECK((x + x.conjugate()).is_integer());
  CHECK_FALSE(s.is_integer());
  CHECK_THROWS(QuadExtValue{}.inverse());
}

TEST_CASE("closed forms") {
  CHECK(g_closed(3) == 12);
  CHECK(g_closed(0) == 1);
  CHECK(l_closed(4) == 84);
  const auto g = oracle::G(30);
  const auto l = oracle::L(30);
  for (int n = 0; n <= 30; ++n) CHECK(g_closed(n) == g[n]);
  for (int n = 1; n <= 30; ++n) CHECK(l_closed(n) == l[n]);
}

TEST_CASE("exponents -n-2 and -n-3 are not integral") {
  for (int n = 0; n <= 1; ++n) {
    const auto v = sqrt3_difference_term(n, -n - 2) + sqrt3_difference_term(n, -n - 3);
    CHECK_FALSE(v.is_integer());
  }
  CHECK(sqrt3_difference_term(0, -2) + sqrt3_difference_term(0, -3) == QuadExtValue::rational(mpq_class(5, 2)));
}

}  // TEST_SUITE
