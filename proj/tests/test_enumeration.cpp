#include <set>

#include <doctest.h>

#include "oracles.hpp"
#include "tauex/enumeration.hpp"
#include "tauex/error.hpp"
#include "tauex/verify.hpp"

using namespace tauex;

TEST_SUITE("enumeration") {

TEST_CASE("leaves") {
  CHECK(is_leaf(Gamma(3, 3)));
  CHECK(is_leaf(Gamma(4, 1)));
  CHECK_FALSE(is_leaf(Gamma(3, 2)));
  CHECK(leaf_count(Gamma(3, 3)) == 16);
  CHECK(leaf_count(Gamma(0, 0)) == 1);
  CHECK(leaf_count(Gamma(1, 1)) == 1);
  CHECK(leaf_count(Gamma(2, 1)) == 2);
  CHECK(leaf_count(Gamma(4, 1)) == 24);
}

TEST_CASE("leaf counts agree with the naive recursion") {
  for (int m = 0; m <= 6; ++m) {
    CHECK(count_shape_naive(CategoryShape{Gamma(m, std::max(m, 1))}) == leaf_count(canonical(Family::LinearGamma, m, m)));
    if (m >= 1) CHECK(count_shape_naive(CategoryShape{Gamma(m, 1)}) == leaf_count(Gamma(m, 1)));
  }
}

TEST_CASE("multinomial") {
  CHECK(multinomial({2, 1}) == 3);
  CHECK(multinomial({1, 1, 1}) == 6);
  CHECK(multinomial({}) == 1);
  for (int n = 1; n <= 12; ++n) {
    for (int i = 1; i <= n; ++i) CHECK(multinomial({n - i, i - 1}) == oracle::binom(n - 1, i - 1));
  }
}

TEST_CASE("count examples") {
  CHECK(count_algebra(Gamma(3, 2)) == 12);
  CHECK(count_algebra(Lambda(3, 3)) == 27);
  CHECK(count_algebra(Gamma(4, 3)) == 102);
  CHECK(count_shape(CategoryShape{Gamma(1, 1), Gamma(2, 2)}) == 9);
  CHECK(count_shape(CategoryShape{}) == 1);
  CHECK(count_shape(CategoryShape{Gamma(2, 2), Gamma(2, 2)}) == 54);
  CHECK(count_shape_naive(CategoryShape{Gamma(3, 2)}) == 12);
  CHECK(count_shape_naive(CategoryShape{}) == 1);
  CHECK(count_shape_naive(CategoryShape{Gamma(1, 1), Gamma(2, 2)}) == 9);
  CHECK_THROWS_AS(count_algebra(Lambda(5, 3)), UnsupportedFamily);
}

TEST_CASE("families against the recurrences") {
  const auto g = oracle::G(12);
  const auto l = oracle::L(12);
  const auto h = oracle::H(9);
  const auto k = oracle::K(10);
  for (int n = 1; n <= 12; ++n) {
    CHECK(count_algebra(family_algebra(SeqFamily::G, n)) == g[n]);
    CHECK(count_algebra(family_algebra(SeqFamily::L, n)) == l[n]);
  }
  for (int n = 1; n <= 9; ++n) CHECK(count_algebra(family_algebra(SeqFamily::H, n)) == h[n]);
  for (int n = 1; n <= 10; ++n) CHECK(count_algebra(family_algebra(SeqFamily::K, n)) == k[n]);
  CHECK(k[4] == 102);
  CHECK(h[5] == 3125);
}

TEST_CASE("both dispatches on overlapping algebras") {
  Counter c;
  CHECK(c.count_algebra(Lambda(2, 2), PerpRule::LambdaTwo) == 4);
  CHECK(c.count_algebra(Lambda(2, 2), PerpRule::LambdaN) == 4);
  CHECK(c.count_algebra(Gamma(3, 2), PerpRule::GammaTwo) == 12);
  CHECK(c.count_algebra(Gamma(3, 2), PerpRule::GammaNMinusOne) == 12);
}

TEST_CASE("memoized and plain counters agree") {
  Counter memo(true);
  Counter plain(false);
  for (const auto& a : counting_family_algebras(7)) CHECK(memo.count_algebra(a) == plain.count_algebra(a));
  CHECK(memo.cache_size() > 0);
  CHECK(plain.cache_size() == 0);
}

TEST_CASE("sequence tables") {
  const std::vector<Count> g{1, 3, 12, 66, 450, 3690, 35280, 385560, 4740120};
  CHECK(sequence_table(SeqFamily::G, 9) == g);
  const std::vector<Count> l{1, 4, 15, 84, 570, 4680, 44730, 488880, 6010200, 82101600};
  CHECK(sequence_table(SeqFamily::L, 10, true) == l);
  const std::vector<Count> h{1, 4, 27, 256, 3125};
  CHECK(sequence_table(SeqFamily::H, 5) == h);
  CHECK(sequence_table(SeqFamily::K, 4) == std::vector<Count>{1, 2, 12, 102});
}

TEST_CASE("chain stream") {
  ChainStream a2(CategoryShape{Gamma(2, 2)});
  const auto first = a2.next();
  REQUIRE(first.has_value());
  CHECK(first->steps.front().component == 0);
  CHECK(first->steps.front().module == Indecomposable{1, 1});
  int n = 1;
  while (a2.next()) ++n;
  CHECK(n == 3);

  ChainStream one(CategoryShape{Gamma(1, 1)});
  CHECK(one.next().has_value());
  CHECK_FALSE(one.next().has_value());

  ChainStream limited(CategoryShape{Gamma(3, 2)}, 5);
  while (limited.next()) {}
  CHECK(limited.yielded() == 5);
}

TEST_CASE("chains are distinct, valid and counted by count_shape") {
  for (const auto& s : reachable_shapes(5)) {
    CAPTURE(to_string(s));
    ChainStream stream(s);
    std::set<std::string> seen;
    std::uint64_t total = 0;
    while (auto c = stream.next()) {
      ++total;
      CHECK(static_cast<int>(c->steps.size()) == s.rank());
      CHECK(is_valid_chain(s, *c));
      std::string key;
      for (const auto& st : c->steps) key += std::to_string(st.component) + to_string(st.module) + ";";
      seen.insert(key);
    }
    CHECK(seen.size() == total);
    CHECK(count_shape(s) == total);
  }
}

TEST_CASE("interleaving on reachable shapes") {
  const auto shapes = reachable_shapes(6);
  CHECK(shapes.size() > 150);
  for (const auto& s : shapes) CHECK(count_shape(s) == count_shape_naive(s));
}

}  // TEST_SUITE
