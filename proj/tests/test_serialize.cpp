#include <doctest.h>

#include "tauex/serialize.hpp"

using namespace tauex;

TEST_SUITE("serialize") {

TEST_CASE("round trips") {
  for (auto a : {Gamma(3, 2), Lambda(4, 4), Gamma(0, 1)}) CHECK(algebra_from_json(to_json(a)) == a);
  CHECK(module_from_json(to_json(Indecomposable{2, 3})) == Indecomposable{2, 3});
  CHECK(to_json(Gamma(3, 2)).dump() == R"({"family":"gamma","n":3,"t":2})");
  CHECK(to_json(CategoryShape{}).dump() == "[]");
}

TEST_CASE("identity report") {
  const auto j = to_json(verify_identity(Identity::GFubini, 6));
  CHECK(j["identity"] == "GFubini");
  CHECK(j["holds_to"] == 6);
  CHECK(j["first_mismatch"].is_null());
}

TEST_CASE("composition labels") {
  CHECK(composition_label(Gamma(3, 2), {1, 2}) == "1/2");
  CHECK(composition_label(Lambda(3, 3), {3, 2}) == "3/1");
  CHECK(composition_label(Gamma(3, 2), {3, 1}) == "3");
}

}  // TEST_SUITE
