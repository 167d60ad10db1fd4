#include "tauex/serialize.hpp"

#include "tauex/error.hpp"
#include "tauex/nakayama.hpp"

namespace tauex {

Json to_json(const AlgebraId& a) {
  Json j;
  j["family"] = a.is_gamma() ? "gamma" : "lambda";
  j["n"] = a.n;
  j["t"] = a.t;
  return j;
}

Json to_json(const Indecomposable& m) {
  Json j;
  j["top"] = m.top;
  j["len"] = m.len;
  return j;
}

Json to_json(const CategoryShape& s) {
  Json j = Json::array();
  for (const auto& c : s.components()) j.push_back(to_json(c));
  return j;
}

Json to_json(const ChoiceChain& c) {
  Json steps = Json::array();
  for (const auto& s : c.steps) {
    Json step;
    step["component"] = s.component;
    step["algebra"] = to_json(s.algebra);
    step["module"] = to_json(s.module);
    steps.push_back(std::move(step));
  }
  Json j;
  j["steps"] = std::move(steps);
  return j;
}

Json to_json(const IdentityReport& r) {
  Json j;
  j["identity"] = to_string(r.identity);
  j["order"] = r.order;
  j["holds_to"] = r.holds_to;
  if (r.first_mismatch) {
    Json m;
    m["order"] = r.first_mismatch->order;
    m["lhs"] = r.first_mismatch->lhs.get_str();
    m["rhs"] = r.first_mismatch->rhs.get_str();
    j["first_mismatch"] = std::move(m);
  } else {
    j["first_mismatch"] = nullptr;
  }
  return j;
}

AlgebraId algebra_from_json(const Json& j) {
  const std::string family = j.at("family").get<std::string>();
  if (family != "gamma" && family != "lambda") throw InvalidArgument("unknown family " + family);
  AlgebraId a{family == "gamma" ? Family::LinearGamma : Family::CyclicLambda, j.at("n").get<int>(),
              j.at("t").get<int>()};
  require_valid(a);
  return a;
}

Indecomposable module_from_json(const Json& j) { return {j.at("top").get<int>(), j.at("len").get<int>()}; }

std::string composition_label(const AlgebraId& a, const Indecomposable& m) {
  std::string out;
  for (int s = 0; s < m.len; ++s) {
    if (s > 0) out += "/";
    out += std::to_string(residue(m.top + s, a.n));
  }
  return out;
}

}  // namespace tauex
