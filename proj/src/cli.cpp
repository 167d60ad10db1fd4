#include "tauex/cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "tauex/enumeration.hpp"
#include "tauex/error.hpp"
#include "tauex/nakayama.hpp"
#include "tauex/perpendicular.hpp"
#include "tauex/serialize.hpp"
#include "tauex/verify.hpp"

namespace tauex {

namespace {

const std::vector<std::string> kFamilies = {"gamma2", "gamman1", "lambda2", "lambdan", "gamma", "lambda"};

struct AlgebraChoice {
  AlgebraId algebra;
  std::string note;  // non-empty when a convention was applied
};

AlgebraChoice resolve_algebra(const std::string& family, int n, std::optional<int> t) {
  if (n < 1) throw InvalidArgument("--n must be at least 1");
  if (family == "gamma2") {
    if (n == 1) return {Gamma(1, 1), "Gamma(1,2) is the one-vertex algebra Gamma(1,1)"};
    return {Gamma(n, 2), {}};
  }
  if (family == "lambda2") return {Lambda(n, 2), {}};
  if (family == "lambdan") return {canonical(Family::CyclicLambda, n, n), {}};
  if (family == "gamman1") {
    if (n == 1) return {Gamma(1, 1), "K_1 = 1 by convention (Gamma(1,1))"};
    if (n == 2) return {Gamma(2, 1), "K_2 = 2 by convention (semisimple Gamma(2,1))"};
    return {Gamma(n, n - 1), {}};
  }
  if (family == "gamma" || family == "lambda") {
    if (!t) throw InvalidArgument("--family " + family + " needs --t");
    return {family == "gamma" ? Gamma(n, *t) : Lambda(n, *t), {}};
  }
  throw InvalidArgument("unknown family " + family);
}

std::optional<SeqFamily> sequence_family(const std::string& family) {
  if (family == "gamma2") return SeqFamily::G;
  if (family == "lambda2") return SeqFamily::L;
  if (family == "lambdan") return SeqFamily::H;
  if (family == "gamman1") return SeqFamily::K;
  return std::nullopt;
}

struct AlgebraArgs {
  std::string family;
  int n = 0;
  std::optional<int> t;
};

void add_algebra_options(CLI::App* cmd, AlgebraArgs& args) {
  cmd->add_option("--family", args.family, "gamma2 | gamman1 | lambda2 | lambdan | gamma | lambda")
      ->required()
      ->check(CLI::IsMember(kFamilies));
  cmd->add_option("--n", args.n, "number of vertices")->required();
  cmd->add_option("--t", args.t, "nilpotency index (families gamma and lambda)");
}

std::string modules_line(const AlgebraId& a, const std::vector<Indecomposable>& mods) {
  std::string out;
  for (std::size_t k = 0; k < mods.size(); ++k) {
    if (k > 0) out += ", ";
    out += composition_label(a, mods[k]);
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts and verifies complete tau-exceptional sequences over Nakayama algebras", "tauex"};
  app.require_subcommand(1);

  std::string format = "human";
  bool json = false;

  AlgebraArgs count_args;
  auto* count_cmd = app.add_subcommand("count", "count complete sequences of one algebra");
  add_algebra_options(count_cmd, count_args);
  count_cmd->add_flag("--json", json, "emit JSON");

  AlgebraArgs table_args;
  int table_n_max = 0;
  bool parallel = false;
  std::string table_format = "csv";
  auto* table_cmd = app.add_subcommand("table", "counts for n = 1..n-max");
  table_cmd->add_option("--family", table_args.family, "gamma2 | gamman1 | lambda2 | lambdan")
      ->required()
      ->check(CLI::IsMember({"gamma2", "gamman1", "lambda2", "lambdan"}));
  table_cmd->add_option("--n-max", table_n_max)->required();
  table_cmd->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json", "human"}));
  table_cmd->add_flag("--parallel", parallel, "compute rows concurrently");

  AlgebraArgs jcat_args;
  Indecomposable jcat_module;
  auto* jcat_cmd = app.add_subcommand("jcat", "tau-perpendicular category of one module");
  add_algebra_options(jcat_cmd, jcat_args);
  jcat_cmd->add_option("--top", jcat_module.top)->required();
  jcat_cmd->add_option("--len", jcat_module.len)->required();
  jcat_cmd->add_flag("--json", json);

  AlgebraArgs bong_args;
  Indecomposable bong_module;
  bool check = false;
  auto* bong_cmd = app.add_subcommand("bongartz", "Bongartz completion of one module");
  add_algebra_options(bong_cmd, bong_args);
  bong_cmd->add_option("--top", bong_module.top)->required();
  bong_cmd->add_option("--len", bong_module.len)->required();
  bong_cmd->add_flag("--check", check, "compare against the closed-form completion");
  bong_cmd->add_flag("--json", json);

  AlgebraArgs enum_args;
  std::optional<std::uint64_t> limit;
  std::string enum_format = "json";
  auto* enum_cmd = app.add_subcommand("enumerate", "stream complete sequences as JSON lines");
  add_algebra_options(enum_cmd, enum_args);
  enum_cmd->add_option("--limit", limit);
  enum_cmd->add_option("--format", enum_format)->check(CLI::IsMember({"json", "human"}));
  enum_cmd->add_flag("--json", json);

  std::string suite;
  SuiteOptions suite_options;
  auto* verify_cmd = app.add_subcommand("verify", "run an invariant suite");
  verify_cmd->add_option("--suite", suite, "egf | fubini | closedform | bongartz | interleaving | hom | rigidity")
      ->required();
  verify_cmd->add_option("--order", suite_options.order);
  verify_cmd->add_option("--n-max", suite_options.n_max);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*count_cmd) {
      const auto choice = resolve_algebra(count_args.family, count_args.n, count_args.t);
      const Count c = count_algebra(choice.algebra);
      if (json) {
        Json j;
        j["algebra"] = to_json(choice.algebra);
        j["count"] = c.get_str();
        if (!choice.note.empty()) j["note"] = choice.note;
        out << j.dump() << "\n";
      } else {
        out << c.get_str() << "\n";
        if (!choice.note.empty()) err << "note: " << choice.note << "\n";
      }
      return kExitOk;
    }

    if (*table_cmd) {
      const auto family = *sequence_family(table_args.family);
      const auto values = sequence_table(family, table_n_max, parallel);
      if (table_format == "json") {
        Json rows = Json::array();
        for (std::size_t k = 0; k < values.size(); ++k) {
          Json row;
          row["n"] = k + 1;
          row["count"] = values[k].get_str();
          rows.push_back(std::move(row));
        }
        out << rows.dump() << "\n";
      } else {
        if (table_format == "csv") out << "n,count\n";
        const char sep = table_format == "csv" ? ',' : ' ';
        for (std::size_t k = 0; k < values.size(); ++k) out << k + 1 << sep << values[k].get_str() << "\n";
      }
      return kExitOk;
    }

    if (*jcat_cmd) {
      const auto choice = resolve_algebra(jcat_args.family, jcat_args.n, jcat_args.t);
      require_valid(choice.algebra, jcat_module);
      const auto shape = j_category(choice.algebra, jcat_module);
      out << (json ? to_json(shape).dump() : to_string(shape)) << "\n";
      return kExitOk;
    }

    if (*bong_cmd) {
      const auto choice = resolve_algebra(bong_args.family, bong_args.n, bong_args.t);
      const AlgebraId& a = choice.algebra;
      require_valid(a, bong_module);
      const auto summands = bongartz(a, bong_module);
      std::optional<bool> verdict;
      if (check) verdict = verify_bongartz_closed_form(a, bong_module);
      if (json) {
        Json j;
        j["algebra"] = to_json(a);
        j["module"] = to_json(bong_module);
        Json list = Json::array();
        for (const auto& m : summands) list.push_back(to_json(m));
        j["summands"] = std::move(list);
        if (verdict) j["check"] = *verdict ? "PASS" : "FAIL";
        out << j.dump() << "\n";
      } else {
        out << modules_line(a, summands) << "\n";
        if (verdict) out << (*verdict ? "PASS" : "FAIL") << "\n";
      }
      return verdict.value_or(true) ? kExitOk : kExitVerificationFailed;
    }

    if (*enum_cmd) {
      const auto choice = resolve_algebra(enum_args.family, enum_args.n, enum_args.t);
      ChainStream stream(CategoryShape{choice.algebra}, limit);
      const bool human = enum_format == "human" && !json;
      while (auto chain = stream.next()) {
        if (human) {
          std::string line;
          for (const auto& s : chain->steps) {
            if (!line.empty()) line += " ";
            line += std::to_string(s.component) + ":" + to_string(s.module);
          }
          out << line << "\n";
        } else {
          out << to_json(*chain).dump() << "\n";
        }
      }
      return kExitOk;
    }

    if (*verify_cmd) {
      const auto result = run_suite(suite, suite_options);
      if (!result) {
        err << "error: unknown suite '" << suite << "'\n";
        return kExitUsage;
      }
      for (const auto& c : result->checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) out << " (" << c.detail << ")";
        out << "\n";
      }
      for (const auto& note : result->notes) out << "NOTE " << note << "\n";
      const auto failed = std::count_if(result->checks.begin(), result->checks.end(),
                                        [](const CheckResult& c) { return !c.passed; });
      out << (result->passed() ? "PASS" : "FAIL") << " suite " << result->suite << ": "
          << result->checks.size() - static_cast<std::size_t>(failed) << "/" << result->checks.size()
          << " checks\n";
      return result->passed() ? kExitOk : kExitVerificationFailed;
    }
  } catch (const UnsupportedFamily& e) {
    err << "unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tauex
