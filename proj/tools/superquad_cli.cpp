// Copyright 2026 The superquad Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "superquad/claims.hpp"
#include "superquad/demo.hpp"
#include "superquad/errors.hpp"
#include "superquad/function.hpp"
#include "superquad/json_io.hpp"
#include "superquad/positive_map.hpp"
#include "superquad/random.hpp"
#include "superquad/search.hpp"

namespace {

using namespace superquad;

enum ExitCode : int {
  kOk = 0,
  kViolation = 1,
  kUsage = 2,
  kExhausted = 3,
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const Json& j, const std::string& out_path, int indent = -1) {
  const std::string text = j.dump(indent);
  std::cout << text << '\n';
  if (out_path.empty()) return;
  std::ofstream out(out_path);
  if (!out) throw UsageError("cannot open --out file '" + out_path + "'");
  out << text << '\n';
}

struct CheckArgs {
  std::string claim;
  std::string fn;
  std::size_t dim = 2;
  int trials = 100;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::string map;
  std::optional<double> tol;
  std::string out;
  bool no_timing = false;
};

int run_check(const CheckArgs& a) {
  SuiteConfig cfg;
  cfg.claim = a.claim;
  cfg.fn = FunctionSpec::parse(a.fn);
  cfg.dim = a.dim;
  cfg.trials = a.trials;
  cfg.seed = a.seed;
  cfg.stream = a.stream;
  if (!a.map.empty()) cfg.map = MapDescriptor::parse(a.map);
  cfg.tolerance = a.tol;
  cfg.timing = !a.no_timing;
  const ClaimReport r = run_suite(cfg);
  emit(r.to_json(), a.out);
  return r.holds() ? kOk : kViolation;
}

struct SearchArgs {
  std::string claim;
  std::string relax;
  std::string fn;
  long budget = 10000;
  std::size_t dim = 2;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::string out;
};

Json witness_json(const SearchWitness& w) {
  Json j = Json::object();
  if (w.iv) {
    j["m"] = w.iv->lower;
    j["M"] = w.iv->upper;
  }
  for (const auto& [name, m] : w.matrices) j[name] = matrix_to_json(m);
  return j;
}

int run_search(const SearchArgs& a) {
  const FunctionSpec f = FunctionSpec::parse(a.fn);
  if (a.budget < 1) throw UsageError("--budget must be >= 1");
  Rng rng(a.seed, a.stream);
  const SearchOptions opts;
  const SearchOutcome o = search_counterexample(a.claim, a.relax, f, a.dim, a.budget, rng, opts);

  Json j;
  j["claim"] = o.claim;
  j["relax"] = o.relaxation;
  j["function"] = f.to_string();
  j["dim"] = a.dim;
  j["budget"] = a.budget;
  j["seed"] = a.seed;
  j["stream"] = a.stream;
  j["status"] = o.found ? "found" : "exhausted";
  j["evaluations"] = o.evaluations;
  j["margin"] = number_to_json(o.margin);
  j["scale"] = o.scale;
  j["threshold"] = opts.threshold;
  if (o.witness) {
    Json w = witness_json(*o.witness);
    w["reevaluated_margin"] = number_to_json(reevaluate_witness(a.claim, a.relax, f, *o.witness));
    j[o.found ? "witness" : "best"] = std::move(w);
  }
  emit(j, a.out);
  return o.found ? kOk : kExhausted;
}

int run_list(const std::string& what) {
  if (what == "claims") {
    for (const auto& c : claim_registry()) {
      std::cout << c.id << '\t' << (c.kind == ClaimKind::kScalar ? "scalar" : "operator")
                << (c.takes_map ? "\tmap" : "\t-") << '\t' << c.summary << '\n';
    }
  } else if (what == "functions") {
    std::cout << "pow:<p>\tf(t) = t^p, p > 0; superquadratic for p >= 2\n"
              << "negpow:<q>\tf(t) = -t^q, q > 0; superquadratic for 1 <= q <= 2\n";
  } else if (what == "maps") {
    for (const auto& d : default_map_family()) std::cout << d.to_string() << "\t(default family)\n";
    std::cout << "pinch:<k>\tpinching onto k contiguous diagonal blocks\n"
              << "conj:<seed>\tX -> U^T X U for a Haar orthogonal U drawn from <seed>\n"
              << "mix:<k>:<seed>\tconvex mixture of k orthogonal conjugations\n";
  } else {
    throw UsageError("list expects claims, functions or maps");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks superquadratic Mercer and Hermite-Hadamard inequalities"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "run a randomized claim suite");
  check_cmd->add_option("--claim", check.claim, "claim id (see `list claims`)")->required();
  check_cmd->add_option("--fn", check.fn, "function, e.g. pow:3 or negpow:1.5")->required();
  check_cmd->add_option("--dim", check.dim, "matrix order for operator claims")
      ->check(CLI::Range(1, 64));
  check_cmd->add_option("--trials", check.trials, "number of sampled instances")
      ->check(CLI::PositiveNumber);
  check_cmd->add_option("--seed", check.seed, "RNG seed");
  check_cmd->add_option("--stream", check.stream, "RNG stream id");
  check_cmd->add_option("--map", check.map, "positive map (see `list maps`)");
  check_cmd->add_option("--tol", check.tol, "relative tolerance");
  check_cmd->add_option("--out", check.out, "also write the report to this file");
  check_cmd->add_flag("--no-timing", check.no_timing, "omit wall_time_ms from the report");

  auto* demo_cmd = app.add_subcommand("demo", "replay a worked example");
  std::string demo_name;
  bool demo_pretty = false;
  demo_cmd->add_option("name", demo_name, "example name")
      ->required()
      ->check(CLI::IsMember({"paper-example"}));
  demo_cmd->add_flag("--pretty", demo_pretty, "indent the JSON output");

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "look for a counterexample");
  search_cmd->add_option("--claim", search.claim, "midpoint-op or mercer-op")->required();
  search_cmd->add_option("--relax", search.relax, "hypothesis to drop: sandwich, sum or none")
      ->required();
  search_cmd->add_option("--fn", search.fn, "function, e.g. pow:3")->required();
  search_cmd->add_option("--budget", search.budget, "maximum margin evaluations");
  search_cmd->add_option("--dim", search.dim, "matrix order")->check(CLI::Range(1, 16));
  search_cmd->add_option("--seed", search.seed, "RNG seed");
  search_cmd->add_option("--stream", search.stream, "RNG stream id");
  search_cmd->add_option("--out", search.out, "also write the result to this file");

  std::string list_what;
  auto* list_cmd = app.add_subcommand("list", "list claims, functions or maps");
  list_cmd->add_option("what", list_what, "claims | functions | maps")
      ->required()
      ->check(CLI::IsMember({"claims", "functions", "maps"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check_cmd) return run_check(check);
    if (*search_cmd) return run_search(search);
    if (*list_cmd) return run_list(list_what);
    const DemoResult d = demo_worked_example();
    std::cout << d.to_json().dump(demo_pretty ? 2 : -1) << '\n';
    return d.passed() ? kOk : kViolation;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
