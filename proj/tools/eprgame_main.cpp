// Copyright 2026 The eprgame Authors
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
//
// Command-line front end. Exit codes: 0 success, 2 usage error, 3 invalid
// domain input, 4 parse failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eprgame/behavior.hpp"
#include "eprgame/common.hpp"
#include "eprgame/equilibrium.hpp"
#include "eprgame/game.hpp"
#include "eprgame/json_io.hpp"
#include "eprgame/quantum.hpp"
#include "eprgame/tables.hpp"

using namespace eprgame;

namespace {

// Post-parse problems that are still the caller's fault (unknown names,
// malformed flag payloads); mapped to exit code 2 like CLI11's own errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw json::other_error::create(501, "cannot read file: " + path,
                                    nullptr);
  }
  return json::parse(in);
}

std::string quad_str(double a, double b, double c, double d) {
  return "(" + format_number(a) + ", " + format_number(b) + ", " +
         format_number(c) + ", " + format_number(d) + ")";
}

std::string profile_str(const StrategyProfile& s) {
  return quad_str(s.p, s.q, s.p_prime, s.q_prime);
}

std::string payoffs_str(const PayoffQuadruple& v) {
  return quad_str(v.a1, v.a2, v.b1, v.b2);
}

std::string interval_str(const ComponentInterval& iv) {
  if (iv.is_point()) return format_number(iv.lo);
  return "[" + format_number(iv.lo) + ", " + format_number(iv.hi) + "]";
}

std::string family_str(const EquilibriumFamily& f) {
  return "(" + interval_str(f.p) + ", " + interval_str(f.q) + ", " +
         interval_str(f.p_prime) + ", " + interval_str(f.q_prime) + ")";
}

std::string quadruple_str(const PureQuadruple& pq) {
  std::string out = "{(";
  out += to_string(pq.alice1);
  out += ",";
  out += to_string(pq.alice2);
  out += "),(";
  out += to_string(pq.bob1);
  out += ",";
  out += to_string(pq.bob2);
  out += ")}";
  return out;
}

StrategyProfile quadruple_profile(const PureQuadruple& pq) {
  auto prob_of_b = [](Action a) { return a == Action::kB ? 1.0 : 0.0; };
  return StrategyProfile(prob_of_b(pq.alice1), prob_of_b(pq.alice2),
                         prob_of_b(pq.bob1), prob_of_b(pq.bob2));
}

constexpr std::array<std::string_view, 4> kBlockLabels = {
    "(D1, D1')", "(D1, D2')", "(D2, D1')", "(D2, D2')"};

void print_behavior(std::ostream& out, const BehaviorSet& set) {
  for (int block = 0; block < 4; ++block) {
    out << "  " << kBlockLabels[static_cast<size_t>(block)] << ":";
    for (int k = 0; k < 4; ++k) {
      out << " " << format_number(set.values()[static_cast<size_t>(
                        BehaviorSet::index(block, k / 2, k % 2))]);
    }
    out << "\n";
  }
}

StrategyProfile profile_from(const std::vector<double>& v) {
  return StrategyProfile(v[0], v[1], v[2], v[3]);
}

TwoQubitState state_from_arg(const std::string& arg) {
  if (arg == "singlet") return TwoQubitState::singlet();
  if (arg == "zerozero") return TwoQubitState::zerozero();
  if (arg == "plusminus") return TwoQubitState::plusminus();
  return parse_state(load_json_file(arg));
}

void print_verification(const GameSpec& spec, const StrategyProfile& s,
                        const VerificationResult& result) {
  std::cout << "profile " << profile_str(s)
            << " at omega = " << format_number(spec.omega()) << "\n";
  std::cout << "verdict: "
            << (result.equilibrium ? "equilibrium" : "not an equilibrium")
            << "\n";
  std::cout << "payoffs " << payoffs_str(result.payoffs) << "\n";
  std::cout << "gradients "
            << quad_str(result.gradients.dA1_dp, result.gradients.dA2_dq,
                        result.gradients.dB1_dpprime,
                        result.gradients.dB2_dqprime)
            << "\n";
  std::cout << "margins "
            << quad_str(result.margins[0], result.margins[1],
                        result.margins[2], result.margins[3])
            << "\n";
  if (result.report) {
    std::cout << "kind: " << to_string(result.report->kind) << "\n";
  }
  for (const std::string& violation : result.violations) {
    std::cout << "  " << violation << "\n";
  }
}

int run_solve_classical(double omega,
                        const std::optional<StrategyProfile>& profile,
                        bool json_mode) {
  const GameSpec spec = GameSpec::standard(omega);
  if (profile) {
    const VerificationResult result = verify_classical(spec, *profile);
    if (json_mode) {
      json j = json_of(result);
      j["omega"] = omega;
      std::cout << j.dump(2) << "\n";
    } else {
      print_verification(spec, *profile, result);
    }
    return 0;
  }

  const std::vector<PureEquilibrium> pure = find_pure_bne(spec);
  const std::vector<EquilibriumFamily> families = find_mixed_bne(spec);
  if (json_mode) {
    json pure_json = json::array();
    for (const PureEquilibrium& eq : pure) {
      pure_json.push_back(json{
          {"actions",
           json::array({std::string(to_string(eq.profile.alice1)),
                        std::string(to_string(eq.profile.alice2)),
                        std::string(to_string(eq.profile.bob1)),
                        std::string(to_string(eq.profile.bob2))})},
          {"profile", json_of(quadruple_profile(eq.profile))},
          {"payoffs", json::array({eq.payoffs.a1, eq.payoffs.a2,
                                   eq.payoffs.b1, eq.payoffs.b2})},
      });
    }
    json families_json = json::array();
    for (const EquilibriumFamily& f : families) families_json.push_back(json_of(f));
    const json j{{"omega", omega},
                 {"alice_type_prob", spec.alice_type_prob()},
                 {"pure", pure_json},
                 {"families", families_json}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "pure equilibria at omega = " << format_number(omega) << ": "
            << pure.size() << "\n";
  for (const PureEquilibrium& eq : pure) {
    std::cout << "  " << quadruple_str(eq.profile) << "  profile "
              << profile_str(quadruple_profile(eq.profile)) << "  payoffs "
              << payoffs_str(eq.payoffs) << "\n";
  }
  std::cout << "equilibrium families (p, q, p', q'):\n";
  for (const EquilibriumFamily& f : families) {
    std::cout << "  " << family_str(f);
    const bool point = f.p.is_point() && f.q.is_point() &&
                       f.p_prime.is_point() && f.q_prime.is_point();
    if (point) {
      const StrategyProfile s(f.p.lo, f.q.lo, f.p_prime.lo, f.q_prime.lo);
      std::cout << "  payoffs " << payoffs_str(mixed_payoffs(spec, s));
    }
    std::cout << "\n";
  }
  return 0;
}

int run_solve_quantum(double omega, bool json_mode) {
  const GameSpec spec = GameSpec::standard(omega);
  const EquilibriumReport report = quantum_bne(spec);
  const ChshClass chsh = classify(*report.behavior);
  const VerificationResult classical = verify_classical(spec, report.profile);

  if (json_mode) {
    json j = json_of(report);
    j["class"] = std::string(to_string(chsh.regime));
    j["classical_verdict"] =
        json{{"equilibrium", classical.equilibrium},
             {"violations", classical.violations}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "quantum equilibrium at omega = " << format_number(omega)
            << " (unique over all valid probability-set deviations)\n";
  std::cout << "profile " << profile_str(report.profile) << "\n";
  std::cout << "behavior set:\n";
  print_behavior(std::cout, *report.behavior);
  std::cout << "payoffs " << payoffs_str(report.payoffs) << "\n";
  std::cout << "margins "
            << quad_str(report.margins[0], report.margins[1],
                        report.margins[2], report.margins[3])
            << "\n";
  std::cout << "delta = " << format_number(*report.delta) << "\n";
  std::cout << "class: " << to_string(chsh.regime) << "\n";
  std::cout << "note: under factorizable-only deviations this profile is "
            << (classical.equilibrium ? "an equilibrium"
                                      : "not an equilibrium")
            << " of the classical game";
  if (!classical.violations.empty()) {
    std::cout << " (" << classical.violations.front() << ")";
  }
  std::cout << "\n";
  return 0;
}

int run_generate(const std::string& state_arg,
                 const std::vector<double>& angles, bool json_mode) {
  const TwoQubitState state = state_from_arg(state_arg);
  DirectionConfig dirs;
  dirs.a.angle = angles[0];
  dirs.c.angle = angles[1];
  dirs.b.angle = angles[2];
  dirs.d.angle = angles[3];

  const BehaviorSet set = generate(state, dirs);
  const ChshClass chsh = classify(set);
  const bool factorizable = is_factorizable(set);
  const StrategyProfile marg = marginals(set);

  if (json_mode) {
    json j = json_of(set);
    j["delta"] = chsh.delta;
    j["class"] = std::string(to_string(chsh.regime));
    j["factorizable"] = factorizable;
    j["marginals"] = json_of(marg);
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "state: " << state_arg << "\n";
  std::cout << "angles: a = " << format_number(dirs.a.angle)
            << ", c = " << format_number(dirs.c.angle)
            << ", b = " << format_number(dirs.b.angle)
            << ", d = " << format_number(dirs.d.angle) << "\n";
  std::cout << "behavior set:\n";
  print_behavior(std::cout, set);
  std::cout << "delta = " << format_number(chsh.delta) << "\n";
  std::cout << "class: " << to_string(chsh.regime) << "\n";
  std::cout << "factorizable: " << (factorizable ? "yes" : "no") << "\n";
  std::cout << "marginals " << profile_str(marg) << "\n";
  return 0;
}

int run_check(const std::string& set_path, bool factorizable_required,
              bool json_mode) {
  const BehaviorSet set = parse_behavior(load_json_file(set_path));
  const ValidationReport report = validate(set);

  if (!report.valid) {
    if (json_mode) {
      std::cout << json_of(report).dump(2) << "\n";
    } else {
      std::cout << "checks: " << report.checks.size()
                << ", max residual = " << format_number(report.max_residual)
                << "\n";
      std::cout << "valid: no\n";
      for (const std::string& violation : report.violations) {
        std::cout << "  " << violation << "\n";
      }
    }
    return 3;
  }

  const ChshClass chsh = classify(set);
  const bool factorizable = is_factorizable(set);
  const StrategyProfile marg = marginals(set);

  if (json_mode) {
    json j = json_of(report);
    j["delta"] = chsh.delta;
    j["class"] = std::string(to_string(chsh.regime));
    j["factorizable"] = factorizable;
    j["marginals"] = json_of(marg);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "checks: " << report.checks.size()
              << ", max residual = " << format_number(report.max_residual)
              << "\n";
    std::cout << "valid: yes\n";
    std::cout << "delta = " << format_number(chsh.delta) << "\n";
    std::cout << "class: " << to_string(chsh.regime) << "\n";
    std::cout << "factorizable: " << (factorizable ? "yes" : "no") << "\n";
    std::cout << "marginals " << profile_str(marg) << "\n";
  }
  if (factorizable_required && !factorizable) return 3;
  return 0;
}

int run_table(const std::string& which, double omega, bool json_mode) {
  const std::optional<TableId> id = table_id_from_name(which);
  if (!id) {
    std::string known;
    for (const std::string_view name : kTableNames) {
      if (!known.empty()) known += ", ";
      known += name;
    }
    throw UsageError("unknown table name: " + which + " (known: " + known +
                     ")");
  }
  const GameSpec spec = GameSpec::standard(omega);
  const RenderedTable table = build_table(spec, *id);
  if (json_mode) {
    std::cout << json_of(table).dump(2) << "\n";
  } else {
    std::cout << render_text(table);
  }
  return 0;
}

int run_oracle(double omega, const StrategyProfile& profile, int grid,
               bool json_mode) {
  const GameSpec spec = GameSpec::standard(omega);
  std::array<DeviationScan, 4> scans{};
  bool certified = true;
  for (int t = 0; t < 4; ++t) {
    scans[static_cast<size_t>(t)] =
        brute_force_best_response(spec, profile, t, grid);
    if (scans[static_cast<size_t>(t)].gain > kTolerance) certified = false;
  }

  if (json_mode) {
    json scans_json = json::array();
    for (size_t t = 0; t < 4; ++t) {
      scans_json.push_back(json{{"type", std::string(kTypeNames[t])},
                                {"best_value", scans[t].best_value},
                                {"gain", scans[t].gain}});
    }
    const json j{{"omega", omega},
                 {"profile", json_of(profile)},
                 {"grid", grid},
                 {"scans", scans_json},
                 {"certified", certified}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "oracle at omega = " << format_number(omega) << ", profile "
            << profile_str(profile) << ", grid = " << grid << "\n";
  for (size_t t = 0; t < 4; ++t) {
    std::cout << "  " << kTypeNames[t] << ": best "
              << format_number(scans[t].best_value) << ", gain "
              << format_number(scans[t].gain) << "\n";
  }
  std::cout << "certified equilibrium: " << (certified ? "yes" : "no")
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Bayesian Battle-of-Sexes equilibria over factorizable and "
      "EPR-generated probability sets"};
  app.require_subcommand(1);

  double omega = 0.0;
  std::vector<double> profile_vec;
  std::vector<double> angles;
  std::string state_arg;
  std::string set_path;
  std::string which;
  int grid = 101;
  bool factorizable_required = false;
  bool json_solve_classical = false;
  bool json_solve_quantum = false;
  bool json_generate = false;
  bool json_check = false;
  bool json_table = false;
  bool json_oracle = false;
  double table_omega = 0.5;

  CLI::App* solve_classical = app.add_subcommand(
      "solve-classical",
      "Pure equilibria and the complete mixed case analysis, or verify one "
      "profile");
  solve_classical->add_option("--omega", omega, "belief that Alice is type 1")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  solve_classical
      ->add_option("--profile", profile_vec,
                   "strategy profile p,q,p',q' to verify")
      ->delimiter(',')
      ->expected(4)
      ->check(CLI::Range(0.0, 1.0));
  solve_classical->add_flag("--json", json_solve_classical, "emit JSON");

  CLI::App* solve_quantum = app.add_subcommand(
      "solve-quantum",
      "The unique equilibrium over all valid probability-set deviations");
  solve_quantum->add_option("--omega", omega, "belief that Alice is type 1")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  solve_quantum->add_flag("--json", json_solve_quantum, "emit JSON");

  CLI::App* generate_cmd = app.add_subcommand(
      "generate",
      "Generate the 16 joint probabilities of a two-qubit state");
  generate_cmd
      ->add_option("--state", state_arg,
                   "state preset (singlet, zerozero, plusminus) or JSON file")
      ->required();
  generate_cmd
      ->add_option("--angles", angles,
                   "measurement angles a,c,b,d in radians")
      ->delimiter(',')
      ->expected(4)
      ->required();
  generate_cmd->add_flag("--json", json_generate, "emit JSON");

  CLI::App* check_cmd = app.add_subcommand(
      "check", "Validate a probability set and classify its CHSH value");
  check_cmd->add_option("--set", set_path, "probability set JSON file")
      ->required();
  check_cmd->add_flag("--factorizable", factorizable_required,
                      "require factorizability (exit 3 when violated)");
  check_cmd->add_flag("--json", json_check, "emit JSON");

  CLI::App* table_cmd =
      app.add_subcommand("table", "Render one of the named payoff tables");
  table_cmd->add_option("--which", which, "table name")->required();
  table_cmd
      ->add_option("--omega", table_omega,
                   "belief that Alice is type 1 (default 0.5)")
      ->check(CLI::Range(0.0, 1.0));
  table_cmd->add_flag("--json", json_table, "emit JSON");

  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "Brute-force best-response scan at a profile");
  oracle_cmd->add_option("--omega", omega, "belief that Alice is type 1")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  oracle_cmd
      ->add_option("--profile", profile_vec,
                   "strategy profile p,q,p',q' to scan")
      ->delimiter(',')
      ->expected(4)
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  oracle_cmd->add_option("--grid", grid, "grid points per component")
      ->check(CLI::Range(2, 10000000));
  oracle_cmd->add_flag("--json", json_oracle, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*solve_classical) {
      std::optional<StrategyProfile> profile;
      if (solve_classical->count("--profile") > 0) {
        profile = profile_from(profile_vec);
      }
      return run_solve_classical(omega, profile, json_solve_classical);
    }
    if (*solve_quantum) return run_solve_quantum(omega, json_solve_quantum);
    if (*generate_cmd) return run_generate(state_arg, angles, json_generate);
    if (*check_cmd) {
      return run_check(set_path, factorizable_required, json_check);
    }
    if (*table_cmd) return run_table(which, table_omega, json_table);
    if (*oracle_cmd) {
      return run_oracle(omega, profile_from(profile_vec), grid, json_oracle);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
