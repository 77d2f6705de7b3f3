// Copyright 2026 The fracdirac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fracdirac/fracdirac.hpp"

namespace {

using namespace fracdirac;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("FRACDIRAC_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      // fall through to the fixed default on unparsable values
    }
  }
  return 42;
}

std::string join_command(int argc, char** argv) {
  std::ostringstream os;
  for (int i = 0; i < argc; ++i) {
    if (i) os << ' ';
    os << argv[i];
  }
  return os.str();
}

int emit_document(const Json& doc, const std::string& out_path) {
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot open '" << out_path << "' for writing\n";
      return kExitUsage;
    }
    out << text;
  }
  return doc.at("overall_pass").get<bool>() ? kExitPass : kExitCheckFailed;
}

std::string range_string(std::pair<int, int> r) {
  return std::to_string(r.first) + ".." + std::to_string(r.second);
}

std::string index_list_string(const std::vector<int>& idx) {
  std::ostringstream os;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) os << ',';
    os << idx[i];
  }
  return os.str();
}

struct AlgebraArgs {
  int k = 3;
  double tol = 1e-10;
  std::string form = "both";
  int trials = 20;
  std::uint64_t seed = default_seed();
  std::string mutate;
  std::string out;
};

int run_algebra(const AlgebraArgs& args, const std::string& command) {
  if (args.k < 2) {
    std::cerr << "usage error: --k must be >= 2\n";
    return kExitUsage;
  }
  if (!(args.tol > 0.0)) {
    std::cerr << "usage error: --tol must be positive\n";
    return kExitUsage;
  }

  BetaRep rep = build_beta(args.k);
  if (!args.mutate.empty()) {
    // planted failure mode: betaJ=identity replaces one coefficient matrix
    int index = -1;
    if (args.mutate.size() == 14 && args.mutate.rfind("beta", 0) == 0 &&
        args.mutate.substr(5) == "=identity" && args.mutate[4] >= '0' &&
        args.mutate[4] <= '3')
      index = args.mutate[4] - '0';
    if (index < 0) {
      std::cerr << "usage error: --mutate expects beta<0..3>=identity\n";
      return kExitUsage;
    }
    const auto mu = static_cast<std::size_t>(index);
    rep.beta[mu] = ComplexMatrix::Identity(rep.dim(), rep.dim());
    rep.a[mu] = (index == 0) ? rep.beta[mu]
                             : ComplexMatrix(rep.pauli.xi * rep.beta[mu]);
  }

  std::vector<VerificationReport> reports;
  if (args.form == "delta" || args.form == "both")
    reports.push_back(
        verify_generalized_clifford(rep, CliffordForm::delta, args.tol));
  if (args.form == "g" || args.form == "g_metric" || args.form == "both")
    reports.push_back(
        verify_generalized_clifford(rep, CliffordForm::g_metric, args.tol));
  if (args.form != "delta" && args.form != "g" && args.form != "g_metric" &&
      args.form != "both") {
    std::cerr << "usage error: --form must be delta, g_metric or both\n";
    return kExitUsage;
  }
  reports.push_back(verify_pauli_adjoint(args.k, args.tol));
  reports.push_back(verify_beta_adjoint_unitarity(args.k, args.tol));
  reports.push_back(verify_power_identity(rep, args.trials, args.seed, args.tol));

  Json data = Json::object();
  data["k"] = args.k;
  data["mutated"] = !args.mutate.empty();
  data["sigma2_kth_power_sign"] = rep.pauli.sigma2_kth_power_sign;
  return emit_document(make_report_document(command, reports, std::move(data)),
                       args.out);
}

struct SolveArgs {
  int k = 3;
  double mass = 1.0;
  std::string sign = "both";
  double px = 0.0, py = 0.0, pz = 0.0;
  double hbar = 1.0;
  double c = 1.0;
  double tol = 1e-10;
  std::string out;
};

void append_solution_reports(int k, SolutionSign sign, const PhysicalUnits& units,
                             double tol, std::vector<VerificationReport>& reports,
                             Json& data) {
  const SolutionSet sol = rest_frame_solutions(k, sign);

  VerificationReport nullspace("rest_frame_nullspace", tol);
  nullspace.add_param("k", k);
  nullspace.add_param("sign", to_string(sign));
  nullspace.add_case("nullity equals k", std::abs(sol.dimension - k));
  const auto stated = sign == SolutionSign::plus ? stated_plus_free_range(k)
                                                 : stated_minus_free_range(k);
  nullspace.add_param("free_indices_computed", index_list_string(sol.free_indices));
  nullspace.add_param("free_range_stated", range_string(stated));
  const bool contiguous =
      !sol.free_indices.empty() &&
      sol.free_indices.back() - sol.free_indices.front() + 1 ==
          static_cast<int>(sol.free_indices.size());
  const bool matches_stated = contiguous && !sol.free_indices.empty() &&
                              sol.free_indices.front() == stated.first &&
                              sol.free_indices.back() == stated.second;
  nullspace.add_param("free_range_matches_stated",
                      matches_stated ? "true" : "false");
  reports.push_back(nullspace);

  FourMomentum rest;
  rest.p0 = units.mass * units.c;
  reports.push_back(verify_solution_residual(k, sol, rest, units, tol));

  Json entry = Json::object();
  entry["sign"] = to_string(sign);
  entry["dimension"] = sol.dimension;
  entry["free_indices"] = sol.free_indices;
  entry["stated_range"] = range_string(stated);
  entry["matches_stated"] = matches_stated;
  data["solutions"].push_back(std::move(entry));
}

int run_solve(const SolveArgs& args, const std::string& command) {
  if (args.k < 2) {
    std::cerr << "usage error: --k must be >= 2\n";
    return kExitUsage;
  }
  if (!(args.mass > 0.0)) {
    std::cerr << "usage error: --m must be positive (the rest-frame reduction "
                 "assumes m != 0)\n";
    return kExitUsage;
  }
  if (!(args.hbar > 0.0) || !(args.c > 0.0)) {
    std::cerr << "usage error: --hbar and --c must be positive\n";
    return kExitUsage;
  }
  if (args.sign != "plus" && args.sign != "minus" && args.sign != "both") {
    std::cerr << "usage error: --sign must be plus, minus or both\n";
    return kExitUsage;
  }

  PhysicalUnits units{args.hbar, args.c, args.mass};
  std::vector<VerificationReport> reports;
  Json data = Json::object();
  data["solutions"] = Json::array();

  if (args.sign == "plus" || args.sign == "both")
    append_solution_reports(args.k, SolutionSign::plus, units, args.tol, reports,
                            data);
  if (args.sign == "minus" || args.sign == "both")
    append_solution_reports(args.k, SolutionSign::minus, units, args.tol, reports,
                            data);

  if (args.sign == "both") {
    VerificationReport count("solution_count", 0.5);
    count.add_param("k", args.k);
    count.add_case("plus + minus = 2k",
                   std::abs(count_solutions(args.k) - 2 * args.k));
    reports.push_back(count);
  }

  const std::array<double, 3> p{args.px, args.py, args.pz};
  const double p2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
  const double e_on = std::sqrt(p2 * units.c * units.c +
                                units.mass * units.mass * std::pow(units.c, 4));
  const double r_on = dispersion_residual(args.k, e_on, p, units);
  const double r_off = dispersion_residual(args.k, 1.2 * e_on, p, units);

  VerificationReport dispersion("dispersion_determinant", args.tol);
  dispersion.add_param("k", args.k);
  dispersion.add_param("E_on_shell", e_on);
  dispersion.add_param("offshell_residual_at_1.2E", r_off);
  dispersion.add_case("on-shell normalized |det|", r_on);
  reports.push_back(dispersion);

  VerificationReport separation("dispersion_separation", 1.0);
  separation.add_param("required_factor", 1000.0);
  separation.add_case("1000 * on_shell / off_shell",
                      1000.0 * r_on / std::max(r_off, 1e-300));
  reports.push_back(separation);

  return emit_document(make_report_document(command, reports, std::move(data)),
                       args.out);
}

struct FderivArgs {
  double alpha = 1.0;
  std::string input;
  double length = 0.0;
  std::string out_csv;
  std::string expected;
  std::string report;
  double tol = 1e-10;
};

int run_fderiv(const FderivArgs& args, const std::string& command) {
  if (!(args.length > 0.0)) {
    std::cerr << "usage error: --length must be positive\n";
    return kExitUsage;
  }

  GridFunction input{ComplexVector(), 0.0};
  try {
    input = read_grid_csv_file(args.input, args.length);
  } catch (const std::exception& e) {
    std::cerr << "input error: " << args.input << ": " << e.what() << "\n";
    return kExitUsage;
  }

  const GridFunction result = frac_derivative(input, args.alpha);
  if (!args.out_csv.empty()) {
    try {
      write_grid_csv_file(args.out_csv, result);
    } catch (const std::exception& e) {
      std::cerr << "output error: " << e.what() << "\n";
      return kExitUsage;
    }
  } else {
    write_grid_csv(std::cout, result);
  }

  std::vector<VerificationReport> reports;
  VerificationReport info("frac_derivative", args.tol);
  info.add_param("alpha", args.alpha);
  info.add_param("n", static_cast<long long>(input.n()));
  info.add_param("length", args.length);
  info.add_case("derivative computed", 0.0);
  reports.push_back(info);

  if (!args.expected.empty()) {
    GridFunction expected{ComplexVector(), 0.0};
    try {
      expected = read_grid_csv_file(args.expected, args.length);
      require_same_grid(result, expected, "fderiv --expected");
    } catch (const std::exception& e) {
      std::cerr << "input error: " << args.expected << ": " << e.what() << "\n";
      return kExitUsage;
    }
    VerificationReport match("grid_match", args.tol);
    match.add_param("expected", args.expected);
    match.add_case("max |result - expected|",
                   max_abs(ComplexVector(result.samples - expected.samples)));
    reports.push_back(match);
  }

  const Json doc = make_report_document(command, reports);
  if (!args.report.empty()) {
    const int code = emit_document(doc, args.report == "-" ? "" : args.report);
    if (code == kExitUsage) return code;
  }
  return doc.at("overall_pass").get<bool>() ? kExitPass : kExitCheckFailed;
}

struct LinearizeArgs {
  std::string preset = "quadratic";
  int nvars = 2;
  int dim = 2;
  std::vector<double> weights;
  int restarts = 50;
  int max_iterations = 200;
  std::uint64_t seed = default_seed();
  double tol = 1e-8;
  std::string out;
};

int run_linearize(const LinearizeArgs& args, const std::string& command) {
  LinearizationSpec spec;
  try {
    if (args.preset == "quadratic")
      spec = LinearizationSpec::commuting_form(2, args.nvars, args.dim, args.weights);
    else if (args.preset == "cubic")
      spec = LinearizationSpec::commuting_form(3, args.nvars, args.dim, args.weights);
    else if (args.preset == "ode-example")
      spec = LinearizationSpec::ode_example(args.dim);
    else {
      std::cerr << "usage error: --preset must be quadratic, cubic or ode-example\n";
      return kExitUsage;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (args.restarts < 1) {
    std::cerr << "usage error: --restarts must be >= 1\n";
    return kExitUsage;
  }

  SearchConfig cfg;
  cfg.restarts = args.restarts;
  cfg.max_iterations = args.max_iterations;
  cfg.seed = args.seed;
  cfg.success_tol = args.tol;

  const SearchResult result = search(spec, cfg);

  VerificationReport report("linearization_search", cfg.success_tol);
  report.add_param("preset", args.preset);
  report.add_param("nvars", spec.nvars);
  report.add_param("dim", spec.rep_dim);
  report.add_param("restarts_configured", cfg.restarts);
  report.add_param("restarts_used", static_cast<int>(result.restarts.size()));
  report.add_param("seed", static_cast<long long>(cfg.seed));
  report.add_param("outcome", result.success ? "success" : "infeasible");
  report.add_case("best candidate residual", result.candidate.residual);

  Json data = Json::object();
  data["success"] = result.success;
  Json restarts = Json::array();
  for (const auto& r : result.restarts)
    restarts.push_back(Json{{"index", r.index},
                            {"residual", r.residual},
                            {"iterations", r.iterations}});
  data["restarts"] = std::move(restarts);
  Json mats = Json::array();
  for (const auto& m : result.candidate.coefficients) mats.push_back(to_json(m));
  data["candidate"] = std::move(mats);
  if (spec.coupling == CouplingKind::d_dx_example)
    data["candidate_convention"] = "gamma1 = C[0] * x, gamma2 = C[1]";

  return emit_document(make_report_document(command, {report}, std::move(data)),
                       args.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fracdirac: generalized Clifford representations, Fourier "
               "fractional derivatives, fractional Dirac plane-wave analysis "
               "and linearization search"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads,
                 "reserved; all computations are deterministic and currently "
                 "single-threaded")
      ->check(CLI::PositiveNumber);

  AlgebraArgs algebra;
  auto* cmd_algebra =
      app.add_subcommand("algebra", "verify the generalized Clifford algebra "
                                    "relations for order k");
  cmd_algebra->add_option("--k", algebra.k, "algebra order (>= 2)");
  cmd_algebra->add_option("--tol", algebra.tol, "residual tolerance");
  cmd_algebra->add_option("--form", algebra.form, "delta, g_metric or both");
  cmd_algebra->add_option("--trials", algebra.trials, "power-identity trials");
  cmd_algebra->add_option("--seed", algebra.seed, "RNG seed (env FRACDIRAC_SEED)");
  cmd_algebra->add_option("--mutate", algebra.mutate,
                          "planted failure, e.g. beta1=identity");
  cmd_algebra->add_option("--out", algebra.out, "write JSON report to file");

  SolveArgs solve;
  auto* cmd_solve =
      app.add_subcommand("solve", "rest-frame solution spaces and the "
                                  "dispersion determinant");
  cmd_solve->add_option("--k", solve.k, "algebra order (>= 2)");
  cmd_solve->add_option("--m", solve.mass, "mass (> 0)");
  cmd_solve->add_option("--sign", solve.sign, "plus, minus or both");
  cmd_solve->add_option("--px", solve.px, "spatial momentum x");
  cmd_solve->add_option("--py", solve.py, "spatial momentum y");
  cmd_solve->add_option("--pz", solve.pz, "spatial momentum z");
  cmd_solve->add_option("--hbar", solve.hbar, "reduced Planck constant");
  cmd_solve->add_option("--c", solve.c, "speed of light");
  cmd_solve->add_option("--tol", solve.tol, "residual tolerance");
  cmd_solve->add_option("--out", solve.out, "write JSON report to file");

  FderivArgs fderiv;
  auto* cmd_fderiv =
      app.add_subcommand("fderiv", "apply the order-alpha Fourier derivative "
                                   "to a sampled grid function");
  cmd_fderiv->add_option("--alpha", fderiv.alpha, "derivative order");
  cmd_fderiv->add_option("--input", fderiv.input, "input CSV (index,re,im)")
      ->required();
  cmd_fderiv->add_option("--length", fderiv.length, "domain length L")
      ->required();
  cmd_fderiv->add_option("--out-csv", fderiv.out_csv,
                         "output CSV path (stdout if omitted)");
  cmd_fderiv->add_option("--expected", fderiv.expected,
                         "CSV to compare the result against");
  cmd_fderiv->add_option("--report", fderiv.report,
                         "write JSON report to file ('-' for stdout)");
  cmd_fderiv->add_option("--tol", fderiv.tol, "comparison tolerance");

  LinearizeArgs linearize;
  auto* cmd_linearize =
      app.add_subcommand("linearize", "search for matrix representations of "
                                      "the linearization conditions");
  cmd_linearize->add_option("--preset", linearize.preset,
                            "quadratic, cubic or ode-example");
  cmd_linearize->add_option("--nvars", linearize.nvars, "number of variables");
  cmd_linearize->add_option("--dim", linearize.dim, "representation dimension");
  cmd_linearize->add_option("--weights", linearize.weights,
                            "form coefficients a^i (default all 1)");
  cmd_linearize->add_option("--restarts", linearize.restarts, "random restarts");
  cmd_linearize->add_option("--max-iterations", linearize.max_iterations,
                            "optimizer iterations per restart");
  cmd_linearize->add_option("--seed", linearize.seed,
                            "RNG seed (env FRACDIRAC_SEED)");
  cmd_linearize->add_option("--tol", linearize.tol, "success tolerance");
  cmd_linearize->add_option("--out", linearize.out, "write JSON report to file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  const std::string command = join_command(argc, argv);
  try {
    if (cmd_algebra->parsed()) return run_algebra(algebra, command);
    if (cmd_solve->parsed()) return run_solve(solve, command);
    if (cmd_fderiv->parsed()) return run_fderiv(fderiv, command);
    if (cmd_linearize->parsed()) return run_linearize(linearize, command);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
