#include "so5/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "so5/basis.hpp"
#include "so5/dynamics.hpp"
#include "so5/equilibria.hpp"
#include "so5/invariants.hpp"
#include "so5/json_io.hpp"
#include "so5/lie_core.hpp"
#include "so5/skew_matrix.hpp"
#include "so5/stability.hpp"
#include "so5/verify.hpp"

namespace so5::cli {
namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitConfigError = 2;

InertiaSpecd make_inertia(const std::vector<double>& lambdas) {
  if (lambdas.size() != 5)
    throw std::invalid_argument("--lambdas expects 5 comma-separated moments, got " +
                                std::to_string(lambdas.size()));
  Eigen::VectorXd l(5);
  for (int i = 0; i < 5; ++i) l[i] = lambdas[static_cast<std::size_t>(i)];
  return InertiaSpecd(l);
}

OrbitInvariantsd make_orbit(double c1, double c2) {
  const OrbitInvariantsd orbit{c1, c2};
  if (!orbit.is_regular()) {
    std::ostringstream msg;
    msg << "orbit (c1, c2) = (" << c1 << ", " << c2
        << ") is not regular: the Weyl values require c1 > 0 and 2*c2 > c1^2 > c2";
    throw std::invalid_argument(msg.str());
  }
  return orbit;
}

int parse_family_index(const std::string& token) {
  if (token.size() >= 2 && token[0] == 't') {
    try {
      std::size_t pos = 0;
      const int k = std::stoi(token.substr(1), &pos);
      if (pos == token.size() - 1 && k >= 1 && k <= 15) return k;
    } catch (const std::exception&) {
    }
  }
  throw std::invalid_argument("family reference '" + token + "' is not one of t1..t15");
}

/// Initial state from either an explicit coordinate list
/// (`coords:v1,...,v10`) or a plane-slot reference (`family:tK:slot=LABEL`,
/// LABEL one of the eight signed slots).  The slot form needs the orbit to
/// place the Weyl values, so --c1/--c2 become mandatory with it.
SkewMatrixd parse_init(const std::string& init, const std::optional<OrbitInvariantsd>& orbit) {
  if (init.rfind("coords:", 0) == 0) {
    std::vector<double> values;
    std::stringstream stream(init.substr(7));
    std::string token;
    while (std::getline(stream, token, ',')) {
      try {
        std::size_t pos = 0;
        const double v = std::stod(token, &pos);
        if (pos != token.size()) throw std::invalid_argument(token);
        values.push_back(v);
      } catch (const std::exception&) {
        throw std::invalid_argument("--init coords: could not parse '" + token +
                                    "' as a number");
      }
    }
    if (values.size() != 10)
      throw std::invalid_argument("--init coords: expected 10 comma-separated values, got " +
                                  std::to_string(values.size()));
    Coordinates10d c;
    for (int p = 0; p < kCoordCount; ++p) c[p] = values[static_cast<std::size_t>(p)];
    return coords_to_matrix(c);
  }

  if (init.rfind("family:", 0) == 0) {
    const std::string rest = init.substr(7);
    const std::size_t colon = rest.find(':');
    if (colon == std::string::npos || rest.compare(colon, 6, ":slot=") != 0)
      throw std::invalid_argument(
          "--init family form is family:tK:slot=LABEL (e.g. family:t1:slot=a,b)");
    const int k = parse_family_index(rest.substr(0, colon));
    const std::string label = rest.substr(colon + 6);
    if (!orbit.has_value())
      throw std::invalid_argument("--init family:... needs --c1 and --c2 to fix the orbit");
    const auto [a, b] = weyl_ab(*orbit);
    for (const WeylSlot slot : kWeylSlots) {
      if (label == slot_label(slot)) {
        const auto [alpha, beta] = slot_values(slot, a, b);
        return cartan_point(k, alpha, beta);
      }
    }
    throw std::invalid_argument(
        "--init family: unknown slot '" + label +
        "'; valid slots: a,b  -a,-b  b,a  -b,-a  -a,b  a,-b  b,-a  -b,a");
  }

  throw std::invalid_argument("--init must be coords:v1,...,v10 or family:tK:slot=LABEL");
}

Json lambdas_to_json(const InertiaSpecd& inertia) {
  Json j = Json::array();
  for (Eigen::Index i = 0; i < inertia.dim(); ++i) j.push_back(inertia.lambda(i));
  return j;
}

Json drift_report_to_json(const std::vector<InvariantDrift<double>>& report) {
  Json rows = Json::array();
  for (const auto& row : report) {
    Json r;
    r["name"] = row.name;
    r["initial"] = row.initial;
    r["max_drift"] = row.max_drift;
    rows.push_back(std::move(r));
  }
  return rows;
}

Json spectrum_to_json(const SpectrumReportd& spectrum) {
  Json eigenvalues = Json::array();
  for (const auto& ev : spectrum.eigenvalues) {
    Json pair = Json::array();
    pair.push_back(ev.real());
    pair.push_back(ev.imag());
    eigenvalues.push_back(std::move(pair));
  }
  Json factors;
  factors["u"] = spectrum.factors.u;
  factors["u_prime"] = spectrum.factors.u_prime;
  factors["v"] = spectrum.factors.v;
  factors["v_prime"] = spectrum.factors.v_prime;
  factors["w"] = spectrum.factors.w;
  factors["w_prime"] = spectrum.factors.w_prime;
  factors["w_pprime"] = spectrum.factors.w_pprime;
  Json j;
  j["max_real_part"] = spectrum.max_real_part;
  j["tolerance"] = spectrum.tolerance;
  j["pairing_error"] = spectrum.pairing_error;
  j["matched"] = spectrum.matched;
  j["eigenvalues"] = std::move(eigenvalues);
  j["factors"] = std::move(factors);
  return j;
}

Json certificate_to_json(const EnergyCertificated& cert) {
  Json j;
  j["combo"] = cert.combo.label();
  j["m"] = cert.m;
  j["n"] = cert.n;
  j["multipliers_found"] = cert.multipliers_found;
  j["gradient_residual"] = cert.gradient_residual;
  Json minors = Json::array();
  for (const double v : cert.minors) minors.push_back(v);
  j["minors"] = std::move(minors);
  Json eigs = Json::array();
  for (const double v : cert.hessian_eigenvalues) eigs.push_back(v);
  j["hessian_eigenvalues"] = std::move(eigs);
  j["definiteness"] = cert.definiteness;
  return j;
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

struct SimulateConfig {
  std::vector<double> lambdas;
  std::string init;
  double c1 = 0.0, c2 = 0.0;
  bool have_c1 = false, have_c2 = false;
  double dt = 0.0;
  int steps = 0;
  std::string scheme = "rk4";
  int stride = 1;
  std::string csv_path;
  double drift_bound = 1e-6;
};

int run_simulate(const SimulateConfig& cfg) {
  const InertiaSpecd inertia = make_inertia(cfg.lambdas);
  std::optional<OrbitInvariantsd> orbit;
  if (cfg.have_c1 != cfg.have_c2)
    throw std::invalid_argument("--c1 and --c2 must be given together");
  if (cfg.have_c1) orbit = make_orbit(cfg.c1, cfg.c2);

  const SkewMatrixd m0 = parse_init(cfg.init, orbit);
  const IntegrationScheme scheme = scheme_from_label(cfg.scheme);
  const Trajectoryd traj = integrate(m0, inertia, cfg.dt, cfg.steps, scheme);
  const auto report = conservation_report(traj, inertia);
  const double worst = max_drift(report);

  if (!cfg.csv_path.empty()) {
    std::ofstream csv(cfg.csv_path);
    if (!csv) throw std::invalid_argument("cannot open --csv path '" + cfg.csv_path + "'");
    write_trajectory_csv(csv, traj, cfg.stride);
  }

  Json out;
  out["command"] = "simulate";
  out["lambdas"] = lambdas_to_json(inertia);
  out["scheme"] = scheme_label(scheme);
  out["dt"] = cfg.dt;
  out["steps"] = cfg.steps;
  out["initial"] = skew_to_json(m0);
  Json warnings = Json::array();
  for (const auto& w : traj.warnings) warnings.push_back(w);
  out["warnings"] = std::move(warnings);
  out["csv"] = cfg.csv_path.empty() ? Json(nullptr) : Json(cfg.csv_path);
  out["drift_bound"] = cfg.drift_bound;
  out["report"] = drift_report_to_json(report);
  out["max_drift"] = worst;
  const bool pass = worst <= cfg.drift_bound;
  out["pass"] = pass;
  write_json(std::cout, out);
  return pass ? kExitSuccess : kExitPropertyFailure;
}

// ---------------------------------------------------------------------------
// equilibria
// ---------------------------------------------------------------------------

struct EquilibriaConfig {
  std::vector<double> lambdas;
  double c1 = 0.0, c2 = 0.0;
  std::vector<std::string> families;
};

int run_equilibria(const EquilibriaConfig& cfg) {
  const InertiaSpecd inertia = make_inertia(cfg.lambdas);
  const OrbitInvariantsd orbit = make_orbit(cfg.c1, cfg.c2);
  const auto [a, b] = weyl_ab(orbit);

  std::vector<int> family_indices;
  if (cfg.families.empty())
    for (int k = 1; k <= 15; ++k) family_indices.push_back(k);
  else
    for (const auto& token : cfg.families) family_indices.push_back(parse_family_index(token));

  bool all_ok = true;
  Json weyl_points = Json::array();
  for (const int k : family_indices) {
    for (const auto& point : weyl_orbit_points(k, orbit)) {
      const auto& prov = std::get<CartanSlotProvenance<double>>(point.provenance);
      const auto [alpha, beta] = slot_values(prov.slot, prov.a, prov.b);
      const auto check = is_equilibrium(point.m, inertia);
      const auto [pc1, pc2] = casimirs(point.m);
      const double c1_error = std::abs(pc1 - orbit.c1) / (1.0 + std::abs(orbit.c1));
      const double c2_error = std::abs(pc2 - orbit.c2) / (1.0 + std::abs(orbit.c2));
      const bool ok = check.ok && c1_error <= 1e-12 && c2_error <= 1e-12;
      all_ok = all_ok && ok;

      Json entry;
      entry["family"] = "t" + std::to_string(k);
      entry["slot"] = slot_label(prov.slot);
      entry["slot_class"] = slot_class_label(slot_class(prov.slot));
      entry["alpha"] = alpha;
      entry["beta"] = beta;
      entry["state"] = skew_to_json(point.m);
      entry["residual"] = check.residual;
      entry["residual_threshold"] = check.threshold;
      entry["c1"] = pc1;
      entry["c2"] = pc2;
      entry["c1_error"] = c1_error;
      entry["c2_error"] = c2_error;
      entry["ok"] = ok;
      weyl_points.push_back(std::move(entry));
    }
  }

  Json continuous = Json::array();
  for (int l = 1; l <= 10; ++l) {
    const auto family = continuous_family(l, inertia);
    Json span = Json::array();
    double max_residual = 0.0;
    double threshold = 0.0;
    for (const auto& s : family.span) {
      span.push_back(skew_to_json(s));
      const auto check = is_equilibrium(s, inertia);
      max_residual = std::max(max_residual, check.residual);
      threshold = std::max(threshold, check.threshold);
    }
    // Probe a fixed interior combination as well: the span property is what
    // makes the family continuous rather than three isolated points.
    const auto combo_check =
        is_equilibrium(family.at(Eigen::Vector3d(1.0, -2.0, 0.5)), inertia);
    max_residual = std::max(max_residual, combo_check.residual);
    threshold = std::max(threshold, combo_check.threshold);
    const bool ok = max_residual <= threshold;
    all_ok = all_ok && ok;

    Json entry;
    entry["family"] = "s" + std::to_string(l);
    entry["span"] = std::move(span);
    entry["max_residual"] = max_residual;
    entry["residual_threshold"] = threshold;
    entry["ok"] = ok;
    continuous.push_back(std::move(entry));
  }

  Json out;
  out["command"] = "equilibria";
  out["lambdas"] = lambdas_to_json(inertia);
  out["c1"] = orbit.c1;
  out["c2"] = orbit.c2;
  out["weyl_a"] = a;
  out["weyl_b"] = b;
  out["weyl_points"] = std::move(weyl_points);
  out["continuous_families"] = std::move(continuous);
  out["all_ok"] = all_ok;
  write_json(std::cout, out);
  return all_ok ? kExitSuccess : kExitPropertyFailure;
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

struct ClassifyConfig {
  std::vector<double> lambdas;
  double c1 = 0.0, c2 = 0.0;
  std::string expect;
};

int run_classify(const ClassifyConfig& cfg) {
  const InertiaSpecd inertia = make_inertia(cfg.lambdas);
  inertia.require_strictly_decreasing();
  const OrbitInvariantsd orbit = make_orbit(cfg.c1, cfg.c2);
  const auto [a, b] = weyl_ab(orbit);
  if (!cfg.expect.empty() && cfg.expect != "paper")
    throw std::invalid_argument("--expect: unknown table '" + cfg.expect +
                                "' (supported: paper)");

  const bool special6 = special_condition(6, orbit, inertia);
  const bool special7 = special_condition(7, orbit, inertia);
  const auto verdicts = classification_sweep(orbit, inertia);

  Json rows = Json::array();
  std::vector<std::string> mismatches;
  for (const auto& verdict : verdicts) {
    const TheoremClaim claim = theorem_claim(verdict.family, verdict.slot_class);
    const bool special =
        verdict.family == 6 ? special6 : verdict.family == 7 ? special7 : false;
    const bool matched = verdict_matches_claim(verdict.status, claim, special);
    if (!matched)
      mismatches.push_back("t" + std::to_string(verdict.family) + " " +
                           slot_class_label(verdict.slot_class) + ": claim " +
                           claim_label(claim) + ", verdict " + status_label(verdict.status));

    Json row;
    row["family"] = "t" + std::to_string(verdict.family);
    row["slot"] = slot_label(verdict.slot);
    row["slot_class"] = slot_class_label(verdict.slot_class);
    row["status"] = status_label(verdict.status);
    row["evidence"] = verdict.evidence;
    row["claim"] = claim_label(claim);
    row["spectrum"] = spectrum_to_json(verdict.spectrum);
    row["certificate"] =
        verdict.certificate ? certificate_to_json(*verdict.certificate) : Json(nullptr);
    rows.push_back(std::move(row));
  }

  Json out;
  out["command"] = "classify";
  out["lambdas"] = lambdas_to_json(inertia);
  out["c1"] = orbit.c1;
  out["c2"] = orbit.c2;
  out["weyl_a"] = a;
  out["weyl_b"] = b;
  Json special;
  special["t6"] = special6;
  special["t7"] = special7;
  out["special_condition"] = std::move(special);
  out["verdicts"] = std::move(rows);
  if (!cfg.expect.empty()) {
    Json expect;
    expect["table"] = cfg.expect;
    expect["matched"] = mismatches.empty();
    Json diffs = Json::array();
    for (const auto& m : mismatches) diffs.push_back(m);
    expect["mismatches"] = std::move(diffs);
    out["expect"] = std::move(expect);
  }
  write_json(std::cout, out);
  if (!cfg.expect.empty() && !mismatches.empty()) return kExitPropertyFailure;
  return kExitSuccess;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyConfig {
  std::string suite;
  Eigen::Index n = 0;
  bool have_n = false;
  int samples = kDefaultVerifySamples;
  std::uint64_t seed = kDefaultVerifySeed;
};

int run_verify(const VerifyConfig& cfg) {
  if (cfg.have_n && cfg.suite != "generator-identity")
    throw std::invalid_argument("--n applies only to the generator-identity suite");

  // Seed offsets match run_all_suites, so a single-suite run reproduces the
  // corresponding row of the full run bit for bit.
  std::vector<SuiteResult> results;
  if (cfg.suite.empty()) {
    results = run_all_suites(cfg.seed, cfg.samples);
  } else if (cfg.suite == "generator-identity") {
    if (cfg.have_n) {
      results.push_back(run_generator_identity_suite(
          cfg.seed + static_cast<std::uint64_t>(cfg.n), cfg.n, cfg.samples));
    } else {
      for (Eigen::Index n = 4; n <= 8; ++n)
        results.push_back(run_generator_identity_suite(
            cfg.seed + static_cast<std::uint64_t>(n), n, cfg.samples));
    }
  } else if (cfg.suite == "poisson-structure") {
    results.push_back(run_poisson_structure_suite(cfg.seed + 101, cfg.samples));
  } else if (cfg.suite == "two-path") {
    results.push_back(run_two_path_suite(cfg.seed + 102, cfg.samples));
  } else if (cfg.suite == "bracket-table") {
    results.push_back(run_bracket_table_suite());
  } else {
    throw std::invalid_argument(
        "--suite: unknown suite '" + cfg.suite +
        "' (pick one of generator-identity, poisson-structure, two-path, bracket-table)");
  }

  bool all_pass = true;
  Json suites = Json::array();
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    Json row;
    row["name"] = r.name;
    row["samples"] = r.samples;
    row["max_error"] = r.max_error;
    row["tolerance"] = r.tolerance;
    row["pass"] = r.pass;
    suites.push_back(std::move(row));
  }

  Json out;
  out["command"] = "verify";
  out["seed"] = cfg.seed;
  out["samples"] = cfg.samples;
  out["suites"] = std::move(suites);
  out["all_pass"] = all_pass;
  write_json(std::cout, out);
  return all_pass ? kExitSuccess : kExitPropertyFailure;
}

// ---------------------------------------------------------------------------
// integrals
// ---------------------------------------------------------------------------

struct IntegralsConfig {
  std::vector<double> lambdas;
  std::string init;
  double c1 = 0.0, c2 = 0.0;
  bool have_c1 = false, have_c2 = false;
};

int run_integrals(const IntegralsConfig& cfg) {
  const InertiaSpecd inertia = make_inertia(cfg.lambdas);
  std::optional<OrbitInvariantsd> orbit;
  if (cfg.have_c1 != cfg.have_c2)
    throw std::invalid_argument("--c1 and --c2 must be given together");
  if (cfg.have_c1) orbit = make_orbit(cfg.c1, cfg.c2);
  const SkewMatrixd m = parse_init(cfg.init, orbit);

  Json integrals = Json::array();
  for (const auto& entry : integral_list(m, inertia)) {
    Json row;
    row["name"] = entry.name;
    row["value"] = entry.value;
    row["degree"] = entry.degree;
    integrals.push_back(std::move(row));
  }

  const OrbitInvariantsd state_orbit{casimir_c1(m), casimir_c2(m)};
  Json orbit_json;
  orbit_json["c1"] = state_orbit.c1;
  orbit_json["c2"] = state_orbit.c2;
  orbit_json["regular"] = state_orbit.is_regular();
  if (state_orbit.is_regular()) {
    const auto [a, b] = weyl_ab(state_orbit);
    orbit_json["weyl_a"] = a;
    orbit_json["weyl_b"] = b;
  } else {
    orbit_json["weyl_a"] = Json(nullptr);
    orbit_json["weyl_b"] = Json(nullptr);
  }

  Json out;
  out["command"] = "integrals";
  out["lambdas"] = lambdas_to_json(inertia);
  out["state"] = skew_to_json(m);
  out["integrals"] = std::move(integrals);
  out["orbit"] = std::move(orbit_json);
  write_json(std::cout, out);
  return kExitSuccess;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{
      "Free rigid body on so(n): conserved-quantity tower, equilibrium catalog, "
      "stability classification, and reference integrators for the so(5) case"};
  app.require_subcommand(1);

  SimulateConfig sim;
  CLI::App* simulate = app.add_subcommand("simulate", "Integrate the flow and report drifts");
  simulate->add_option("--lambdas", sim.lambdas, "Inertia moments lambda_1,...,lambda_5")
      ->required()
      ->delimiter(',');
  simulate
      ->add_option("--init", sim.init,
                   "Initial state: coords:v1,...,v10 or family:tK:slot=LABEL")
      ->required();
  auto* sim_c1 = simulate->add_option("--c1", sim.c1, "Orbit value of the quadratic Casimir");
  auto* sim_c2 = simulate->add_option("--c2", sim.c2, "Orbit value of the quartic Casimir");
  simulate->add_option("--dt", sim.dt, "Step size")->required();
  simulate->add_option("--steps", sim.steps, "Number of steps")->required();
  simulate->add_option("--scheme", sim.scheme,
                       "Integrator: rk4 (default) or rk4-project (Casimir projection)");
  simulate->add_option("--stride", sim.stride, "Emit every stride-th state to the CSV");
  simulate->add_option("--csv", sim.csv_path, "Write the trajectory CSV to this path");
  simulate->add_option("--drift-bound", sim.drift_bound,
                       "Maximal allowed relative drift of any tracked invariant");

  EquilibriaConfig eq;
  CLI::App* equilibria =
      app.add_subcommand("equilibria", "Catalog the equilibria of a regular orbit");
  equilibria->add_option("--lambdas", eq.lambdas, "Inertia moments lambda_1,...,lambda_5")
      ->required()
      ->delimiter(',');
  equilibria->add_option("--c1", eq.c1, "Orbit value of the quadratic Casimir")->required();
  equilibria->add_option("--c2", eq.c2, "Orbit value of the quartic Casimir")->required();
  equilibria
      ->add_option("--families", eq.families,
                   "Restrict the plane catalog to these families (e.g. t1,t8,t12)")
      ->delimiter(',');

  ClassifyConfig cls;
  CLI::App* classify =
      app.add_subcommand("classify", "Stability verdicts for all 15 x 2 plane-slot classes");
  classify->add_option("--lambdas", cls.lambdas, "Inertia moments lambda_1 > ... > lambda_5")
      ->required()
      ->delimiter(',');
  classify->add_option("--c1", cls.c1, "Orbit value of the quadratic Casimir")->required();
  classify->add_option("--c2", cls.c2, "Orbit value of the quartic Casimir")->required();
  classify->add_option("--expect", cls.expect,
                       "Diff the verdicts against the built-in reference table (value: paper) "
                       "and fail on mismatch");

  VerifyConfig ver;
  CLI::App* verify =
      app.add_subcommand("verify", "Randomized identity suites for the conserved tower");
  verify->add_option("--suite", ver.suite,
                     "Run one suite: generator-identity, poisson-structure, two-path, or "
                     "bracket-table (default: all)");
  auto* ver_n = verify->add_option("--n", ver.n, "Matrix dimension for generator-identity");
  verify->add_option("--samples", ver.samples, "Random draws per suite");
  verify->add_option("--seed", ver.seed, "Base seed for all randomized suites")
      ->envname("SO5_SEED");

  IntegralsConfig ints;
  CLI::App* integrals =
      app.add_subcommand("integrals", "Evaluate the full conserved tower at one state");
  integrals->add_option("--lambdas", ints.lambdas, "Inertia moments lambda_1,...,lambda_5")
      ->required()
      ->delimiter(',');
  integrals
      ->add_option("--init", ints.init,
                   "State: coords:v1,...,v10 or family:tK:slot=LABEL")
      ->required();
  auto* ints_c1 = integrals->add_option("--c1", ints.c1, "Orbit value of the quadratic Casimir");
  auto* ints_c2 = integrals->add_option("--c2", ints.c2, "Orbit value of the quartic Casimir");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitConfigError;
  }

  sim.have_c1 = sim_c1->count() > 0;
  sim.have_c2 = sim_c2->count() > 0;
  ints.have_c1 = ints_c1->count() > 0;
  ints.have_c2 = ints_c2->count() > 0;
  ver.have_n = ver_n->count() > 0;

  try {
    if (simulate->parsed()) return run_simulate(sim);
    if (equilibria->parsed()) return run_equilibria(eq);
    if (classify->parsed()) return run_classify(cls);
    if (verify->parsed()) return run_verify(ver);
    if (integrals->parsed()) return run_integrals(ints);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPropertyFailure;
  }
  return kExitConfigError;  // unreachable: a subcommand is required
}

}  // namespace so5::cli
