#include <seqgen/io.hpp>
#include <seqgen/linalg.hpp>
#include <seqgen/recipes.hpp>
#include <seqgen/simulator.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <iostream>
#include <numbers>
#include <random>
#include <string>

namespace {

using namespace seqgen;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;   // verification or compilation failed
constexpr int kExitBadInput = 2;  // unreadable/invalid input or arguments

void print_dims(const std::vector<Index>& dims) {
  std::cout << "bond dimensions:";
  for (Index d : dims) std::cout << ' ' << d;
  std::cout << '\n';
}

void print_step_shapes(const Recipe& r) {
  std::cout << "step shapes:";
  for (const auto& v : r.isometries) std::cout << ' ' << v.rows() << 'x' << v.cols();
  std::cout << '\n';
}

void print_state(const StateVector& psi) {
  std::cout << "state (n=" << psi.n << "), |b> : amplitude\n";
  for (Index b = 0; b < psi.amps.size(); ++b) {
    const Complex a = psi.amps(b);
    if (std::abs(a) < 1e-12) continue;
    std::cout << "  " << b << " : " << a.real() << (a.imag() < 0 ? " - " : " + ")
              << std::abs(a.imag()) << "i\n";
  }
}

int cmd_compile(const std::string& in, const std::string& out, double rank_tol) {
  StateVector psi = load_state(in);
  if (psi.unnormalized) psi = normalized(psi);

  auto [recipe, trace] = compile_state(psi, rank_tol);
  print_dims(recipe_dims(recipe));
  print_step_shapes(recipe);
  std::cout << "represented-state norm: " << trace.state_norm << '\n';

  nlohmann::json meta;
  meta["generator"] = "compile";
  meta["source"] = in;
  meta["rank_tol"] = rank_tol;
  save_recipe(out, recipe, meta);
  std::cout << "wrote " << out << '\n';
  return kExitOk;
}

int cmd_simulate(const std::string& recipe_path, const std::string& target_path,
                 const std::string& out, double tol) {
  Recipe recipe = load_recipe(recipe_path);

  for (int k = 1; k <= recipe.n(); ++k) {
    const auto check = is_isometry(recipe.isometries[k - 1], tol);
    if (!check.isometric) {
      std::cerr << "step " << k << " is not an isometry (residual " << check.residual
                << ")\n";
      return kExitFailure;
    }
  }

  JointState joint = run_recipe(recipe);
  const RVector spectrum = schmidt_spectrum(joint);
  const double residual = spectrum.size() > 1 ? spectrum(1) : 0.0;
  std::cout << "decoupling residual: " << residual << '\n';
  if (residual >= tol) {
    std::cerr << "ancilla not decoupled at tolerance " << tol << '\n';
    return kExitFailure;
  }

  DecoupledState parts = decouple(joint, tol);
  print_state(parts.qubits);
  if (!out.empty()) {
    save_state(out, parts.qubits);
    std::cout << "wrote " << out << '\n';
  }

  if (!target_path.empty()) {
    StateVector target = load_state(target_path);
    if (target.unnormalized) target = normalized(target);
    const double fid = fidelity(parts.qubits, target);
    std::cout << "fidelity vs target: " << fid << '\n';
    if (fid < 1.0 - tol) return kExitFailure;
  }
  return kExitOk;
}

int cmd_recipe(const std::string& type, int n, std::vector<double> theta,
               std::vector<double> phi, std::uint64_t seed, bool have_seed,
               const std::string& out, const std::string& target_out) {
  if (n < 1) throw std::invalid_argument("recipe: --n must be >= 1");
  const std::size_t want =
      type == "ghz" ? 1 : static_cast<std::size_t>(type == "w" ? n - 1 : n);
  if (theta.empty() && phi.empty() && have_seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (std::size_t i = 0; i < want; ++i) theta.push_back(angle(rng));
    for (std::size_t i = 0; i < want; ++i) phi.push_back(angle(rng));
  }
  if (phi.empty()) phi.assign(theta.size(), 0.0);

  Recipe recipe;
  StateVector target;
  if (type == "w") {
    RecipeParams p{n, theta, phi};
    recipe = w_recipe(p);
    target = w_closed_form(p);
  } else if (type == "ghz") {
    if (theta.size() != 1 || phi.size() != 1)
      throw std::invalid_argument("ghz: expected exactly one theta and one phi");
    recipe = ghz_recipe(n, phi[0], theta[0]);
    target = ghz_closed_form(n, phi[0], theta[0]);
  } else if (type == "cluster") {
    RecipeParams p{n, theta, phi};
    recipe = cluster_recipe(p);
    target = cluster_closed_form(p);
  } else {
    throw std::invalid_argument("unknown recipe type: " + type);
  }

  nlohmann::json meta;
  meta["generator"] = type;
  meta["parameters"] = {{"n", n}, {"theta", theta}, {"phi", phi}};
  save_recipe(out, recipe, meta);
  print_dims(recipe_dims(recipe));
  std::cout << "wrote " << out << '\n';
  if (!target_out.empty()) {
    save_state(target_out, target);
    std::cout << "wrote " << target_out << '\n';
  }
  return kExitOk;
}

int cmd_mps(const std::string& in, const std::string& out, double rank_tol) {
  StateVector psi = load_state(in);
  if (psi.unnormalized) psi = normalized(psi);
  MPSState m = state_to_mps(psi, rank_tol);
  print_dims(bond_dimensions(m));
  save_mps(out, m);
  std::cout << "wrote " << out << '\n';
  return kExitOk;
}

int cmd_verify(const std::string& recipe_path, const std::string& target_path, double tol) {
  Recipe recipe = load_recipe(recipe_path);
  StateVector target = load_state(target_path);
  if (target.unnormalized) target = normalized(target);

  VerifyReport report = verify_recipe(recipe, target, tol);
  for (std::size_t k = 0; k < report.step_residuals.size(); ++k)
    std::cout << "step " << k + 1 << " isometry residual: " << report.step_residuals[k] << '\n';
  std::cout << "decoupling residual: " << report.decoupling_residual << '\n';
  std::cout << "fidelity: " << report.fidelity_value << '\n';
  std::cout << (report.pass ? "PASS" : "FAIL") << " at tolerance " << tol << '\n';
  return report.pass ? kExitOk : kExitFailure;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compile, simulate, and verify sequential generation recipes "
               "for entangled multi-qubit states"};
  app.require_subcommand(1);

  std::string in_path, out_path, recipe_path, target_path, target_out, type;
  double tol = 1e-10;
  double rank_tol = 1e-12;
  int n = 0;
  std::vector<double> theta, phi;
  std::uint64_t seed = 0;

  auto* compile = app.add_subcommand("compile", "State file -> recipe file");
  compile->add_option("--in", in_path, "Input state JSON")->required();
  compile->add_option("--out", out_path, "Output recipe JSON")->required();
  compile->add_option("--rank-tol", rank_tol, "Relative singular-value cutoff");

  auto* simulate = app.add_subcommand("simulate", "Run a recipe and report the emitted state");
  simulate->add_option("--recipe", recipe_path, "Recipe JSON")->required();
  simulate->add_option("--target", target_path, "Optional target state JSON");
  simulate->add_option("--out", out_path, "Write the emitted state here");
  simulate->add_option("--tol", tol, "Verification tolerance");

  auto* recipe = app.add_subcommand("recipe", "Emit a built-in W/GHZ/cluster recipe");
  recipe->add_option("--type", type, "w, ghz, or cluster")->required();
  recipe->add_option("--n", n, "Number of qubits")->required();
  recipe->add_option("--theta", theta, "Rotation angles (radians)");
  recipe->add_option("--phi", phi, "Phase angles (radians)");
  auto* seed_opt = recipe->add_option("--seed", seed, "Draw missing angles from this seed");
  recipe->add_option("--out", out_path, "Output recipe JSON")->required();
  recipe->add_option("--emit-target", target_out, "Also write the closed-form target state");

  auto* mps = app.add_subcommand("mps", "State file -> MPS file");
  mps->add_option("--in", in_path, "Input state JSON")->required();
  mps->add_option("--out", out_path, "Output MPS JSON")->required();
  mps->add_option("--rank-tol", rank_tol, "Relative singular-value cutoff");

  auto* verify = app.add_subcommand("verify", "Check a recipe against a target state");
  verify->add_option("--recipe", recipe_path, "Recipe JSON")->required();
  verify->add_option("--target", target_path, "Target state JSON")->required();
  verify->add_option("--tol", tol, "Verification tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (app.got_subcommand(compile)) return cmd_compile(in_path, out_path, rank_tol);
    if (app.got_subcommand(simulate))
      return cmd_simulate(recipe_path, target_path, out_path, tol);
    if (app.got_subcommand(recipe))
      return cmd_recipe(type, n, theta, phi, seed, seed_opt->count() > 0, out_path, target_out);
    if (app.got_subcommand(mps)) return cmd_mps(in_path, out_path, rank_tol);
    if (app.got_subcommand(verify)) return cmd_verify(recipe_path, target_path, tol);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitBadInput;
}
