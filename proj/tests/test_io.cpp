#include <seqgen/io.hpp>

#include <seqgen/recipes.hpp>
#include <seqgen/simulator.hpp>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>

#include "oracles.hpp"

using namespace seqgen;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("seqgen_io_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  fs::path file(const std::string& name) const { return path / name; }
};

} // namespace

TEST_CASE("state files round trip losslessly") {
  TempDir dir;
  const StateVector psi = oracles::random_state(4, 17);
  save_state(dir.file("s.json"), psi);
  const StateVector back = load_state(dir.file("s.json"));
  CHECK(back.n == 4);
  CHECK(back.amps == psi.amps);  // bit-exact doubles
}

TEST_CASE("state files enforce the normalization flag") {
  TempDir dir;
  StateVector psi = oracles::random_state(2, 18);
  psi.amps *= 1.5;

  psi.unnormalized = false;
  save_state(dir.file("bad.json"), psi);
  CHECK_THROWS_AS(load_state(dir.file("bad.json")), IOError);

  psi.unnormalized = true;
  save_state(dir.file("flagged.json"), psi);
  const StateVector back = load_state(dir.file("flagged.json"));
  CHECK(back.unnormalized);
  CHECK(back.amps == psi.amps);
}

TEST_CASE("state files reject malformed input") {
  TempDir dir;
  std::ofstream(dir.file("garbage.json")) << "{ not json";
  CHECK_THROWS_AS(load_state(dir.file("garbage.json")), IOError);

  std::ofstream(dir.file("short.json")) << R"({"n": 2, "amps": [[1.0, 0.0]]})";
  CHECK_THROWS_AS(load_state(dir.file("short.json")), IOError);

  CHECK_THROWS_AS(load_state(dir.file("missing.json")), IOError);
}

TEST_CASE("recipe files round trip and carry metadata") {
  TempDir dir;
  const Recipe recipe = ghz_recipe(4, 0.25, 1.1);
  nlohmann::json meta;
  meta["generator"] = "ghz";
  meta["parameters"] = {{"n", 4}, {"theta", {1.1}}, {"phi", {0.25}}};
  save_recipe(dir.file("r.json"), recipe, meta);

  const Recipe back = load_recipe(dir.file("r.json"));
  REQUIRE(back.n() == 4);
  for (int k = 0; k < 4; ++k) CHECK(back.isometries[k] == recipe.isometries[k]);
  CHECK(back.phi_I == recipe.phi_I);
  CHECK(back.phi_F_expected == recipe.phi_F_expected);
  CHECK(back.note == "ghz");

  const nlohmann::json raw = nlohmann::json::parse(std::ifstream(dir.file("r.json")));
  CHECK(raw["metadata"]["tool_version"].is_string());
  CHECK(raw["metadata"]["max_isometry_residual"].get<double>() < 1e-10);
  CHECK(raw["dims"] == nlohmann::json({3, 3, 3, 3, 3}));

  // loaded recipe still simulates identically
  const StateVector a = decouple(run_recipe(recipe), 1e-10).qubits;
  const StateVector b = decouple(run_recipe(back), 1e-10).qubits;
  CHECK(a.amps == b.amps);
}

TEST_CASE("recipe files reject broken chains") {
  TempDir dir;
  Recipe recipe = ghz_recipe(3, 0.0, 0.5);
  recipe.isometries[1] = recipe.isometries[1].topRows(4).eval();  // now 4x3, odd chain
  save_recipe(dir.file("broken.json"), recipe, {});
  CHECK_THROWS_AS(load_recipe(dir.file("broken.json")), IOError);
}

TEST_CASE("mps files round trip") {
  TempDir dir;
  const StateVector psi = oracles::random_state(5, 19);
  const MPSState m = state_to_mps(psi);
  save_mps(dir.file("m.json"), m);
  const MPSState back = load_mps(dir.file("m.json"));
  REQUIRE(back.n() == 5);
  CHECK(back.phi_I == m.phi_I);
  CHECK(back.phi_F == m.phi_F);
  for (int k = 0; k < 5; ++k) {
    CHECK(back.sites[k][0] == m.sites[k][0]);
    CHECK(back.sites[k][1] == m.sites[k][1]);
  }
  CHECK(fidelity(mps_evaluate(back), psi) >= 1.0 - 1e-10);
}
