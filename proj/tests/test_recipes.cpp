#include <seqgen/recipes.hpp>

#include <seqgen/linalg.hpp>
#include <seqgen/mps.hpp>
#include <seqgen/simulator.hpp>

#include <doctest.h>

#include <random>

#include "oracles.hpp"

using namespace seqgen;

namespace {

StateVector simulate_to_state(const Recipe& r) {
  return decouple(run_recipe(r), 1e-10).qubits;
}

// Decoupled atom must sit in a single level, up to phase.
void check_atom_level(const Recipe& r, int level) {
  const DecoupledState parts = decouple(run_recipe(r), 1e-10);
  CHECK(std::abs(parts.ancilla(level)) == doctest::Approx(1.0).epsilon(1e-10));
}

RecipeParams random_params(int n, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  RecipeParams p;
  p.n = n;
  for (int i = 0; i < count; ++i) p.theta.push_back(angle(rng));
  for (int i = 0; i < count; ++i) p.phi.push_back(angle(rng));
  return p;
}

} // namespace

TEST_CASE("m_ab maps each level as written") {
  const CMatrix m = m_ab();
  REQUIRE(m.rows() == 6);
  REQUIRE(m.cols() == 3);
  CHECK(is_isometry(m, 1e-15).isometric);
  // |a> -> |b1>|1>: unit entry at block row i=1, level b1
  CHECK(std::abs(m(1 * 3 + 1, 0) - Complex(1.0)) == 0.0);
  CHECK(m.col(0).cwiseAbs().sum() == 1.0);
  // |b2> -> |b2>|0>
  CHECK(std::abs(m(0 * 3 + 2, 2) - Complex(1.0)) == 0.0);
  CHECK(m.col(2).cwiseAbs().sum() == 1.0);
}

TEST_CASE("u_klm limits and unitarity") {
  using enum AtomLevel;
  CHECK((u_klm(a, b2, b1, 0.7, 0.0) - CMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() <
        1e-15);

  const CMatrix swap_like = u_klm(a, b2, b1, 0.0, std::numbers::pi / 2.0);
  CHECK(std::abs(swap_like(0, 2) - Complex(1.0)) < 1e-15);   // |k><l|
  CHECK(std::abs(swap_like(2, 0) - Complex(-1.0)) < 1e-15);  // -|l><k|
  CHECK(std::abs(swap_like(1, 1) - Complex(1.0)) == 0.0);    // |m><m|

  for (std::uint64_t s : {1u, 2u, 3u}) {
    std::mt19937_64 rng(s);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    const CMatrix u = u_klm(b1, a, b2, angle(rng), angle(rng));
    CHECK(is_isometry(u, 1e-14).isometric);
  }

  CHECK_THROWS_AS(u_klm(a, a, b1, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("w_recipe emits a single photon for n = 1") {
  const StateVector out = simulate_to_state(w_recipe(RecipeParams{1, {}, {}}));
  CHECK(std::abs(out.amps(1)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("w_recipe at the uniform angles gives the W state") {
  RecipeParams p;
  p.n = 3;
  p.theta = {std::asin(1.0 / std::sqrt(3.0)), std::numbers::pi / 4.0};
  p.phi = {0.0, 0.0};
  const StateVector out = simulate_to_state(w_recipe(p));
  CVector expect = CVector::Zero(8);
  expect(1) = expect(2) = expect(4) = 1.0 / std::sqrt(3.0);
  CHECK(fidelity(out, make_state(3, expect)) >= 1.0 - 1e-10);
  check_atom_level(w_recipe(p), static_cast<int>(AtomLevel::b1));
}

TEST_CASE("w_recipe matches its closed form for random angles") {
  for (std::uint64_t seed : {100u, 101u, 102u}) {
    const RecipeParams p = random_params(6, 5, seed);
    CHECK(fidelity(simulate_to_state(w_recipe(p)), w_closed_form(p)) >= 1.0 - 1e-10);
  }
  CHECK_THROWS_AS(w_recipe(RecipeParams{3, {0.1}, {0.0}}), std::invalid_argument);
}

TEST_CASE("w_closed_form boundary terms and normalization") {
  RecipeParams p{2, {0.0}, {0.0}};
  StateVector psi = w_closed_form(p);
  CHECK(std::abs(psi.amps(2) - Complex(1.0)) == 0.0);  // cos term on qubit 2

  p.theta = {std::numbers::pi / 2.0};
  psi = w_closed_form(p);
  CHECK(std::abs(psi.amps(1) - Complex(1.0)) < 1e-15);  // sin term on qubit 1

  for (std::uint64_t seed : {7u, 8u}) {
    const RecipeParams q = random_params(7, 6, seed);
    CHECK(norm(w_closed_form(q)) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("ghz_recipe produces the expected two-branch state") {
  const double quarter = std::numbers::pi / 4.0;
  const StateVector out = simulate_to_state(ghz_recipe(3, 0.0, quarter));
  CVector expect = CVector::Zero(8);
  expect(7) = 1.0 / std::sqrt(2.0);
  expect(0) = -1.0 / std::sqrt(2.0);
  CHECK(fidelity(out, make_state(3, expect)) >= 1.0 - 1e-10);
  CHECK(fidelity(out, ghz_closed_form(3, 0.0, quarter)) >= 1.0 - 1e-10);

  // theta = 0 leaves only the all-ones branch
  const StateVector ones = simulate_to_state(ghz_recipe(4, 0.3, 0.0));
  CHECK(std::abs(ones.amps(15)) == doctest::Approx(1.0).epsilon(1e-10));

  check_atom_level(ghz_recipe(5, 1.2, 0.8), static_cast<int>(AtomLevel::b1));
  CHECK_THROWS_AS(ghz_recipe(1, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("ghz_recipe matches the closed form for random angles") {
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int n : {2, 4, 6}) {
    const double phi1 = angle(rng);
    const double theta1 = angle(rng);
    CHECK(fidelity(simulate_to_state(ghz_recipe(n, phi1, theta1)),
                   ghz_closed_form(n, phi1, theta1)) >= 1.0 - 1e-10);
  }
}

TEST_CASE("cluster_recipe at standard angles gives the standard cluster state") {
  for (int n : {2, 4}) {
    RecipeParams p;
    p.n = n;
    p.theta.assign(n, std::numbers::pi / 4.0);
    p.phi.assign(n, 0.0);
    CHECK(fidelity(simulate_to_state(cluster_recipe(p)), cluster_standard(n)) >=
          1.0 - 1e-10);
  }
}

TEST_CASE("cluster_recipe matches the closed form for random angles") {
  for (std::uint64_t seed : {200u, 201u, 202u}) {
    const RecipeParams p = random_params(5, 5, seed);
    CHECK(fidelity(simulate_to_state(cluster_recipe(p)), cluster_closed_form(p)) >=
          1.0 - 1e-10);
    check_atom_level(cluster_recipe(p), static_cast<int>(AtomLevel::b1));
  }
  CHECK_THROWS_AS(cluster_recipe(RecipeParams{3, {0.1}, {0.0}}), std::invalid_argument);
}

TEST_CASE("cluster_closed_form boundary case and standard-angle identity") {
  RecipeParams p1{1, {0.3}, {1.1}};
  const StateVector one = cluster_closed_form(p1);
  CHECK(std::abs(one.amps(0) - Complex(std::cos(0.3))) < 1e-15);
  CHECK(std::abs(one.amps(1) - std::exp(Complex(0.0, 1.1)) * std::sin(0.3)) < 1e-15);

  for (int n : {1, 3, 6}) {
    RecipeParams p;
    p.n = n;
    p.theta.assign(n, std::numbers::pi / 4.0);
    p.phi.assign(n, 0.0);
    CHECK((cluster_closed_form(p).amps - cluster_standard(n).amps).cwiseAbs().maxCoeff() <
          1e-12);
  }
}

TEST_CASE("cluster_closed_form n = 2 against the hand expansion") {
  const double t1 = 0.4, f1 = 0.9, t2 = 1.3, f2 = 2.1;
  const StateVector psi = cluster_closed_form(RecipeParams{2, {t1, t2}, {f1, f2}});
  const Complex e1 = std::exp(Complex(0.0, f1)), e2 = std::exp(Complex(0.0, f2));
  CHECK(std::abs(psi.amps(0) - std::cos(t1) * std::cos(t2)) < 1e-15);
  CHECK(std::abs(psi.amps(1) + e1 * std::sin(t1) * std::conj(e2) * std::sin(t2)) < 1e-15);
  CHECK(std::abs(psi.amps(2) - std::cos(t1) * e2 * std::sin(t2)) < 1e-15);
  CHECK(std::abs(psi.amps(3) - e1 * std::sin(t1) * std::cos(t2)) < 1e-15);
}

TEST_CASE("cluster_standard small cases") {
  const StateVector one = cluster_standard(1);
  CHECK(std::abs(one.amps(0) - Complex(1.0 / std::sqrt(2.0))) < 1e-15);
  CHECK(std::abs(one.amps(1) - Complex(1.0 / std::sqrt(2.0))) < 1e-15);

  // n = 2: minus sign exactly where the later qubit is 0 above an earlier 1
  const StateVector two = cluster_standard(2);
  CHECK(two.amps(0).real() == doctest::Approx(0.5));
  CHECK(two.amps(1).real() == doctest::Approx(-0.5));
  CHECK(two.amps(2).real() == doctest::Approx(0.5));
  CHECK(two.amps(3).real() == doctest::Approx(0.5));

  // n = 3 sign pattern from expanding the sigma^z chain by hand
  const StateVector three = cluster_standard(3);
  const double u = 1.0 / std::sqrt(8.0);
  const double expect[8] = {u, -u, -u, -u, u, -u, u, u};
  for (Index b = 0; b < 8; ++b) CHECK(three.amps(b).real() == doctest::Approx(expect[b]));
}

TEST_CASE("every recipe step is a 6x3 isometry and all families decouple") {
  const RecipeParams wp = random_params(5, 4, 301);
  const RecipeParams cp = random_params(5, 5, 302);
  for (const Recipe& r :
       {w_recipe(wp), ghz_recipe(5, 0.4, 1.9), cluster_recipe(cp)}) {
    for (const auto& v : r.isometries) {
      CHECK(v.rows() == 6);
      CHECK(v.cols() == 3);
      CHECK(is_isometry(v, 1e-14).isometric);
    }
    const RVector spectrum = schmidt_spectrum(run_recipe(r));
    CHECK(spectrum(1) < 1e-10);
  }
}

TEST_CASE("family outputs are matrix-product states with two-level bonds") {
  const RecipeParams wp = random_params(6, 5, 401);
  const RecipeParams cp = random_params(6, 6, 402);
  for (const Recipe& r :
       {w_recipe(wp), ghz_recipe(6, 2.2, 0.7), cluster_recipe(cp)}) {
    const StateVector psi = simulate_to_state(r);
    const auto dims = bond_dimensions(state_to_mps(psi));
    for (std::size_t k = 1; k + 1 < dims.size(); ++k) CHECK(dims[k] <= 2);
  }
}
