#include <seqgen/recipes.hpp>

#include <numbers>
#include <stdexcept>

namespace seqgen {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

CVector level_ket(AtomLevel l) {
  CVector v = CVector::Zero(3);
  v(static_cast<int>(l)) = 1.0;
  return v;
}

Recipe assemble(int n, const CVector& phi_initial,
                const std::vector<CMatrix>& atom_unitaries, const std::string& note) {
  Recipe rec;
  rec.isometries.reserve(n);
  const CMatrix emission = m_ab();
  for (const auto& u : atom_unitaries) rec.isometries.push_back(emission * u);
  rec.phi_I = phi_initial;
  rec.phi_F_expected = level_ket(AtomLevel::b1);
  rec.note = note;
  return rec;
}

void check_angle_counts(const RecipeParams& p, std::size_t expected, const char* family) {
  if (p.theta.size() != expected || p.phi.size() != expected)
    throw std::invalid_argument(std::string(family) + ": expected " +
                                std::to_string(expected) + " theta and phi entries");
}

} // namespace

CMatrix m_ab() {
  CMatrix v = CMatrix::Zero(6, 3);
  v(1 * 3 + 1, 0) = 1.0;  // |a>  -> |b1>|1>
  v(0 * 3 + 1, 1) = 1.0;  // |b1> -> |b1>|0>
  v(0 * 3 + 2, 2) = 1.0;  // |b2> -> |b2>|0>
  return v;
}

CMatrix u_klm(AtomLevel k, AtomLevel l, AtomLevel m, double phi, double theta) {
  const int ki = static_cast<int>(k);
  const int li = static_cast<int>(l);
  const int mi = static_cast<int>(m);
  if (ki == li || ki == mi || li == mi)
    throw std::invalid_argument("u_klm: levels must be distinct");

  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Complex e_plus = std::exp(Complex(0.0, phi));

  CMatrix u = CMatrix::Zero(3, 3);
  u(ki, ki) = c;
  u(li, li) = c;
  u(ki, li) = e_plus * s;
  u(li, ki) = -std::conj(e_plus) * s;
  u(mi, mi) = 1.0;
  return u;
}

Recipe w_recipe(const RecipeParams& p) {
  if (p.n < 1) throw std::invalid_argument("w_recipe: n must be >= 1");
  check_angle_counts(p, static_cast<std::size_t>(p.n - 1), "w_recipe");

  std::vector<CMatrix> rotations;
  rotations.reserve(p.n);
  for (int i = 0; i < p.n - 1; ++i)
    rotations.push_back(u_klm(AtomLevel::a, AtomLevel::b2, AtomLevel::b1, p.phi[i], p.theta[i]));
  rotations.push_back(u_klm(AtomLevel::a, AtomLevel::b2, AtomLevel::b1, 0.0, kHalfPi));
  return assemble(p.n, level_ket(AtomLevel::b2), rotations, "w");
}

StateVector w_closed_form(const RecipeParams& p) {
  if (p.n < 1) throw std::invalid_argument("w_closed_form: n must be >= 1");
  check_angle_counts(p, static_cast<std::size_t>(p.n - 1), "w_closed_form");

  CVector amps = CVector::Zero(Index{1} << p.n);
  double cos_chain = 1.0;
  for (int m = 1; m <= p.n - 1; ++m) {
    amps(Index{1} << (m - 1)) =
        cos_chain * std::exp(Complex(0.0, p.phi[m - 1])) * std::sin(p.theta[m - 1]);
    cos_chain *= std::cos(p.theta[m - 1]);
  }
  amps(Index{1} << (p.n - 1)) = cos_chain;
  return make_state(p.n, std::move(amps));
}

Recipe ghz_recipe(int n, double phi1, double theta1) {
  if (n < 2) throw std::invalid_argument("ghz_recipe: n must be >= 2");

  std::vector<CMatrix> rotations;
  rotations.reserve(n);
  rotations.push_back(u_klm(AtomLevel::a, AtomLevel::b2, AtomLevel::b1, phi1, theta1));
  for (int i = 2; i <= n - 1; ++i)
    rotations.push_back(u_klm(AtomLevel::a, AtomLevel::b1, AtomLevel::b2, 0.0, kHalfPi));
  rotations.push_back(u_klm(AtomLevel::b1, AtomLevel::b2, AtomLevel::a, 0.0, kHalfPi) *
                      u_klm(AtomLevel::a, AtomLevel::b1, AtomLevel::b2, 0.0, kHalfPi));
  return assemble(n, level_ket(AtomLevel::a), rotations, "ghz");
}

StateVector ghz_closed_form(int n, double phi1, double theta1) {
  if (n < 2) throw std::invalid_argument("ghz_closed_form: n must be >= 2");
  CVector amps = CVector::Zero(Index{1} << n);
  amps((Index{1} << n) - 1) = std::cos(theta1);
  amps(0) = -std::exp(Complex(0.0, -phi1)) * std::sin(theta1);
  return make_state(n, std::move(amps));
}

Recipe cluster_recipe(const RecipeParams& p) {
  if (p.n < 1) throw std::invalid_argument("cluster_recipe: n must be >= 1");
  check_angle_counts(p, static_cast<std::size_t>(p.n), "cluster_recipe");

  const CMatrix lift_b1 = u_klm(AtomLevel::a, AtomLevel::b1, AtomLevel::b2, 0.0, kHalfPi);
  std::vector<CMatrix> rotations;
  rotations.reserve(p.n);
  for (int i = 0; i < p.n - 1; ++i)
    rotations.push_back(
        u_klm(AtomLevel::a, AtomLevel::b2, AtomLevel::b1, p.phi[i], p.theta[i]) * lift_b1);
  rotations.push_back(
      u_klm(AtomLevel::a, AtomLevel::b1, AtomLevel::b2, p.phi[p.n - 1], p.theta[p.n - 1]) *
      u_klm(AtomLevel::b1, AtomLevel::b2, AtomLevel::a, 0.0, kHalfPi) * lift_b1);
  return assemble(p.n, level_ket(AtomLevel::b2), rotations, "cluster");
}

StateVector cluster_closed_form(const RecipeParams& p) {
  if (p.n < 1) throw std::invalid_argument("cluster_closed_form: n must be >= 1");
  check_angle_counts(p, static_cast<std::size_t>(p.n), "cluster_closed_form");

  // Each factor contributes a diagonal coefficient on the predecessor
  // qubit; the boundary factor is a plain scalar pair.
  auto link = [&p](int i, int q_i, int q_prev) -> Complex {
    const double c = std::cos(p.theta[i - 1]);
    const double s = std::sin(p.theta[i - 1]);
    const Complex e_plus = std::exp(Complex(0.0, p.phi[i - 1]));
    if (q_i == 0) return q_prev == 0 ? Complex(c) : -std::conj(e_plus) * s;
    return q_prev == 0 ? e_plus * s : Complex(c);
  };

  const Index size = Index{1} << p.n;
  CVector amps(size);
  for (Index b = 0; b < size; ++b) {
    const int q1 = static_cast<int>(b & 1);
    Complex amp = q1 == 0 ? Complex(std::cos(p.theta[0]))
                          : std::exp(Complex(0.0, p.phi[0])) * std::sin(p.theta[0]);
    for (int i = 2; i <= p.n; ++i)
      amp *= link(i, static_cast<int>((b >> (i - 1)) & 1), static_cast<int>((b >> (i - 2)) & 1));
    amps(b) = amp;
  }
  return make_state(p.n, std::move(amps));
}

StateVector cluster_standard(int n) {
  if (n < 1) throw std::invalid_argument("cluster_standard: n must be >= 1");
  const Index size = Index{1} << n;
  const double scale = std::pow(2.0, -0.5 * n);
  CVector amps(size);
  for (Index b = 0; b < size; ++b) {
    int sign = 1;
    for (int i = 2; i <= n; ++i)
      if (((b >> (i - 1)) & 1) == 0 && ((b >> (i - 2)) & 1) == 1) sign = -sign;
    amps(b) = sign * scale;
  }
  return make_state(n, std::move(amps));
}

} // namespace seqgen
