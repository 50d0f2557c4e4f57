#include <seqgen/io.hpp>

#include <seqgen/linalg.hpp>

#include <nlohmann/json.hpp>

#include <fstream>

namespace seqgen {

using nlohmann::json;

namespace {

constexpr const char* kToolVersion = "0.1.0";

json dump_complex(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex parse_complex(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw IOError(std::string(what) + ": expected [re, im] pair");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

json dump_vector(const CVector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(dump_complex(v(i)));
  return out;
}

CVector parse_vector(const json& j, const char* what) {
  if (!j.is_array()) throw IOError(std::string(what) + ": expected an array");
  CVector v(static_cast<Index>(j.size()));
  for (Index i = 0; i < v.size(); ++i) v(i) = parse_complex(j[i], what);
  return v;
}

json dump_matrix(const CMatrix& m) {
  json out = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(dump_complex(m(i, j)));
    out.push_back(row);
  }
  return out;
}

CMatrix parse_matrix(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw IOError(std::string(what) + ": expected a matrix");
  const Index rows = static_cast<Index>(j.size());
  if (!j[0].is_array() || j[0].empty())
    throw IOError(std::string(what) + ": expected nested row arrays");
  const Index cols = static_cast<Index>(j[0].size());
  CMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<Index>(j[i].size()) != cols)
      throw IOError(std::string(what) + ": ragged rows");
    for (Index c = 0; c < cols; ++c) m(i, c) = parse_complex(j[i][c], what);
  }
  return m;
}

json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IOError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw IOError(path.string() + ": " + e.what());
  }
}

void write_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw IOError("cannot open " + path.string() + " for writing");
  out << j.dump(2) << '\n';
  if (!out) throw IOError("failed to write " + path.string());
}

int parse_qubit_count(const json& j) {
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw IOError("missing integer field \"n\"");
  const int n = j["n"].get<int>();
  if (n < 1 || n > 30) throw IOError("qubit count out of range");
  return n;
}

} // namespace

StateVector load_state(const std::filesystem::path& path) {
  const json j = read_file(path);
  const int n = parse_qubit_count(j);
  if (!j.contains("amps")) throw IOError("state file: missing \"amps\"");
  CVector amps = parse_vector(j["amps"], "amps");

  StateVector psi;
  try {
    psi = make_state(n, std::move(amps));
  } catch (const std::invalid_argument& e) {
    throw IOError(std::string("state file: ") + e.what());
  }
  const bool flagged_unnormalized = j.contains("normalized") && j["normalized"].is_boolean() &&
                                    !j["normalized"].get<bool>();
  if (flagged_unnormalized) {
    psi.unnormalized = true;
  } else if (std::abs(psi.amps.norm() - 1.0) > 1e-10) {
    throw IOError("state file: not normalized (set \"normalized\": false to accept)");
  }
  return psi;
}

void save_state(const std::filesystem::path& path, const StateVector& psi) {
  json j;
  j["n"] = psi.n;
  j["amps"] = dump_vector(psi.amps);
  if (psi.unnormalized) j["normalized"] = false;
  write_file(path, j);
}

Recipe load_recipe(const std::filesystem::path& path) {
  const json j = read_file(path);
  const int n = parse_qubit_count(j);
  if (!j.contains("isometries") || !j["isometries"].is_array() ||
      static_cast<int>(j["isometries"].size()) != n)
    throw IOError("recipe file: expected n isometries");

  Recipe r;
  r.isometries.reserve(n);
  for (const auto& m : j["isometries"]) r.isometries.push_back(parse_matrix(m, "isometry"));
  if (!j.contains("phi_I")) throw IOError("recipe file: missing \"phi_I\"");
  r.phi_I = parse_vector(j["phi_I"], "phi_I");
  if (j.contains("phi_F_expected"))
    r.phi_F_expected = parse_vector(j["phi_F_expected"], "phi_F_expected");
  if (j.contains("metadata") && j["metadata"].contains("generator"))
    r.note = j["metadata"]["generator"].get<std::string>();

  try {
    validate_recipe(r);
  } catch (const std::invalid_argument& e) {
    throw IOError(std::string("recipe file: ") + e.what());
  }
  return r;
}

void save_recipe(const std::filesystem::path& path, const Recipe& r,
                 const nlohmann::json& metadata) {
  json j;
  j["n"] = r.n();
  const auto dims = recipe_dims(r);
  j["dims"] = json(dims);
  json isos = json::array();
  double max_residual = 0.0;
  for (const auto& v : r.isometries) {
    isos.push_back(dump_matrix(v));
    max_residual = std::max(max_residual, is_isometry(v, 1e-10).residual);
  }
  j["isometries"] = std::move(isos);
  j["phi_I"] = dump_vector(r.phi_I);
  if (r.phi_F_expected.size() > 0) j["phi_F_expected"] = dump_vector(r.phi_F_expected);

  json meta = metadata.is_null() ? json::object() : metadata;
  if (!meta.contains("generator") && !r.note.empty()) meta["generator"] = r.note;
  meta["tool_version"] = kToolVersion;
  meta["max_isometry_residual"] = max_residual;
  j["metadata"] = std::move(meta);
  write_file(path, j);
}

MPSState load_mps(const std::filesystem::path& path) {
  const json j = read_file(path);
  const int n = parse_qubit_count(j);
  if (!j.contains("sites") || !j["sites"].is_array() || static_cast<int>(j["sites"].size()) != n)
    throw IOError("mps file: expected n sites");

  MPSState m;
  m.sites.reserve(n);
  for (const auto& site : j["sites"]) {
    if (!site.contains("V0") || !site.contains("V1"))
      throw IOError("mps file: each site needs \"V0\" and \"V1\"");
    m.sites.push_back({parse_matrix(site["V0"], "V0"), parse_matrix(site["V1"], "V1")});
  }
  if (!j.contains("phi_I") || !j.contains("phi_F"))
    throw IOError("mps file: missing boundary vectors");
  m.phi_I = parse_vector(j["phi_I"], "phi_I");
  m.phi_F = parse_vector(j["phi_F"], "phi_F");

  try {
    validate_mps(m);
  } catch (const std::invalid_argument& e) {
    throw IOError(std::string("mps file: ") + e.what());
  }
  return m;
}

void save_mps(const std::filesystem::path& path, const MPSState& m) {
  json j;
  j["n"] = m.n();
  j["dims"] = json(bond_dimensions(m));
  json sites = json::array();
  for (const auto& [v0, v1] : m.sites)
    sites.push_back(json{{"V0", dump_matrix(v0)}, {"V1", dump_matrix(v1)}});
  j["sites"] = std::move(sites);
  j["phi_I"] = dump_vector(m.phi_I);
  j["phi_F"] = dump_vector(m.phi_F);
  write_file(path, j);
}

} // namespace seqgen
