#pragma once

#include <seqgen/compiler.hpp>
#include <seqgen/mps.hpp>
#include <seqgen/state.hpp>

#include <nlohmann/json_fwd.hpp>

#include <filesystem>
#include <stdexcept>

namespace seqgen {

/// Raised for unreadable, unparseable, or structurally invalid files.
class IOError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// All files are JSON with complex numbers as [re, im] pairs and matrices as
// nested row arrays; doubles are serialized losslessly.
//
// State file:  { "n", "amps", "normalized"? }
//   A state with "normalized": false is accepted as-is and flagged.
// Recipe file: { "n", "dims", "isometries", "phi_I", "phi_F_expected"?, "metadata"? }
//   Step matrices use the recipe row convention (r = i * D_k + alpha).
// MPS file:    { "n", "dims", "sites": [{"V0","V1"},...], "phi_I", "phi_F" }

StateVector load_state(const std::filesystem::path& path);
void save_state(const std::filesystem::path& path, const StateVector& psi);

Recipe load_recipe(const std::filesystem::path& path);
void save_recipe(const std::filesystem::path& path, const Recipe& r,
                 const nlohmann::json& metadata);

MPSState load_mps(const std::filesystem::path& path);
void save_mps(const std::filesystem::path& path, const MPSState& m);

} // namespace seqgen
