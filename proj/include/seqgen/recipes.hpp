#pragma once

#include <seqgen/compiler.hpp>
#include <seqgen/state.hpp>

#include <vector>

namespace seqgen {

/// Effective levels of the photon-source atom, in fixed order.
enum class AtomLevel : int { a = 0, b1 = 1, b2 = 2 };

/// Angles parameterizing the built-in recipe families (radians). W uses
/// n-1 entries, cluster uses n, GHZ uses a single pair.
struct RecipeParams {
  int n = 0;
  std::vector<double> theta;
  std::vector<double> phi;
};

/// Photon emission map: |a> -> |b1>|1>, |b1> -> |b1>|0>, |b2> -> |b2>|0>,
/// as a 6x3 isometry in recipe row convention (r = i*3 + level).
CMatrix m_ab();

/// Rotation in the {k,l} plane leaving m untouched:
///   cos(T)(|k><k| + |l><l|) + e^{iP} sin(T)|k><l| - e^{-iP} sin(T)|l><k| + |m><m|.
/// {k,l,m} must be a permutation of the three levels.
CMatrix u_klm(AtomLevel k, AtomLevel l, AtomLevel m, double phi, double theta);

/// W-family generator: starts in |b2>, rotates a/b2 by (phi_i, theta_i)
/// before each emission, final rotation (0, pi/2); the atom ends in |b1>.
Recipe w_recipe(const RecipeParams& p);

/// Target of w_recipe: a single-excitation state whose amplitude on the
/// m-th emitted qubit is cos(t_1)..cos(t_{m-1}) e^{i p_m} sin(t_m), and
/// cos(t_1)..cos(t_{n-1}) on the last.
StateVector w_closed_form(const RecipeParams& p);

/// GHZ-family generator; produces cos(t1)|1..1> - e^{-i p1} sin(t1)|0..0>.
Recipe ghz_recipe(int n, double phi1, double theta1);

/// Target of ghz_recipe (obtained by tracing the step sequence).
StateVector ghz_closed_form(int n, double phi1, double theta1);

/// Cluster-family generator (n angle pairs).
Recipe cluster_recipe(const RecipeParams& p);

/// Target of cluster_recipe: each emitted qubit carries a diagonal operator
/// pair acting on its predecessor; at theta = pi/4, phi = 0 this is the
/// standard cluster state.
StateVector cluster_closed_form(const RecipeParams& p);

/// 2^{-n/2} (x)_i (sigma^z_{i-1}|0>_i + |1>_i) with sigma^z_0 = 1.
StateVector cluster_standard(int n);

} // namespace seqgen
