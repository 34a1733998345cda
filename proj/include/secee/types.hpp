// SPDX-License-Identifier: Apache-2.0
//
// secee: secure energy-efficiency optimization for RIS-aided multicast
// Copyright (C) 2026 The secee authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef SECEE_TYPES_HPP
#define SECEE_TYPES_HPP

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Gradient convention used throughout the library: for a real-valued f of a
// complex vector x, grad f = df/dRe(x) + i df/dIm(x) (= 2 df/dconj(x)).
// The first-order change along a direction d is then Re(grad^H d).

namespace secee {

template <typename Real>
using CVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using cplx = std::complex<double>;
using CVec = CVector<double>;
using CMat = CMatrix<double>;
using RVec = RVector<double>;
using Index = Eigen::Index;

inline constexpr double kLn2 = std::numbers::ln2;
inline constexpr double kPi = std::numbers::pi;

// Feasibility tolerances.
inline constexpr double kUnitModulusTol = 1e-12;
inline constexpr double kPowerBallRelTol = 1e-12;

/// Error raised for invalid configuration, out-of-range inputs or solver failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

/// Scenario constants. Powers are linear watts; dBm only appears in config files.
struct SystemConfig {
  int n_antennas = 10;  // N
  int n_elements = 10;  // M
  int n_users = 5;      // K
  int n_eves = 10;      // J

  double p_max_w = 1e-3;
  double eta = 0.311;
  // When true the power-amplifier term drops out of the power model (1/eta = 0).
  bool spectral_efficiency = false;
  double p_a_w = dbm_to_watts(39.0);
  double p_c_w = dbm_to_watts(20.0);
  double p_s_w = dbm_to_watts(10.0);

  // One entry per user; a single entry is broadcast to all users.
  std::vector<double> sop_bound{0.1};

  double noise_psd_dbm_hz = -96.0;
  double eve_noise_psd_dbm_hz = -96.0;
  double bandwidth_hz = 10e6;
  // Derived by validate_config().
  double sigma2_user_w = 0.0;
  double sigma2_eve_w = 0.0;

  struct Geometry {
    double bs_x = 0.0, bs_y = 0.0;
    double ris_x = 50.0, ris_y = 0.0;
    double user_center_x = 50.0, user_center_y = 20.0;
    double user_radius = 5.0;
    double eve_ris_min = 1.0, eve_ris_max = 10.0;
  } geometry;

  struct PathLoss {
    double ref_loss_db = 30.0;
    double ref_dist_m = 1.0;
    double exp_bs_ris = 2.2;
    double exp_ris_user = 2.2;
    double exp_ris_eve = 2.2;
    double exp_bs_user = 3.5;
    double exp_bs_eve = 3.5;
  } pathloss;

  double eve_mu_r2 = 1.0;
  double eve_mu_d2 = 1.0;

  std::uint64_t rng_seed = 1;
  // Phase levels applied to the proposed scheme; 0 means continuous phases.
  int quantization_levels = 0;

  struct Solver {
    double tol = 1e-4;
    int max_am = 50;
    int max_pfp_d1 = 50;
    int max_qt = 50;
    int max_pg = 500;
    int max_pfp_q2 = 50;
    int max_manifold = 200;
    double armijo_init = 1.0;
    double armijo_shrink = 0.5;
    double armijo_c = 1e-4;
    int armijo_max = 40;
    double beta = 0.1;
    bool momentum = true;
  } solver;

  double sop(int k) const {
    return sop_bound.size() == 1 ? sop_bound.front() : sop_bound.at(static_cast<std::size_t>(k));
  }
};

/// Total power model: ||w||^2 / eta + P_a + K P_c + M P_s.
struct PowerModel {
  double inv_eta = 1.0 / 0.311;
  double p_a = 0.0;
  double p_c = 0.0;
  double p_s = 0.0;
  int n_users = 1;
  int n_elements = 1;

  static PowerModel from_config(const SystemConfig& cfg);

  double static_power() const { return p_a + n_users * p_c + n_elements * p_s; }
};

/// Transmit beamformer w, kept inside the ball ||w||^2 <= p_max.
class Beamformer {
 public:
  Beamformer() = default;
  Beamformer(CVec w, double p_max);

  static Beamformer zero(Index n, double p_max) { return Beamformer(CVec::Zero(n), p_max); }

  const CVec& vec() const { return w_; }
  double power() const { return w_.squaredNorm(); }
  double p_max() const { return p_max_; }
  Index size() const { return w_.size(); }

 private:
  CVec w_;
  double p_max_ = 0.0;
};

/// Augmented unit-modulus phase vector v = [v_1..v_M, v_{M+1}].
///
/// The reflection coefficients are theta_m = conj(v_m) / conj(v_{M+1}), so that
/// v^H A_k w equals the composite user channel applied to w. The objective is
/// invariant to a common phase on v; canonical() rotates it to v_{M+1} = 1.
class PhaseVector {
 public:
  PhaseVector() = default;
  explicit PhaseVector(CVec v);

  /// All-ones vector, i.e. Theta = I.
  static PhaseVector identity(Index n_elements);
  /// Build from RIS reflection coefficients theta (length M).
  static PhaseVector from_reflection(const CVec& theta);

  const CVec& vec() const { return v_; }
  Index n_elements() const { return v_.size() - 1; }

  PhaseVector canonical() const;
  /// Reflection coefficients theta (diagonal of Theta) after canonical rotation.
  CVec reflection() const;
  double max_modulus_error() const;

 private:
  CVec v_;
};

/// Result of the alternating maximization for one (user, eve) pair.
struct SubproblemResult {
  int k = 0;
  int j = 0;
  Beamformer w;
  PhaseVector v;
  std::vector<double> am_trace;  // objective after each AM round, entry 0 is the start point
  int am_rounds = 0;
  bool converged = false;
  bool positive_rate = true;
  int d1_inner_iterations = 0;
  int q2_inner_iterations = 0;
  double wall_ms = 0.0;
  double d1_wall_ms = 0.0;  // time inside the beamformer updates
  double q2_wall_ms = 0.0;  // time inside the phase updates
  // Clamped secure EE of (w, v) under the scoring context of this pair (bits/s/Hz/W).
  double score = 0.0;
  double objective() const { return am_trace.empty() ? 0.0 : am_trace.back(); }
};

struct SolveReport {
  std::vector<SubproblemResult> subproblems;
  int k_star = 0;
  int j_star = 0;
  // Minimum over pairs of each pair's score at its own solution (bits/s/Hz/W).
  double min_objective = 0.0;
  // Worst link over every (k, j) at the selected (w, Theta) (bits/s/Hz/W).
  double evaluated_objective = 0.0;
  bool converged = false;
  Beamformer w;
  PhaseVector v;
  double wall_ms = 0.0;
  int total_am_rounds() const;
};

}  // namespace secee

#endif  // SECEE_TYPES_HPP
