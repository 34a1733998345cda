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

#ifndef SECEE_PG_SOLVER_HPP
#define SECEE_PG_SOLVER_HPP

// Beamformer update for fixed phases: path-following minorization (outer),
// quadratic transform of the ratio (middle) and accelerated projected
// gradient ascent (inner).

#include "secee/objective.hpp"
#include "secee/trace.hpp"
#include "secee/types.hpp"

#include <functional>
#include <optional>

namespace secee {

/// The beamformer subproblem with the phase vector frozen.
///   f(w) = log2(1 + |c^H w|^2 / sigma2) - log2(1 + z(w)),  objective f(w) / P(w).
struct D1Problem {
  CVec hc;  // A^H v, so the user sample is c^H w
  CMat H;   // M x N BS -> RIS block
  double ris_weight = 0.0;
  double direct_weight = 0.0;
  double known_weight = 0.0;
  CVec rc;  // B^H v for the perfect-CSI leakage
  double sigma2 = 1.0;
  PowerModel power;
  double p_max = 1.0;

  static D1Problem build(const SecrecyContext& ctx, const CVec& v);

  double leakage(const CVec& w) const;
  CVec leakage_grad(const CVec& w) const;
  double rate(const CVec& w) const;
  double total_power(const CVec& w) const { return power.inv_eta * w.squaredNorm() + power.static_power(); }
  double objective(const CVec& w) const { return rate(w) / total_power(w); }
};

/// Concave minorant R1 - R2 of the secrecy rate, tight at the anchor w_t.
struct SurrogatePair {
  const D1Problem* problem = nullptr;
  CVec anchor;
  cplx x_t;           // c^H w_t
  double z_t = 0.0;   // z(w_t)

  double r1(const CVec& w) const;
  double r2(const CVec& w) const;
  double delta(const CVec& w) const { return r1(w) - r2(w); }
  CVec grad_r1(const CVec& w) const;
  CVec grad_r2(const CVec& w) const;
};

SurrogatePair build_surrogate(const D1Problem& problem, const CVec& w_t);

/// Quadratic-transform objective 2 gamma sqrt(R1 - R2) - gamma^2 P(w).
double phi_value(const SurrogatePair& sp, double gamma, const CVec& w);

struct PhiEval {
  double value = 0.0;
  CVec grad;
};

/// Value and gradient; throws when R1 - R2 <= 0 at w (and gamma > 0).
PhiEval phi_value_and_gradient(const SurrogatePair& sp, double gamma, const CVec& w);

struct PgOptions {
  double tol = 1e-4;
  int max_t = 50;
  int max_l = 50;
  int max_i = 500;
  double armijo_init = 1.0;
  double armijo_shrink = 0.5;
  double armijo_c = 1e-4;
  int armijo_max = 40;
  bool momentum = true;
  Trace* trace = nullptr;
  TraceRecord tag;  // subproblem / am_round copied into emitted rows
  // Called with every stored projected-gradient iterate.
  std::function<void(const CVec&)> observer;

  static PgOptions from_config(const SystemConfig& cfg);
};

/// Momentum weights: a_0 = 1, a_{i+1} = (1 + sqrt(1 + 4 a_i^2)) / 2.
inline double next_momentum(double a) { return 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * a * a)); }

struct PgResult {
  CVec x;
  int iterations = 0;
  std::vector<double> phi_trace;  // entry 0 is the start point
  int restarts = 0;
};

/// Maximize Phi over the power ball starting from x0.
PgResult accelerated_pg(const SurrogatePair& sp, double gamma, const CVec& x0, const PgOptions& opts);

/// Feasible start with positive secrecy rate: MRT at sqrt(p_max)/2, then the
/// leakage-whitened direction. Empty when neither has a positive rate.
std::optional<CVec> initial_beamformer(const D1Problem& problem);

struct D1Result {
  CVec w;
  std::vector<double> trace;  // objective f/P per path-following round, entry 0 is the start
  int pfp_rounds = 0;
  int qt_rounds = 0;
  int pg_iterations = 0;
  bool positive_rate = true;
  bool converged = false;
};

D1Result solve_d1(const SecrecyContext& ctx, const CVec& v, const CVec& w_init, const PgOptions& opts);

}  // namespace secee

#endif  // SECEE_PG_SOLVER_HPP
