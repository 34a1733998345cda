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

#ifndef SECEE_MANIFOLD_SOLVER_HPP
#define SECEE_MANIFOLD_SOLVER_HPP

// Phase update for a fixed beamformer: path-following minorization of the
// secrecy rate and accelerated Riemannian gradient ascent on the product of
// M+1 unit circles.

#include "secee/objective.hpp"
#include "secee/trace.hpp"
#include "secee/types.hpp"

namespace secee {

/// The phase subproblem with w frozen.
///   rate(v) = log2((1 + |v^H a|^2 / sigma2) / (1 + sum_m d_m |v_m|^2 + c0 + known |v^H b|^2))
struct Q2Problem {
  CVec a;     // A w
  RVec dvec;  // ris_weight |(H_hat w)_m|^2, last entry 0
  double c0 = 0.0;
  double known_weight = 0.0;
  CVec b;     // B w
  double sigma2 = 1.0;

  static Q2Problem build(const SecrecyContext& ctx, const CVec& w);

  double leakage(const CVec& v) const;
  double rate(const CVec& v) const;
};

/// Secrecy rate as a function of the phases, evaluated from the context.
double upsilon(const SecrecyContext& ctx, const CVec& w, const CVec& v);

/// Minorant of the phase objective, tight at v_t.
struct UpsilonSurrogate {
  const Q2Problem* problem = nullptr;
  CVec anchor;
  cplx y_t;
  double z_t = 0.0;
  double lipschitz = 0.0;  // bound on the Riemannian Hessian along geodesics
  double strong = 0.0;     // curvature estimate used by the momentum weights
  bool pin_last = true;    // keep v_{M+1} fixed while iterating

  double value(const CVec& v) const;
  CVec euclidean_grad(const CVec& v) const;
  /// Tangent-space gradient; its last entry is zero when pin_last is set.
  CVec riemannian_gradient(const CVec& v) const;
};

UpsilonSurrogate build_upsilon_surrogate(const Q2Problem& problem, const CVec& v_t, bool pin_last = true);

struct ManifoldState {
  CVec z;  // iterate
  CVec d;  // momentum point
  CVec q;  // interpolation point
  double S = 0.0;
  double beta = 0.1;
  double u_g = 1e-8;
  double L_g = 1.0;
};

ManifoldState make_state(const UpsilonSurrogate& surr, const CVec& z0, double beta);

/// One accelerated step in the ascent orientation.
ManifoldState accelerated_step(const UpsilonSurrogate& surr, const ManifoldState& s);
/// One plain Riemannian gradient step with the same step size.
ManifoldState plain_step(const UpsilonSurrogate& surr, const ManifoldState& s);

struct ManifoldOptions {
  double tol = 1e-4;
  int max_t = 50;
  int max_l = 200;
  double beta = 0.1;
  bool momentum = true;
  // Hold v_{M+1} = 1 during the iterations. The objective is invariant to a
  // common phase, so this only removes the direction aligned with the direct link.
  bool pin_last = true;
  Trace* trace = nullptr;
  TraceRecord tag;

  static ManifoldOptions from_config(const SystemConfig& cfg);
};

struct Q2Result {
  PhaseVector v;              // canonical (last entry 1)
  std::vector<double> trace;  // secrecy rate per path-following round, entry 0 is the start
  int pfp_rounds = 0;
  int inner_iterations = 0;
  int max_inner_per_round = 0;
  int fallbacks = 0;
  bool converged = false;
};

Q2Result solve_q2(const SecrecyContext& ctx, const CVec& w, const CVec& v_init, const ManifoldOptions& opts);

}  // namespace secee

#endif  // SECEE_MANIFOLD_SOLVER_HPP
