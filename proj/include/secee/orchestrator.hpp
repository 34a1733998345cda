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

#ifndef SECEE_ORCHESTRATOR_HPP
#define SECEE_ORCHESTRATOR_HPP

#include "secee/channel.hpp"
#include "secee/manifold_solver.hpp"
#include "secee/objective.hpp"
#include "secee/pg_solver.hpp"
#include "secee/trace.hpp"
#include "secee/types.hpp"

#include <string>
#include <vector>

namespace secee {

struct AmOptions {
  PgOptions pg;
  ManifoldOptions manifold;
  double tol = 1e-4;
  int max_am = 50;
  // False freezes the phases at v_init (w-only baselines).
  bool optimize_phases = true;
  Trace* trace = nullptr;
  int subproblem = -1;

  static AmOptions from_config(const SystemConfig& cfg);
};

/// Alternating maximization for one (k, j) pair, starting with the beamformer update.
SubproblemResult solve_subproblem(const SecrecyContext& ctx, const PhaseVector& v_init, const AmOptions& opts);

/// Solve every subproblem (in parallel) on `solve`, score each pair's solution
/// on the matching entry of `evaluate` and select the smallest score.
/// `solve` and `evaluate` are k-major lists of the same length.
SolveReport solve_p2(const std::vector<SecrecyContext>& solve, const std::vector<SecrecyContext>& evaluate,
                     const PhaseVector& v_init, const AmOptions& opts, int workers = 1);

/// Pick the pair with the smallest score (first index on ties) and fill the
/// selection fields of the report.
void select_worst_pair(SolveReport& report, const std::vector<SecrecyContext>& evaluate);

enum class SchemeKind { Proposed, RPS, FPS, IgnoreUncertainty, Quantized };

struct Scheme {
  SchemeKind kind = SchemeKind::Proposed;
  int levels = 0;  // Quantized only

  std::string name() const;
  /// "proposed", "rps", "fps", "ignore-uncertainty", "quantized-L".
  static Scheme parse(const std::string& text);
};

/// Snap each RIS phase to the nearest of L uniform levels after pinning
/// v_{M+1} = 1; exact midpoints go to the lower level.
PhaseVector quantize_phases(const PhaseVector& v, int levels);

/// Quantize every pair's phases (w unchanged) and re-score.
SolveReport quantized_report(const SolveReport& continuous, const std::vector<SecrecyContext>& evaluate, int levels);

SolveReport run_scheme(const Scheme& scheme, const SystemConfig& cfg, const ChannelSet& cs, int workers = 1,
                       Trace* trace = nullptr);

}  // namespace secee

#endif  // SECEE_ORCHESTRATOR_HPP
