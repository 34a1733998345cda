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

#ifndef SECEE_TRACE_HPP
#define SECEE_TRACE_HPP

#include <ostream>
#include <string>
#include <vector>

namespace secee {

/// One row of the per-iteration trace. Layer indices that do not apply are -1.
///
/// solver names:
///   am        objective after each alternating round
///   d1.pfp    beamformer path-following round (objective f/P)
///   d1.qt     quadratic-transform round (surrogate ratio)
///   d1.pg     projected-gradient iteration (transformed objective)
///   q2.pfp    phase path-following round (secrecy rate)
///   q2.mani   manifold iteration (surrogate value)
struct TraceRecord {
  std::string solver;
  int subproblem = -1;
  int am_round = -1;
  int t = -1;
  int l = -1;
  int i = -1;
  double objective = 0.0;
  double step = 0.0;
  double grad_norm = 0.0;
};

using Trace = std::vector<TraceRecord>;

inline void write_trace_header(std::ostream& out) {
  out << "solver,subproblem,am_round,t,l,i,objective,step,grad_norm\n";
}

void write_trace_rows(std::ostream& out, const Trace& trace, const std::string& prefix = {});

}  // namespace secee

#endif  // SECEE_TRACE_HPP
