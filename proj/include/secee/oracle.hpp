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

#ifndef SECEE_ORACLE_HPP
#define SECEE_ORACLE_HPP

// Independent references for the optimizers. Nothing here calls the code
// path it checks: Monte Carlo draws the Eve channels, finite differences
// only evaluate the scalar field, and the multistart search scores
// candidates with the composite channel instead of the stacked form.

#include "secee/channel.hpp"
#include "secee/orchestrator.hpp"
#include "secee/types.hpp"

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace secee {

struct OracleReport {
  std::string quantity;
  double oracle_value = 0.0;
  double library_value = 0.0;
  double abs_error = 0.0;
  double rel_error = 0.0;
  std::size_t samples = 0;
  double tolerance = 0.0;
  bool relative = true;  // tolerance applies to rel_error, else abs_error
  bool pass = false;
};

OracleReport make_oracle_report(std::string quantity, double oracle_value, double library_value,
                                std::size_t samples, double tolerance, bool relative = true);
void write_oracle_csv(std::ostream& out, const std::vector<OracleReport>& reports);

struct McEstimate {
  double p = 0.0;
  double ci_half_width = 0.0;  // 95% normal approximation
  std::size_t samples = 0;
};

/// Fraction of Eve j realizations (g_r ~ CN(0, mu_r^2 I), g_d ~ CN(0, mu_d^2 I))
/// whose capacity exceeds the redundancy rate D.
McEstimate mc_sop(const ChannelSet& cs, int j, const Beamformer& w, const PhaseVector& v, double D,
                  std::size_t n_samples, std::uint64_t seed);

using ScalarField = std::function<double(const CVec&)>;

/// Central differences on the real and imaginary part of every coordinate,
/// combined as df/dRe + i df/dIm (the library's gradient convention).
CVec fd_gradient(const ScalarField& f, const CVec& x, double h);

struct MultistartResult {
  CVec w;
  CVec theta;  // reflection coefficients
  double objective = 0.0;  // bits/s/Hz/W, clamped
  std::size_t evaluations = 0;
};

/// Secure EE of (w, theta) for pair (k, j) written out from the channel
/// realization (composite channel and ||Theta H w||^2), bits/s/Hz/W, clamped.
double reference_secure_ee(const SystemConfig& cfg, const ChannelSet& cs, int k, int j, const CVec& w,
                           const CVec& theta);

/// Random feasible samples followed by coordinate pattern search from the best
/// n_starts of them.
MultistartResult multistart_search(const SystemConfig& cfg, const ChannelSet& cs, int k, int j, int n_starts,
                                   std::size_t n_samples, std::uint64_t seed);

struct VariantComparison {
  SubproblemResult accelerated;
  SubproblemResult plain;
  int accelerated_iterations() const { return accelerated.d1_inner_iterations + accelerated.q2_inner_iterations; }
  int plain_iterations() const { return plain.d1_inner_iterations + plain.q2_inner_iterations; }
};

/// The same subproblem solved with and without momentum, identical stopping rules.
VariantComparison plain_variants(const SecrecyContext& ctx, const PhaseVector& v_init, const AmOptions& opts);

}  // namespace secee

#endif  // SECEE_ORACLE_HPP
