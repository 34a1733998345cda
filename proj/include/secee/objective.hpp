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

#ifndef SECEE_OBJECTIVE_HPP
#define SECEE_OBJECTIVE_HPP

#include "secee/channel.hpp"
#include "secee/types.hpp"

#include <vector>

namespace secee {

/// Eavesdropper leakage z(v, w) seen by the optimizers:
///   ris_weight    * sum_m |v_m|^2 |(H_hat w)_m|^2
/// + direct_weight * ||w||^2
/// + known_weight  * |v^H B w|^2.
/// On the manifold the first term is ||Theta H w||^2. The statistical model uses
/// (kappa1 ln(1/eps), kappa2 ln(1/eps), 0); the perfect-CSI baseline uses
/// (0, 0, 1/sigma_eve^2) with B the stacked Eve channel.
struct Leakage {
  double ris_weight = 0.0;
  double direct_weight = 0.0;
  double known_weight = 0.0;
  CMat B;
};

/// Everything needed to evaluate the (user k, Eve j) subproblem.
struct SecrecyContext {
  int k = 0;
  int j = 0;
  double kappa1 = 0.0;
  double kappa2 = 0.0;
  double sigma2 = 0.0;  // user noise power
  double epsilon = 0.1;
  double log_inv_eps = 0.0;
  EffectiveChannels ch;
  PowerModel power;
  Leakage leakage;
  double p_max = 0.0;
  double bandwidth_hz = 1.0;
};

/// Statistical-CSI context (closed-form SOP constraint folded in).
SecrecyContext make_context(const SystemConfig& cfg, const ChannelSet& cs, int k, int j);
/// Context that treats the drawn Eve realization as perfectly known.
SecrecyContext make_known_eve_context(const SystemConfig& cfg, const ChannelSet& cs, int k, int j);
/// All K J statistical contexts, k-major (index k * J + j).
std::vector<SecrecyContext> make_contexts(const SystemConfig& cfg, const ChannelSet& cs);

double total_power(const PowerModel& pm, double w_norm2);
inline double total_power(const PowerModel& pm, const Beamformer& w) { return total_power(pm, w.power()); }

/// ||Theta H w||^2 evaluated from the reflection coefficients.
double ris_leak_power(const SecrecyContext& ctx, const Beamformer& w, const PhaseVector& v);

/// Closed-form secrecy-outage probability at redundancy rate D (bits/s/Hz).
double sop_closed_form(const SecrecyContext& ctx, const Beamformer& w, const PhaseVector& v, double D);

/// Redundancy rate that meets the SOP bound with equality.
double optimal_redundancy(const SecrecyContext& ctx, const Beamformer& w, const PhaseVector& v);

/// Unclamped secrecy rate log2((1 + |v^H A w|^2 / sigma2) / (1 + z(v, w))).
double secrecy_rate(const SecrecyContext& ctx, const CVec& w, const CVec& v);

struct ObjectiveValue {
  double numerator_bits = 0.0;     // clamped secrecy rate, bits/s/Hz
  double denominator_watts = 0.0;  // total power
  double ee = 0.0;                 // bits/s/Hz/W
  double ee_bits_per_joule = 0.0;  // ee times bandwidth
};

ObjectiveValue secure_ee(const SecrecyContext& ctx, const Beamformer& w, const PhaseVector& v);

struct WorstLink {
  double ee = 0.0;  // bits/s/Hz/W
  int k = 0;
  int j = 0;
};

/// Minimum secure EE over all contexts; ties go to the smallest (k, j).
WorstLink overall_objective(const std::vector<SecrecyContext>& contexts, const Beamformer& w, const PhaseVector& v);

}  // namespace secee

#endif  // SECEE_OBJECTIVE_HPP
