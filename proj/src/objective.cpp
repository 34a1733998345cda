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

#include "secee/objective.hpp"

namespace secee {

namespace {

SecrecyContext base_context(const SystemConfig& cfg, const ChannelSet& cs, int k, int j) {
  if (k < 0 || k >= cs.n_users() || j < 0 || j >= cs.n_eves()) throw Error("context: (k, j) out of range");
  SecrecyContext ctx;
  ctx.k = k;
  ctx.j = j;
  ctx.kappa1 = cs.kappa1(j);
  ctx.kappa2 = cs.kappa2(j);
  ctx.sigma2 = cs.sigma2_user;
  ctx.epsilon = cfg.sop(k);
  ctx.log_inv_eps = std::log(1.0 / ctx.epsilon);
  if (!(ctx.log_inv_eps > 0.0)) throw Error("context: sop bound must be in (0,1)");
  ctx.ch = effective_channels(cs, k);
  ctx.power = PowerModel::from_config(cfg);
  ctx.p_max = cfg.p_max_w;
  ctx.bandwidth_hz = cfg.bandwidth_hz;
  return ctx;
}

}  // namespace

SecrecyContext make_context(const SystemConfig& cfg, const ChannelSet& cs, int k, int j) {
  SecrecyContext ctx = base_context(cfg, cs, k, j);
  ctx.leakage.ris_weight = ctx.kappa1 * ctx.log_inv_eps;
  ctx.leakage.direct_weight = ctx.kappa2 * ctx.log_inv_eps;
  return ctx;
}

SecrecyContext make_known_eve_context(const SystemConfig& cfg, const ChannelSet& cs, int k, int j) {
  SecrecyContext ctx = base_context(cfg, cs, k, j);
  ctx.leakage.known_weight = 1.0 / cs.sigma2_eve;
  ctx.leakage.B = eve_known_channels(cs, j);
  return ctx;
}

std::vector<SecrecyContext> make_contexts(const SystemConfig& cfg, const ChannelSet& cs) {
  std::vector<SecrecyContext> out;
  out.reserve(static_cast<std::size_t>(cs.n_users() * cs.n_eves()));
  for (int k = 0; k < cs.n_users(); ++k)
    for (int j = 0; j < cs.n_eves(); ++j) out.push_back(make_context(cfg, cs, k, j));
  return out;
}

double total_power(const PowerModel& pm, double w_norm2) { return pm.inv_eta * w_norm2 + pm.static_power(); }

double ris_leak_power(const SecrecyContext& ctx, const Beamformer& w, const PhaseVector& v) {
  const Index M = v.n_elements();
  const CVec theta = v.reflection();
  return (theta.asDiagonal() * (ctx.ch.H_hat.topRows(M) * w.vec())).squaredNorm();
}

double sop_closed_form(const SecrecyContext& ctx, const Beamformer& w, const PhaseVector& v, double D) {
  if (!(D >= 0.0)) throw Error("sop_closed_form: redundancy rate must be >= 0");
  const double mean_snr = ctx.kappa1 * ris_leak_power(ctx, w, v) + ctx.kappa2 * w.power();
  const double threshold = std::expm1(D * kLn2);  // 2^D - 1
  if (threshold == 0.0) return 1.0;
  if (!(mean_snr > 0.0)) throw Error("sop_closed_form: undefined SOP for zero signal");
  return std::exp(-threshold / mean_snr);
}

double optimal_redundancy(const SecrecyContext& ctx, const Beamformer& w, const PhaseVector& v) {
  const double mean_snr = ctx.kappa1 * ris_leak_power(ctx, w, v) + ctx.kappa2 * w.power();
  return std::log1p(mean_snr * ctx.log_inv_eps) / kLn2;
}

double secrecy_rate(const SecrecyContext& ctx, const CVec& w, const CVec& v) {
  const cplx y = v.dot(ctx.ch.A * w);
  const auto& lk = ctx.leakage;
  double z = lk.direct_weight * w.squaredNorm();
  if (lk.ris_weight != 0.0) z += lk.ris_weight * (v.cwiseAbs2().array() * (ctx.ch.H_hat * w).cwiseAbs2().array()).sum();
  if (lk.known_weight != 0.0) z += lk.known_weight * std::norm(v.dot(lk.B * w));
  return (std::log1p(std::norm(y) / ctx.sigma2) - std::log1p(z)) / kLn2;
}

ObjectiveValue secure_ee(const SecrecyContext& ctx, const Beamformer& w, const PhaseVector& v) {
  if (w.size() != ctx.ch.A.cols()) throw Error("secure_ee: beamformer length mismatch");
  if (v.vec().size() != ctx.ch.A.rows()) throw Error("secure_ee: phase vector length mismatch");
  if (w.power() > ctx.p_max * (1.0 + kPowerBallRelTol)) throw Error("secure_ee: infeasible beamformer");
  ObjectiveValue out;
  out.numerator_bits = std::max(0.0, secrecy_rate(ctx, w.vec(), v.vec()));
  out.denominator_watts = total_power(ctx.power, w);
  out.ee = out.numerator_bits / out.denominator_watts;
  out.ee_bits_per_joule = out.ee * ctx.bandwidth_hz;
  return out;
}

WorstLink overall_objective(const std::vector<SecrecyContext>& contexts, const Beamformer& w, const PhaseVector& v) {
  if (contexts.empty()) throw Error("overall_objective: no contexts");
  WorstLink best{std::numeric_limits<double>::infinity(), 0, 0};
  for (const auto& ctx : contexts) {
    const double ee = secure_ee(ctx, w, v).ee;
    if (ee < best.ee || (ee == best.ee && std::pair(ctx.k, ctx.j) < std::pair(best.k, best.j))) best = {ee, ctx.k, ctx.j};
  }
  return best;
}

}  // namespace secee
