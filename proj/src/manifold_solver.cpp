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

#include "secee/manifold_solver.hpp"

#include "secee/manifold.hpp"

#include <sstream>

namespace secee {

Q2Problem Q2Problem::build(const SecrecyContext& ctx, const CVec& w) {
  if (w.size() != ctx.ch.A.cols()) throw Error("Q2Problem: beamformer length mismatch");
  Q2Problem p;
  p.a = ctx.ch.A * w;
  const auto& lk = ctx.leakage;
  p.dvec = lk.ris_weight == 0.0 ? RVec::Zero(p.a.size()) : RVec(lk.ris_weight * (ctx.ch.H_hat * w).cwiseAbs2());
  p.c0 = lk.direct_weight * w.squaredNorm();
  p.known_weight = lk.known_weight;
  if (p.known_weight != 0.0) p.b = lk.B * w;
  p.sigma2 = ctx.sigma2;
  return p;
}

double Q2Problem::leakage(const CVec& v) const {
  double z = c0 + (dvec.array() * v.cwiseAbs2().array()).sum();
  if (known_weight != 0.0) z += known_weight * std::norm(v.dot(b));
  return z;
}

double Q2Problem::rate(const CVec& v) const {
  return (std::log1p(std::norm(v.dot(a)) / sigma2) - std::log1p(leakage(v))) / kLn2;
}

double upsilon(const SecrecyContext& ctx, const CVec& w, const CVec& v) { return Q2Problem::build(ctx, w).rate(v); }

UpsilonSurrogate build_upsilon_surrogate(const Q2Problem& p, const CVec& v_t, bool pin_last) {
  UpsilonSurrogate s;
  s.problem = &p;
  s.pin_last = pin_last;
  s.anchor = v_t;
  s.y_t = v_t.dot(p.a);
  s.z_t = p.leakage(v_t);

  const double s2 = p.sigma2;
  const double yt2 = std::norm(s.y_t);
  const double c_lin = 1.0 / (s2 * kLn2);
  const double c_q = yt2 / ((s2 + yt2) * s2 * kLn2);
  const double c_z = 1.0 / ((1.0 + s.z_t) * kLn2);
  // Only the first M entries move when the auxiliary entry is pinned.
  const Index moving = pin_last ? p.a.size() - 1 : p.a.size();
  const double a2 = p.a.head(moving).squaredNorm();
  const double a1 = p.a.cwiseAbs().sum();
  const double a_max = p.a.head(moving).cwiseAbs().maxCoeff();

  // Along a unit-speed geodesic v_m(t) = v_m e^{i w_m t} (sum w_m^2 = 1):
  //   |y'| <= ||a||_2, |y''| <= max|a_m|, |y| <= ||a||_1,
  // and sum_m d_m |v_m|^2 is constant, so it adds no curvature.
  s.lipschitz = 2.0 * c_lin * std::sqrt(yt2) * a_max + c_q * (2.0 * a2 + 2.0 * a1 * a_max);
  if (p.known_weight != 0.0) {
    const double b2 = p.b.head(moving).squaredNorm();
    const double b1 = p.b.cwiseAbs().sum();
    const double b_max = p.b.head(moving).cwiseAbs().maxCoeff();
    s.lipschitz += c_z * p.known_weight * (2.0 * b2 + 2.0 * b1 * b_max);
  }
  if (!(s.lipschitz > 0.0)) s.lipschitz = 1.0;

  const RVec mags = p.a.head(moving).cwiseAbs();
  // Smallest per-entry curvature of the linear term near alignment.
  const double ref = mags.minCoeff();
  s.strong = std::clamp(2.0 * ref * std::sqrt(yt2) / ((s2 + yt2) * kLn2), std::min(1e-8, s.lipschitz), s.lipschitz);
  return s;
}

double UpsilonSurrogate::value(const CVec& v) const {
  const double s2 = problem->sigma2;
  const double yt2 = std::norm(y_t);
  const cplx y = v.dot(problem->a);
  return std::log1p(yt2 / s2) / kLn2 + 2.0 * std::real(std::conj(y_t) * y) / (s2 * kLn2) - yt2 / (s2 * kLn2) -
         (s2 + std::norm(y)) * yt2 / ((s2 + yt2) * s2 * kLn2) - std::log1p(z_t) / kLn2 -
         (problem->leakage(v) - z_t) / ((1.0 + z_t) * kLn2);
}

CVec UpsilonSurrogate::euclidean_grad(const CVec& v) const {
  const Q2Problem& p = *problem;
  const double s2 = p.sigma2;
  const double yt2 = std::norm(y_t);
  const cplx y = v.dot(p.a);
  CVec g = (2.0 * std::conj(y_t) / (s2 * kLn2) - 2.0 * std::conj(y) * yt2 / ((s2 + yt2) * s2 * kLn2)) * p.a;
  const double c_z = 1.0 / ((1.0 + z_t) * kLn2);
  g.array() -= (2.0 * c_z) * (p.dvec.cast<cplx>().array() * v.array());
  if (p.known_weight != 0.0) g -= (2.0 * c_z * p.known_weight * std::conj(v.dot(p.b))) * p.b;
  return g;
}

CVec UpsilonSurrogate::riemannian_gradient(const CVec& v) const {
  CVec g = riemannian_grad(euclidean_grad(v), v);
  if (pin_last) g(g.size() - 1) = 0.0;
  return g;
}

ManifoldState make_state(const UpsilonSurrogate& surr, const CVec& z0, double beta) {
  ManifoldState s;
  s.z = z0;
  s.d = z0;
  s.q = z0;
  s.beta = beta;
  s.L_g = surr.lipschitz;
  s.u_g = surr.strong;
  s.S = 0.9 / s.L_g;
  return s;
}

namespace {

void check_finite(const ManifoldState& s) {
  if (s.z.allFinite() && s.d.allFinite() && s.q.allFinite()) return;
  std::ostringstream os;
  os << "manifold step produced non-finite state: S=" << s.S << " u_g=" << s.u_g << " L_g=" << s.L_g << " z=[";
  for (Index m = 0; m < s.z.size(); ++m) os << (m ? ", " : "") << s.z(m);
  os << "]";
  throw Error(os.str());
}

}  // namespace

ManifoldState accelerated_step(const UpsilonSurrogate& surr, const ManifoldState& s) {
  const double beta = s.beta;
  const double u = s.u_g;
  const double root = std::sqrt(beta * beta + 4.0 * (1.0 + beta) * u * s.S);
  const double c_interp = (root - beta) / (2.0 + root + beta);

  ManifoldState out = s;
  out.q = exp_map(s.z, c_interp * inv_exp_map(s.z, s.d));
  const CVec g = surr.riemannian_gradient(out.q);
  const CVec toward_d = inv_exp_map(out.q, s.d);
  out.d = exp_map(out.q, ((2.0 - root + beta) / (2.0 * (1.0 + beta))) * toward_d +
                             ((root + beta) / (2.0 * u * (1.0 + beta))) * g);
  out.z = exp_map(out.q, s.S * g);
  check_finite(out);
  return out;
}

ManifoldState plain_step(const UpsilonSurrogate& surr, const ManifoldState& s) {
  ManifoldState out = s;
  out.q = s.z;
  out.z = exp_map(s.z, s.S * surr.riemannian_gradient(s.z));
  out.d = out.z;
  check_finite(out);
  return out;
}

ManifoldOptions ManifoldOptions::from_config(const SystemConfig& cfg) {
  ManifoldOptions o;
  o.tol = cfg.solver.tol;
  o.max_t = cfg.solver.max_pfp_q2;
  o.max_l = cfg.solver.max_manifold;
  o.beta = cfg.solver.beta;
  o.momentum = cfg.solver.momentum;
  return o;
}

namespace {

bool small_change(double next, double prev, double tol) {
  return std::abs(next - prev) <= tol * std::max(std::abs(prev), std::numeric_limits<double>::min());
}

}  // namespace

Q2Result solve_q2(const SecrecyContext& ctx, const CVec& w, const CVec& v_init, const ManifoldOptions& opts) {
  if (v_init.size() != ctx.ch.A.rows()) throw Error("solve_q2: phase vector length mismatch");
  const Q2Problem p = Q2Problem::build(ctx, w);
  Q2Result res;
  CVec v = opts.pin_last ? PhaseVector(v_init).canonical().vec() : v_init;
  double rate = p.rate(v);
  res.trace.push_back(rate);

  auto emit = [&](const char* solver, int t, int l, double value, double step, double gnorm) {
    if (!opts.trace) return;
    TraceRecord r = opts.tag;
    r.solver = solver;
    r.t = t;
    r.l = l;
    r.objective = value;
    r.step = step;
    r.grad_norm = gnorm;
    opts.trace->push_back(std::move(r));
  };
  emit("q2.pfp", 0, -1, rate, 0.0, 0.0);

  for (int t = 1; t <= opts.max_t; ++t) {
    res.pfp_rounds = t;
    const UpsilonSurrogate surr = build_upsilon_surrogate(p, v, opts.pin_last);
    ManifoldState state = make_state(surr, v, opts.beta);
    double val = surr.value(state.z);
    emit("q2.mani", t, 0, val, state.S, 0.0);
    int inner = 0;
    for (int l = 1; l <= opts.max_l; ++l) {
      inner = l;
      ManifoldState next = opts.momentum ? accelerated_step(surr, state) : plain_step(surr, state);
      double next_val = surr.value(next.z);
      if (next_val < val && opts.momentum) {
        ++res.fallbacks;
        next = plain_step(surr, state);
        next_val = surr.value(next.z);
      }
      if (!(next_val >= val)) break;
      const double gnorm = surr.riemannian_gradient(next.z).norm();
      state = std::move(next);
      const double prev = val;
      val = next_val;
      emit("q2.mani", t, l, val, state.S, gnorm);
      if (small_change(val, prev, opts.tol)) break;
    }
    res.inner_iterations += inner;
    res.max_inner_per_round = std::max(res.max_inner_per_round, inner);

    const double rate_new = p.rate(state.z);
    if (!(rate_new >= rate)) {
      res.converged = true;
      break;
    }
    v = state.z;
    emit("q2.pfp", t, -1, rate_new, 0.0, 0.0);
    res.trace.push_back(rate_new);
    const bool done = small_change(rate_new, rate, opts.tol);
    rate = rate_new;
    if (done) {
      res.converged = true;
      break;
    }
  }
  res.v = PhaseVector(v).canonical();
  return res;
}

}  // namespace secee
