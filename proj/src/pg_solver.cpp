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

#include "secee/pg_solver.hpp"

#include "secee/manifold.hpp"

#include <sstream>

namespace secee {

D1Problem D1Problem::build(const SecrecyContext& ctx, const CVec& v) {
  if (v.size() != ctx.ch.A.rows()) throw Error("D1Problem: phase vector length mismatch");
  const Index M = v.size() - 1;
  D1Problem p;
  p.hc = ctx.ch.A.adjoint() * v;
  p.ris_weight = ctx.leakage.ris_weight;
  p.direct_weight = ctx.leakage.direct_weight;
  p.known_weight = ctx.leakage.known_weight;
  if (p.ris_weight != 0.0) {
    // sum_m |v_m|^2 |(H w)_m|^2 with the moduli folded into the rows.
    p.H = v.head(M).cwiseAbs().asDiagonal() * ctx.ch.H_hat.topRows(M);
  }
  if (p.known_weight != 0.0) p.rc = ctx.leakage.B.adjoint() * v;
  p.sigma2 = ctx.sigma2;
  p.power = ctx.power;
  p.p_max = ctx.p_max;
  return p;
}

double D1Problem::leakage(const CVec& w) const {
  double z = direct_weight * w.squaredNorm();
  if (ris_weight != 0.0) z += ris_weight * (H * w).squaredNorm();
  if (known_weight != 0.0) z += known_weight * std::norm(rc.dot(w));
  return z;
}

CVec D1Problem::leakage_grad(const CVec& w) const {
  CVec g = (2.0 * direct_weight) * w;
  if (ris_weight != 0.0) g.noalias() += (2.0 * ris_weight) * (H.adjoint() * (H * w));
  if (known_weight != 0.0) g += (2.0 * known_weight * rc.dot(w)) * rc;
  return g;
}

double D1Problem::rate(const CVec& w) const {
  return (std::log1p(std::norm(hc.dot(w)) / sigma2) - std::log1p(leakage(w))) / kLn2;
}

SurrogatePair build_surrogate(const D1Problem& problem, const CVec& w_t) {
  SurrogatePair sp;
  sp.problem = &problem;
  sp.anchor = w_t;
  sp.x_t = problem.hc.dot(w_t);
  sp.z_t = problem.leakage(w_t);
  return sp;
}

double SurrogatePair::r1(const CVec& w) const {
  const double s2 = problem->sigma2;
  const double xt2 = std::norm(x_t);
  const cplx x = problem->hc.dot(w);
  return std::log1p(xt2 / s2) / kLn2 + 2.0 * std::real(std::conj(x_t) * x) / (s2 * kLn2) - xt2 / (s2 * kLn2) -
         (s2 + std::norm(x)) * xt2 / ((s2 + xt2) * s2 * kLn2);
}

double SurrogatePair::r2(const CVec& w) const {
  return std::log1p(z_t) / kLn2 + (problem->leakage(w) - z_t) / ((1.0 + z_t) * kLn2);
}

CVec SurrogatePair::grad_r1(const CVec& w) const {
  const double s2 = problem->sigma2;
  const double xt2 = std::norm(x_t);
  const cplx x = problem->hc.dot(w);
  return (2.0 * x_t / (s2 * kLn2) - 2.0 * x * xt2 / ((s2 + xt2) * s2 * kLn2)) * problem->hc;
}

CVec SurrogatePair::grad_r2(const CVec& w) const {
  return problem->leakage_grad(w) / ((1.0 + z_t) * kLn2);
}

double phi_value(const SurrogatePair& sp, double gamma, const CVec& w) {
  const double d = sp.delta(w);
  if (!(d > 0.0)) return gamma == 0.0 ? 0.0 : -std::numeric_limits<double>::infinity();
  return 2.0 * gamma * std::sqrt(d) - gamma * gamma * sp.problem->total_power(w);
}

PhiEval phi_value_and_gradient(const SurrogatePair& sp, double gamma, const CVec& w) {
  PhiEval out;
  if (gamma == 0.0) {
    out.grad = CVec::Zero(w.size());
    return out;
  }
  const double d = sp.delta(w);
  if (!(d > 0.0)) throw Error("surrogate nonpositive; shrink step");
  const double sd = std::sqrt(d);
  out.value = 2.0 * gamma * sd - gamma * gamma * sp.problem->total_power(w);
  out.grad = (gamma / sd) * (sp.grad_r1(w) - sp.grad_r2(w)) - (2.0 * gamma * gamma * sp.problem->power.inv_eta) * w;
  return out;
}

PgOptions PgOptions::from_config(const SystemConfig& cfg) {
  PgOptions o;
  o.tol = cfg.solver.tol;
  o.max_t = cfg.solver.max_pfp_d1;
  o.max_l = cfg.solver.max_qt;
  o.max_i = cfg.solver.max_pg;
  o.armijo_init = cfg.solver.armijo_init;
  o.armijo_shrink = cfg.solver.armijo_shrink;
  o.armijo_c = cfg.solver.armijo_c;
  o.armijo_max = cfg.solver.armijo_max;
  o.momentum = cfg.solver.momentum;
  return o;
}

namespace {

bool relative_change_below(double next, double prev, double tol) {
  return std::abs(next - prev) <= tol * std::max(std::abs(prev), std::numeric_limits<double>::min());
}

[[noreturn]] void fail_nonfinite(const char* where, const CVec& x) {
  std::ostringstream os;
  os << where << ": non-finite gradient at iterate [";
  for (Index n = 0; n < x.size(); ++n) os << (n ? ", " : "") << x(n);
  os << "]";
  throw Error(os.str());
}

}  // namespace

PgResult accelerated_pg(const SurrogatePair& sp, double gamma, const CVec& x0, const PgOptions& opts) {
  const double p_max = sp.problem->p_max;
  PgResult res;
  CVec x = project_ball(x0, p_max);
  CVec x_prev = x;
  double phi_x = phi_value(sp, gamma, x);
  if (!std::isfinite(phi_x)) throw Error("accelerated_pg: start point has a nonpositive surrogate");
  res.phi_trace.push_back(phi_x);

  double a = 1.0;
  double step = -1.0;
  for (int i = 1; i <= opts.max_i; ++i) {
    res.iterations = i;
    double a_next = opts.momentum ? next_momentum(a) : 1.0;
    double coef = opts.momentum ? (a - 1.0) / a_next : 0.0;

    bool from_x = coef == 0.0;
    CVec x_new;
    double phi_new = 0.0;
    double accepted = 0.0;
    double gnorm = 0.0;
    for (;;) {
      CVec y = from_x ? x : CVec(x + coef * (x - x_prev));
      if (!from_x && !(sp.delta(y) > 0.0)) {
        from_x = true;
        continue;
      }
      const PhiEval ev = phi_value_and_gradient(sp, gamma, y);
      if (!ev.grad.allFinite()) fail_nonfinite("accelerated_pg", y);
      gnorm = ev.grad.norm();
      if (gnorm == 0.0) {
        if (!from_x) {
          from_x = true;
          continue;
        }
        x_new = y;
        phi_new = ev.value;
        break;
      }
      double s = step > 0.0 ? 2.0 * step : opts.armijo_init * std::sqrt(p_max) / gnorm;
      bool ok = false;
      for (int b = 0; b < opts.armijo_max; ++b, s *= opts.armijo_shrink) {
        CVec cand = project_ball(y + s * ev.grad, p_max);
        const double phi_c = phi_value(sp, gamma, cand);
        if (std::isfinite(phi_c) && phi_c >= ev.value + opts.armijo_c * std::real(ev.grad.dot(cand - y))) {
          x_new = std::move(cand);
          phi_new = phi_c;
          accepted = s;
          ok = true;
          break;
        }
      }
      if (!ok) {
        // The extrapolated point may lie outside the ball; only x itself is kept.
        if (!from_x) {
          from_x = true;
          continue;
        }
        x_new = x;
        phi_new = phi_x;
      }
      if (phi_new < phi_x && !from_x) {
        // Momentum overshoot: redo the step from the current iterate.
        from_x = true;
        ++res.restarts;
        continue;
      }
      break;
    }
    if (from_x) a_next = 1.0;
    if (accepted > 0.0) step = accepted;

    if (phi_new < phi_x) {
      // Backtracking exhausted from the current iterate: keep x.
      x_new = x;
      phi_new = phi_x;
    }
    x_prev = x;
    x = std::move(x_new);
    if (opts.observer) opts.observer(x);
    a = a_next;
    const double phi_old = phi_x;
    phi_x = phi_new;
    res.phi_trace.push_back(phi_x);
    if (opts.trace) {
      TraceRecord r = opts.tag;
      r.solver = "d1.pg";
      r.i = i;
      r.objective = phi_x;
      r.step = accepted;
      r.grad_norm = gnorm;
      opts.trace->push_back(std::move(r));
    }
    if (gnorm == 0.0 || relative_change_below(phi_x, phi_old, opts.tol)) break;
  }
  res.x = std::move(x);
  return res;
}

std::optional<CVec> initial_beamformer(const D1Problem& problem) {
  const double radius = 0.5 * std::sqrt(problem.p_max);
  const double hn = problem.hc.norm();
  if (hn == 0.0) return std::nullopt;
  CVec mrt = problem.hc * (radius / hn);
  if (problem.rate(mrt) > 0.0) return mrt;

  // Maximizer of |c^H w|^2 / w^H Q w, where z(w) = w^H Q w.
  const Index N = problem.hc.size();
  CMat Q = problem.direct_weight * CMat::Identity(N, N);
  if (problem.ris_weight != 0.0) Q.noalias() += problem.ris_weight * (problem.H.adjoint() * problem.H);
  if (problem.known_weight != 0.0) Q.noalias() += problem.known_weight * (problem.rc * problem.rc.adjoint());
  const double ridge = 1e-12 * std::max(Q.diagonal().real().maxCoeff(), std::numeric_limits<double>::min());
  Q.diagonal().array() += ridge;
  CVec dir = Q.ldlt().solve(problem.hc);
  const double dn = dir.norm();
  if (!(dn > 0.0) || !dir.allFinite()) return std::nullopt;
  dir *= radius / dn;
  if (problem.rate(dir) > 0.0) return dir;
  return std::nullopt;
}

D1Result solve_d1(const SecrecyContext& ctx, const CVec& v, const CVec& w_init, const PgOptions& opts) {
  const D1Problem p = D1Problem::build(ctx, v);
  D1Result res;
  CVec w = project_ball(w_init, p.p_max);
  if (!(p.rate(w) > 0.0)) {
    auto start = initial_beamformer(p);
    if (!start) {
      res.w = w;
      res.positive_rate = false;
      res.trace.push_back(std::max(0.0, p.objective(w)));
      return res;
    }
    w = std::move(*start);
  }

  double F = p.objective(w);
  res.trace.push_back(F);
  auto emit = [&](const char* solver, int t, int l, double value) {
    if (!opts.trace) return;
    TraceRecord r = opts.tag;
    r.solver = solver;
    r.t = t;
    r.l = l;
    r.objective = value;
    opts.trace->push_back(std::move(r));
  };
  emit("d1.pfp", 0, -1, F);

  for (int t = 1; t <= opts.max_t; ++t) {
    res.pfp_rounds = t;
    const SurrogatePair sp = build_surrogate(p, w);
    CVec x = w;
    double ratio = sp.delta(x) / p.total_power(x);
    emit("d1.qt", t, 0, ratio);
    for (int l = 1; l <= opts.max_l; ++l) {
      ++res.qt_rounds;
      const double gamma = std::sqrt(sp.delta(x)) / p.total_power(x);
      PgOptions inner = opts;
      inner.tag.t = t;
      inner.tag.l = l;
      PgResult pg = accelerated_pg(sp, gamma, x, inner);
      res.pg_iterations += pg.iterations;
      x = std::move(pg.x);
      const double ratio_new = sp.delta(x) / p.total_power(x);
      emit("d1.qt", t, l, ratio_new);
      const bool done = relative_change_below(ratio_new, ratio, opts.tol);
      ratio = ratio_new;
      if (done) break;
    }
    const double F_new = p.objective(x);
    if (!(F_new >= F)) {
      res.converged = true;
      break;
    }
    w = std::move(x);
    emit("d1.pfp", t, -1, F_new);
    res.trace.push_back(F_new);
    const bool done = relative_change_below(F_new, F, opts.tol);
    F = F_new;
    if (done) {
      res.converged = true;
      break;
    }
  }
  res.w = std::move(w);
  return res;
}

}  // namespace secee
