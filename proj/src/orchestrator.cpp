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

#include "secee/orchestrator.hpp"

#include "secee/manifold.hpp"
#include "secee/parallel.hpp"
#include "secee/random.hpp"

#include <chrono>

namespace secee {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

double pair_objective(const SecrecyContext& ctx, const CVec& w, const CVec& v) {
  return secrecy_rate(ctx, w, v) / total_power(ctx.power, w.squaredNorm());
}

}  // namespace

AmOptions AmOptions::from_config(const SystemConfig& cfg) {
  AmOptions o;
  o.pg = PgOptions::from_config(cfg);
  o.manifold = ManifoldOptions::from_config(cfg);
  o.tol = cfg.solver.tol;
  o.max_am = cfg.solver.max_am;
  return o;
}

SubproblemResult solve_subproblem(const SecrecyContext& ctx, const PhaseVector& v_init, const AmOptions& opts) {
  const auto start = Clock::now();
  SubproblemResult res;
  res.k = ctx.k;
  res.j = ctx.j;
  CVec v = v_init.vec();

  auto start_w = initial_beamformer(D1Problem::build(ctx, v));
  if (!start_w && opts.optimize_phases) {
    // No positive rate at the initial phases: align the phases to an MRT beam first.
    const CVec hc = ctx.ch.A.adjoint() * v;
    if (hc.norm() > 0.0) {
      const CVec mrt = hc * (0.5 * std::sqrt(ctx.p_max) / hc.norm());
      v = solve_q2(ctx, mrt, v, opts.manifold).v.vec();
      start_w = initial_beamformer(D1Problem::build(ctx, v));
    }
  }
  if (!start_w) {
    res.w = Beamformer::zero(ctx.ch.A.cols(), ctx.p_max);
    res.v = PhaseVector(v).canonical();
    res.am_trace = {0.0};
    res.positive_rate = false;
    res.converged = true;
    res.wall_ms = ms_since(start);
    return res;
  }

  CVec w = std::move(*start_w);
  double obj = pair_objective(ctx, w, v);
  res.am_trace.push_back(obj);
  auto emit = [&](int round, double value) {
    if (!opts.trace) return;
    TraceRecord r;
    r.solver = "am";
    r.subproblem = opts.subproblem;
    r.am_round = round;
    r.objective = value;
    opts.trace->push_back(std::move(r));
  };
  emit(0, obj);

  for (int r = 1; r <= opts.max_am; ++r) {
    res.am_rounds = r;
    PgOptions pg = opts.pg;
    pg.trace = opts.trace;
    pg.tag.subproblem = opts.subproblem;
    pg.tag.am_round = r;
    const auto d1_start = Clock::now();
    D1Result d1 = solve_d1(ctx, v, w, pg);
    res.d1_wall_ms += ms_since(d1_start);
    res.d1_inner_iterations += d1.pg_iterations;
    w = std::move(d1.w);

    if (opts.optimize_phases) {
      ManifoldOptions mo = opts.manifold;
      mo.trace = opts.trace;
      mo.tag.subproblem = opts.subproblem;
      mo.tag.am_round = r;
      const auto q2_start = Clock::now();
      Q2Result q2 = solve_q2(ctx, w, v, mo);
      res.q2_wall_ms += ms_since(q2_start);
      res.q2_inner_iterations += q2.inner_iterations;
      v = q2.v.vec();
    }

    const double obj_new = pair_objective(ctx, w, v);
    res.am_trace.push_back(obj_new);
    emit(r, obj_new);
    const bool done = !opts.optimize_phases ||
                      std::abs(obj_new - obj) <= opts.tol * std::max(std::abs(obj), std::numeric_limits<double>::min());
    obj = obj_new;
    if (done) {
      res.converged = opts.optimize_phases || d1.converged;
      break;
    }
  }
  res.w = Beamformer(project_ball(w, ctx.p_max), ctx.p_max);
  res.v = PhaseVector(v).canonical();
  res.wall_ms = ms_since(start);
  return res;
}

SolveReport solve_p2(const std::vector<SecrecyContext>& solve, const std::vector<SecrecyContext>& evaluate,
                     const PhaseVector& v_init, const AmOptions& opts, int workers) {
  if (solve.empty() || solve.size() != evaluate.size()) throw Error("solve_p2: context lists must be non-empty and equal");
  const auto start = Clock::now();
  struct Task {
    SubproblemResult result;
    Trace trace;
  };
  std::vector<Task> tasks = parallel_map(solve.size(), workers, [&](std::size_t idx) {
    Task task;
    AmOptions o = opts;
    o.subproblem = static_cast<int>(idx);
    o.trace = opts.trace ? &task.trace : nullptr;
    try {
      task.result = solve_subproblem(solve[idx], v_init, o);
    } catch (const Error& e) {
      throw Error("subproblem (k=" + std::to_string(solve[idx].k) + ", j=" + std::to_string(solve[idx].j) +
                  "): " + e.what());
    }
    return task;
  });

  SolveReport report;
  report.converged = true;
  for (std::size_t idx = 0; idx < tasks.size(); ++idx) {
    if (opts.trace) opts.trace->insert(opts.trace->end(), tasks[idx].trace.begin(), tasks[idx].trace.end());
    SubproblemResult& r = tasks[idx].result;
    r.score = secure_ee(evaluate[idx], r.w, r.v).ee;
    report.converged = report.converged && r.converged;
    report.subproblems.push_back(std::move(r));
  }
  select_worst_pair(report, evaluate);
  report.wall_ms = ms_since(start);
  return report;
}

void select_worst_pair(SolveReport& report, const std::vector<SecrecyContext>& evaluate) {
  std::size_t best = 0;
  for (std::size_t idx = 1; idx < report.subproblems.size(); ++idx)
    if (report.subproblems[idx].score < report.subproblems[best].score) best = idx;
  const SubproblemResult& chosen = report.subproblems[best];
  report.k_star = chosen.k;
  report.j_star = chosen.j;
  report.min_objective = chosen.score;
  report.w = chosen.w;
  report.v = chosen.v;
  report.evaluated_objective = overall_objective(evaluate, report.w, report.v).ee;
}

std::string Scheme::name() const {
  switch (kind) {
    case SchemeKind::Proposed: return "proposed";
    case SchemeKind::RPS: return "rps";
    case SchemeKind::FPS: return "fps";
    case SchemeKind::IgnoreUncertainty: return "ignore-uncertainty";
    case SchemeKind::Quantized: return "quantized-" + std::to_string(levels);
  }
  return "unknown";
}

Scheme Scheme::parse(const std::string& text) {
  if (text == "proposed") return {SchemeKind::Proposed, 0};
  if (text == "rps") return {SchemeKind::RPS, 0};
  if (text == "fps") return {SchemeKind::FPS, 0};
  if (text == "ignore-uncertainty") return {SchemeKind::IgnoreUncertainty, 0};
  const std::string prefix = "quantized-";
  if (text.rfind(prefix, 0) == 0) {
    int levels = 0;
    try {
      levels = std::stoi(text.substr(prefix.size()));
    } catch (const std::exception&) {
      levels = 0;
    }
    if (levels >= 2) return {SchemeKind::Quantized, levels};
  }
  throw Error("unknown scheme '" + text + "'");
}

PhaseVector quantize_phases(const PhaseVector& v, int levels) {
  if (levels < 2) throw Error("quantize_phases: need at least 2 levels");
  const CVec c = v.canonical().vec();
  const double delta = 2.0 * kPi / levels;
  CVec out(c.size());
  for (Index m = 0; m + 1 < c.size(); ++m) {
    double phase = std::arg(c(m));
    if (phase < 0.0) phase += 2.0 * kPi;
    const long idx = static_cast<long>(std::ceil(phase / delta - 0.5)) % levels;
    out(m) = std::polar(1.0, delta * static_cast<double>(idx));
  }
  out(c.size() - 1) = 1.0;
  return PhaseVector(out);
}

SolveReport quantized_report(const SolveReport& continuous, const std::vector<SecrecyContext>& evaluate, int levels) {
  if (evaluate.size() != continuous.subproblems.size()) throw Error("quantized_report: context count mismatch");
  SolveReport out = continuous;
  for (std::size_t idx = 0; idx < out.subproblems.size(); ++idx) {
    SubproblemResult& r = out.subproblems[idx];
    r.v = quantize_phases(r.v, levels);
    r.score = secure_ee(evaluate[idx], r.w, r.v).ee;
  }
  select_worst_pair(out, evaluate);
  return out;
}

SolveReport run_scheme(const Scheme& scheme, const SystemConfig& cfg, const ChannelSet& cs, int workers,
                       Trace* trace) {
  const std::vector<SecrecyContext> contexts = make_contexts(cfg, cs);
  AmOptions opts = AmOptions::from_config(cfg);
  opts.trace = trace;
  const PhaseVector identity = PhaseVector::identity(cs.n_elements());
  switch (scheme.kind) {
    case SchemeKind::Proposed: {
      SolveReport cont = solve_p2(contexts, contexts, identity, opts, workers);
      return cfg.quantization_levels > 0 ? quantized_report(cont, contexts, cfg.quantization_levels) : cont;
    }
    case SchemeKind::FPS:
      opts.optimize_phases = false;
      return solve_p2(contexts, contexts, identity, opts, workers);
    case SchemeKind::RPS: {
      opts.optimize_phases = false;
      Rng rng = make_rng(cs.seed, cs.trial, Stream::RandomPhases);
      const PhaseVector random = PhaseVector::from_reflection(draw_unit_phases(rng, cs.n_elements()));
      return solve_p2(contexts, contexts, random, opts, workers);
    }
    case SchemeKind::IgnoreUncertainty: {
      std::vector<SecrecyContext> known;
      known.reserve(contexts.size());
      for (const auto& c : contexts) known.push_back(make_known_eve_context(cfg, cs, c.k, c.j));
      return solve_p2(known, contexts, identity, opts, workers);
    }
    case SchemeKind::Quantized: {
      const SolveReport cont = solve_p2(contexts, contexts, identity, opts, workers);
      return quantized_report(cont, contexts, scheme.levels);
    }
  }
  throw Error("run_scheme: unknown scheme");
}

}  // namespace secee
