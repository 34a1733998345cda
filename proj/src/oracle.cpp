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

#include "secee/oracle.hpp"

#include "secee/random.hpp"

#include <boost/random/normal_distribution.hpp>

#include <algorithm>
#include <cstdio>
#include <random>

namespace secee {

OracleReport make_oracle_report(std::string quantity, double oracle_value, double library_value,
                                std::size_t samples, double tolerance, bool relative) {
  OracleReport r;
  r.quantity = std::move(quantity);
  r.oracle_value = oracle_value;
  r.library_value = library_value;
  r.abs_error = std::abs(library_value - oracle_value);
  r.rel_error = oracle_value != 0.0 ? r.abs_error / std::abs(oracle_value) : (r.abs_error == 0.0 ? 0.0 : INFINITY);
  r.samples = samples;
  r.tolerance = tolerance;
  r.relative = relative;
  r.pass = (relative ? r.rel_error : r.abs_error) <= tolerance;
  return r;
}

void write_oracle_csv(std::ostream& out, const std::vector<OracleReport>& reports) {
  out << "quantity,oracle_value,library_value,abs_error,rel_error,samples,tolerance,tolerance_kind,pass\n";
  char buf[256];
  for (const auto& r : reports) {
    std::snprintf(buf, sizeof(buf), ",%.17g,%.17g,%.6g,%.6g,%zu,%.6g,%s,%s\n", r.oracle_value, r.library_value,
                  r.abs_error, r.rel_error, r.samples, r.tolerance, r.relative ? "relative" : "absolute",
                  r.pass ? "true" : "false");
    out << r.quantity << buf;
  }
}

McEstimate mc_sop(const ChannelSet& cs, int j, const Beamformer& w, const PhaseVector& v, double D,
                  std::size_t n_samples, std::uint64_t seed) {
  McEstimate est;
  est.samples = n_samples;
  if (n_samples == 0) return est;
  const double threshold = std::expm1(D * std::numbers::ln2);
  if (threshold <= 0.0) {
    est.p = 1.0;
    return est;
  }
  const Index M = cs.n_elements();
  const Index N = cs.n_antennas();
  const CVec theta = v.reflection();
  const CVec u = theta.asDiagonal() * (cs.H * w.vec());  // Theta H w
  const CVec& x = w.vec();
  // Large-scale gains and fading deviations folded into the fixed factors.
  const double amp_r = std::sqrt(cs.alpha_1 * cs.alpha_r_eve.at(j)) * std::sqrt(cs.mu_r2.at(j) / 2.0);
  const double amp_d = std::sqrt(cs.alpha_d_eve.at(j)) * std::sqrt(cs.mu_d2.at(j) / 2.0);
  Eigen::ArrayXd f_re(M + N), f_im(M + N);
  f_re << amp_r * u.real().array(), amp_d * x.real().array();
  f_im << amp_r * u.imag().array(), amp_d * x.imag().array();
  // Event log2(1 + |s|^2 / sigma2) > D  <=>  |s|^2 > (2^D - 1) sigma2.
  const double power_threshold = threshold * cs.sigma2_eve;

  Rng rng = make_rng(seed, static_cast<std::uint64_t>(j), Stream::Oracle);
  boost::random::normal_distribution<double> normal(0.0, 1.0);  // ziggurat
  std::size_t hits = 0;
  for (std::size_t s = 0; s < n_samples; ++s) {
    // s_eve = sum_i conj(g_i) f_i with unit-variance real and imaginary parts of g_i.
    double s_re = 0.0, s_im = 0.0;
    for (Index i = 0; i < M + N; ++i) {
      const double g_re = normal(rng);
      const double g_im = normal(rng);
      s_re += g_re * f_re(i) + g_im * f_im(i);
      s_im += g_re * f_im(i) - g_im * f_re(i);
    }
    if (s_re * s_re + s_im * s_im > power_threshold) ++hits;
  }
  est.p = static_cast<double>(hits) / static_cast<double>(n_samples);
  est.ci_half_width = 1.959963984540054 * std::sqrt(est.p * (1.0 - est.p) / static_cast<double>(n_samples));
  return est;
}

CVec fd_gradient(const ScalarField& f, const CVec& x, double h) {
  if (!(h >= 1e-8 && h <= 1e-4)) throw Error("fd_gradient: step must lie in [1e-8, 1e-4]");
  CVec g(x.size());
  CVec probe = x;
  for (Index n = 0; n < x.size(); ++n) {
    const cplx orig = x(n);
    probe(n) = orig + cplx(h, 0.0);
    const double fr_p = f(probe);
    probe(n) = orig - cplx(h, 0.0);
    const double fr_m = f(probe);
    probe(n) = orig + cplx(0.0, h);
    const double fi_p = f(probe);
    probe(n) = orig - cplx(0.0, h);
    const double fi_m = f(probe);
    probe(n) = orig;
    g(n) = cplx((fr_p - fr_m) / (2.0 * h), (fi_p - fi_m) / (2.0 * h));
  }
  return g;
}

double reference_secure_ee(const SystemConfig& cfg, const ChannelSet& cs, int k, int j, const CVec& w,
                           const CVec& theta) {
  const double sig = std::norm(composite_channel(cs, k, theta).cwiseProduct(w).sum());
  const double ris_leak = (theta.asDiagonal() * (cs.H * w)).squaredNorm();
  const double mean_eve = cs.kappa1(j) * ris_leak + cs.kappa2(j) * w.squaredNorm();
  const double rate =
      (std::log1p(sig / cs.sigma2_user) - std::log1p(mean_eve * std::log(1.0 / cfg.sop(k)))) / std::numbers::ln2;
  const double inv_eta = cfg.spectral_efficiency ? 0.0 : 1.0 / cfg.eta;
  const double power =
      inv_eta * w.squaredNorm() + cfg.p_a_w + cfg.n_users * cfg.p_c_w + cfg.n_elements * cfg.p_s_w;
  return std::max(0.0, rate) / power;
}

namespace {

struct Candidate {
  CVec w;
  RVec phases;
  double value = 0.0;
};

CVec phases_to_theta(const RVec& phases) {
  CVec theta(phases.size());
  for (Index m = 0; m < phases.size(); ++m) theta(m) = std::polar(1.0, phases(m));
  return theta;
}

CVec clip_ball(const CVec& w, double p_max) {
  const double n2 = w.squaredNorm();
  return n2 <= p_max ? w : CVec(w * std::sqrt(p_max / n2));
}

}  // namespace

MultistartResult multistart_search(const SystemConfig& cfg, const ChannelSet& cs, int k, int j, int n_starts,
                                   std::size_t n_samples, std::uint64_t seed) {
  const Index N = cs.n_antennas();
  const Index M = cs.n_elements();
  const double p_max = cfg.p_max_w;
  MultistartResult res;
  auto score = [&](const CVec& w, const RVec& ph) {
    ++res.evaluations;
    return reference_secure_ee(cfg, cs, k, j, w, phases_to_theta(ph));
  };

  Rng rng = make_rng(seed, cs.trial, Stream::Oracle);
  boost::random::normal_distribution<double> normal(0.0, 1.0);  // ziggurat
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Candidate> pool;
  pool.reserve(n_samples);
  for (std::size_t s = 0; s < n_samples; ++s) {
    Candidate c;
    c.w.resize(N);
    for (Index n = 0; n < N; ++n) {
      const double re = normal(rng);
      const double im = normal(rng);
      c.w(n) = {re, im};
    }
    // Uniform in the ball of real dimension 2N.
    const double radius = std::sqrt(p_max) * std::pow(unit(rng), 1.0 / (2.0 * static_cast<double>(N)));
    c.w *= radius / c.w.norm();
    c.phases.resize(M);
    for (Index m = 0; m < M; ++m) c.phases(m) = 2.0 * kPi * unit(rng);
    c.value = score(c.w, c.phases);
    pool.push_back(std::move(c));
  }
  const std::size_t keep = std::min<std::size_t>(pool.size(), static_cast<std::size_t>(std::max(1, n_starts)));
  std::partial_sort(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(keep), pool.end(),
                    [](const Candidate& a, const Candidate& b) { return a.value > b.value; });

  Candidate best;
  best.value = -1.0;
  for (std::size_t idx = 0; idx < keep; ++idx) {
    Candidate c = pool[idx];
    double step_w = 0.25 * std::sqrt(p_max);
    double step_p = 0.5;
    for (int sweep = 0; sweep < 400 && (step_w > 1e-10 * std::sqrt(p_max) || step_p > 1e-10); ++sweep) {
      bool improved = false;
      for (Index n = 0; n < 2 * N; ++n) {
        for (double dir : {1.0, -1.0}) {
          CVec trial = c.w;
          trial(n / 2) += (n % 2 == 0) ? cplx(dir * step_w, 0.0) : cplx(0.0, dir * step_w);
          trial = clip_ball(trial, p_max);
          const double val = score(trial, c.phases);
          if (val > c.value) {
            c.w = std::move(trial);
            c.value = val;
            improved = true;
            break;
          }
        }
      }
      for (Index m = 0; m < M; ++m) {
        for (double dir : {1.0, -1.0}) {
          RVec trial = c.phases;
          trial(m) += dir * step_p;
          const double val = score(c.w, trial);
          if (val > c.value) {
            c.phases = std::move(trial);
            c.value = val;
            improved = true;
            break;
          }
        }
      }
      // Radial move: the optimum often sits on the power boundary.
      {
        const CVec scaled = clip_ball(c.w * (1.0 + step_w / std::sqrt(p_max)), p_max);
        const double val = score(scaled, c.phases);
        if (val > c.value) {
          c.w = scaled;
          c.value = val;
          improved = true;
        }
      }
      if (!improved) {
        step_w *= 0.5;
        step_p *= 0.5;
      }
    }
    if (c.value > best.value) best = std::move(c);
  }
  res.w = best.w;
  res.theta = phases_to_theta(best.phases);
  res.objective = std::max(0.0, best.value);
  return res;
}

VariantComparison plain_variants(const SecrecyContext& ctx, const PhaseVector& v_init, const AmOptions& opts) {
  VariantComparison out;
  AmOptions acc = opts;
  acc.pg.momentum = true;
  acc.manifold.momentum = true;
  AmOptions plain = opts;
  plain.pg.momentum = false;
  plain.manifold.momentum = false;
  out.accelerated = solve_subproblem(ctx, v_init, acc);
  out.plain = solve_subproblem(ctx, v_init, plain);
  return out;
}

}  // namespace secee
