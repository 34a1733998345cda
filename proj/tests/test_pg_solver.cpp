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

#include "helpers.hpp"

#include "secee/manifold.hpp"
#include "secee/oracle.hpp"
#include "secee/pg_solver.hpp"

#include <doctest.h>

using namespace secee;
using namespace secee::test;

namespace {

struct D1Fixture {
  Instance inst;
  SecrecyContext ctx;
  CVec v;
  D1Problem problem;

  explicit D1Fixture(std::uint64_t seed, int n = 6, int m = 8) : inst(make_instance(n, m, 1, 1, seed)) {
    ctx = inst.ctx();
    Rng rng = probe_rng(seed + 1000);
    v = random_phase_vector(rng, m).canonical().vec();
    problem = D1Problem::build(ctx, v);
  }
};

/// First fixture at or after seed whose problem admits a positive-rate start.
std::pair<D1Fixture, CVec> positive_fixture(std::uint64_t seed, int n = 6, int m = 8) {
  for (std::uint64_t s = seed; s < seed + 1000; ++s) {
    D1Fixture f(s, n, m);
    if (auto w = initial_beamformer(f.problem)) return {std::move(f), std::move(*w)};
  }
  FAIL("no positive-rate fixture");
  throw Error("unreachable");
}

}  // namespace

TEST_CASE("projection onto the power ball") {
  const double p = 2.5;
  CVec inside = CVec::Constant(5, cplx(1.0, -1.0));
  inside *= std::sqrt(p / 2.0) / inside.norm();
  CHECK(project_ball(inside, p) == inside);

  CVec outside = CVec::Constant(5, cplx(0.3, 0.7));
  outside *= 2.0 * std::sqrt(p) / outside.norm();
  const CVec proj = project_ball(outside, p);
  CHECK(proj.norm() == doctest::Approx(std::sqrt(p)).epsilon(1e-15));
  CHECK(rel_err(proj, CVec(outside / 2.0)) < 1e-15);

  // The nearest feasible point lies on the ray through x: scan the scale factor.
  Rng rng = probe_rng(4);
  for (int rep = 0; rep < 100; ++rep) {
    const CVec x = random_cvec(rng, 6, 1.0 + rep);
    const CVec px = project_ball(x, p);
    CHECK(px.squaredNorm() <= p * (1.0 + kPowerBallRelTol));
    double best_s = 0.0, best_d = INFINITY;
    const int grid = 20000;
    for (int g = 0; g <= grid; ++g) {
      const double s = static_cast<double>(g) / grid;
      if ((s * x).squaredNorm() > p) continue;
      const double d = (x - s * x).norm();
      if (d < best_d) {
        best_d = d;
        best_s = s;
      }
    }
    CHECK((px - best_s * x).norm() <= x.norm() / grid + 1e-12);
    CHECK((x - px).norm() <= best_d + 1e-12);
  }
}

TEST_CASE("momentum weights") {
  CHECK(next_momentum(1.0) == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-15));
  CHECK(next_momentum(1.0) == doctest::Approx(1.6180339887).epsilon(1e-10));
  double a = 1.0;
  for (int i = 0; i < 100; ++i) {
    const double next = next_momentum(a);
    CHECK(next > a);
    a = next;
  }
}

TEST_CASE("surrogate is tight and minorizes the secrecy rate") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    D1Fixture f(seed);
    Rng rng = probe_rng(seed);
    const CVec w_t = random_ball_point(rng, 6, f.ctx.p_max);
    const SurrogatePair sp = build_surrogate(f.problem, w_t);
    CHECK(std::abs(sp.delta(w_t) - f.problem.rate(w_t)) <= 1e-9);
    for (int probe = 0; probe < 100; ++probe) {
      const CVec w = random_ball_point(rng, 6, f.ctx.p_max);
      CHECK(f.problem.rate(w) >= sp.delta(w) - 1e-9);
    }
    // Gradient identity at the anchor, by finite differences of the rate.
    const CVec fd = fd_gradient([&](const CVec& x) { return f.problem.rate(x); }, w_t, 1e-6 * std::sqrt(f.ctx.p_max));
    const CVec analytic = sp.grad_r1(w_t) - sp.grad_r2(w_t);
    CHECK(rel_err(fd, analytic) <= 1e-7);
  }
}

TEST_CASE("transformed objective gradient matches finite differences") {
  int checked = 0;
  for (std::uint64_t seed = 1; checked < 20; ++seed) {
    D1Fixture f(seed);
    const auto start = initial_beamformer(f.problem);
    if (!start) continue;
    const CVec& w_t = *start;
    const SurrogatePair sp = build_surrogate(f.problem, w_t);
    Rng rng = probe_rng(seed + 50);
    const CVec w = w_t + 0.05 * random_cvec(rng, 6, f.ctx.p_max / 6.0);
    if (!(sp.delta(w) > 0.0)) continue;
    const double gamma = std::sqrt(sp.delta(w_t)) / f.problem.total_power(w_t);
    const PhiEval ev = phi_value_and_gradient(sp, gamma, w);
    CHECK(ev.value == doctest::Approx(phi_value(sp, gamma, w)).epsilon(1e-14));
    const CVec fd = fd_gradient([&](const CVec& x) { return phi_value(sp, gamma, x); }, w, 1e-6 * std::sqrt(f.ctx.p_max));
    CHECK(rel_err(fd, ev.grad) <= 1e-5);
    ++checked;
  }
}

TEST_CASE("quadratic transform identities") {
  const auto [f, w_t] = positive_fixture(9);
  const SurrogatePair sp = build_surrogate(f.problem, w_t);
  const PhiEval zero = phi_value_and_gradient(sp, 0.0, w_t);
  CHECK(zero.value == 0.0);
  CHECK(zero.grad.isZero(0.0));
  const double X = sp.delta(w_t);
  const double Y = f.problem.total_power(w_t);
  CHECK(phi_value(sp, std::sqrt(X) / Y, w_t) == doctest::Approx(X / Y).epsilon(1e-12));
  // Nonpositive surrogate is an error for gamma > 0.
  CHECK_THROWS_WITH_AS(phi_value_and_gradient(sp, 1.0, CVec::Zero(6)),
                       doctest::Contains("surrogate nonpositive; shrink step"), Error);
}

TEST_CASE("accelerated projected gradient") {
  const auto [f, w_t] = positive_fixture(13, 2, 3);
  const SurrogatePair sp = build_surrogate(f.problem, w_t);
  const double gamma = std::sqrt(sp.delta(w_t)) / f.problem.total_power(w_t);

  PgOptions tight;
  tight.tol = 1e-12;
  tight.max_i = 20000;
  std::vector<CVec> iterates;
  tight.observer = [&](const CVec& x) { iterates.push_back(x); };
  const PgResult acc = accelerated_pg(sp, gamma, w_t, tight);
  for (std::size_t i = 1; i < acc.phi_trace.size(); ++i) CHECK(acc.phi_trace[i] >= acc.phi_trace[i - 1]);
  for (const CVec& x : iterates) CHECK(x.squaredNorm() <= f.ctx.p_max * (1.0 + 1e-12));

  PgOptions plain = tight;
  plain.momentum = false;
  plain.observer = nullptr;
  const PgResult ref = accelerated_pg(sp, gamma, w_t, plain);
  CHECK(std::abs(acc.phi_trace.back() - ref.phi_trace.back()) <= 1e-6 * std::abs(ref.phi_trace.back()));

  SUBCASE("stationary start returns after one iteration") {
    PgOptions o;
    o.tol = 1e-4;
    const PgResult again = accelerated_pg(sp, gamma, acc.x, o);
    CHECK(again.iterations == 1);
    CHECK(rel_err(again.x, acc.x) < 1e-6);
  }
  SUBCASE("the first iterate does not depend on momentum") {
    PgOptions one = tight;
    one.max_i = 1;
    one.observer = nullptr;
    PgOptions one_plain = one;
    one_plain.momentum = false;
    CHECK(accelerated_pg(sp, gamma, w_t, one).x == accelerated_pg(sp, gamma, w_t, one_plain).x);
  }
}

TEST_CASE("beamformer solve is monotone and feasible") {
  PgOptions opts;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Instance inst = make_instance(10, 10, 1, 1, seed);
    const SecrecyContext ctx = inst.ctx();
    Rng rng = probe_rng(seed);
    const CVec v = random_phase_vector(rng, 10).canonical().vec();
    bool feasible = true;
    opts.observer = [&](const CVec& x) { feasible = feasible && x.squaredNorm() <= ctx.p_max * (1.0 + 1e-12); };
    const D1Result r = solve_d1(ctx, v, CVec::Zero(10), opts);
    CHECK(feasible);
    if (!r.positive_rate) continue;
    for (std::size_t i = 1; i < r.trace.size(); ++i)
      CHECK(r.trace[i] >= r.trace[i - 1] - 1e-8 * std::abs(r.trace[i - 1]));
    CHECK(r.w.squaredNorm() <= ctx.p_max * (1.0 + 1e-12));
  }
}

TEST_CASE("a zero start is handled") {
  D1Fixture f(3);
  const D1Result r = solve_d1(f.ctx, f.v, CVec::Zero(6), PgOptions{});
  if (r.positive_rate) {
    CHECK(r.trace.front() > 0.0);
    CHECK(r.w.norm() > 0.0);
  } else {
    CHECK(r.trace.front() == 0.0);
  }
}

TEST_CASE("larger power budget gives a larger beamformer objective") {
  int compared = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    double prev = -1.0;
    for (double dbm : {-10.0, 0.0, 10.0}) {
      const Instance inst = make_instance(10, 10, 1, 1, seed, {{"power.p_max_dbm", std::to_string(dbm)}});
      const SecrecyContext ctx = inst.ctx();
      const CVec v = PhaseVector::identity(10).vec();
      const D1Result r = solve_d1(ctx, v, CVec::Zero(10), PgOptions{});
      const double value = r.positive_rate ? r.trace.back() : 0.0;
      CHECK(value >= prev * (1.0 - 1e-3));
      prev = value;
      ++compared;
    }
  }
  CHECK(compared == 30);
}
