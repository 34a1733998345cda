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

#include "secee/oracle.hpp"

#include <doctest.h>

using namespace secee;
using namespace secee::test;

namespace {

double mean_eve_snr(const SecrecyContext& ctx, const ChannelSet& cs, const Beamformer& w, const PhaseVector& v) {
  const double ris = (v.reflection().asDiagonal() * (cs.H * w.vec())).squaredNorm();
  return ctx.kappa1 * ris + ctx.kappa2 * w.power();
}

}  // namespace

TEST_CASE("closed-form SOP boundary values") {
  const Instance inst = make_instance(4, 4, 1, 1, 5);
  const SecrecyContext ctx = inst.ctx();
  Rng rng = probe_rng(5);
  const Beamformer w(random_ball_point(rng, 4, inst.cfg.p_max_w), inst.cfg.p_max_w);
  const PhaseVector v = random_phase_vector(rng, 4);
  CHECK(sop_closed_form(ctx, w, v, 0.0) == 1.0);
  CHECK(sop_closed_form(ctx, Beamformer::zero(4, inst.cfg.p_max_w), v, 0.0) == 1.0);
  CHECK_THROWS_WITH_AS(sop_closed_form(ctx, Beamformer::zero(4, inst.cfg.p_max_w), v, 0.5),
                       doctest::Contains("undefined SOP for zero signal"), Error);
  CHECK_THROWS_AS(sop_closed_form(ctx, w, v, -1.0), Error);

  // Inverting the constraint: 2^D - 1 = mean * ln(1/eps) gives exactly eps.
  const double D = std::log1p(mean_eve_snr(ctx, inst.cs, w, v) * std::log(1.0 / ctx.epsilon)) / std::numbers::ln2;
  CHECK(std::abs(sop_closed_form(ctx, w, v, D) - ctx.epsilon) <= 1e-10);
  CHECK(std::abs(sop_closed_form(ctx, w, v, optimal_redundancy(ctx, w, v)) - ctx.epsilon) <= 1e-10);

  double prev = 1.0;
  for (double d = 0.1; d < 10.0; d += 0.5) {
    const double p = sop_closed_form(ctx, w, v, d);
    CHECK(p <= prev);
    CHECK(p >= 0.0);
    prev = p;
  }
}

TEST_CASE("optimal redundancy rate") {
  const Instance inst = make_instance(4, 6, 1, 2, 8);
  const SecrecyContext ctx = inst.ctx(0, 1);
  Rng rng = probe_rng(8);
  const PhaseVector v = random_phase_vector(rng, 6);
  CHECK(optimal_redundancy(ctx, Beamformer::zero(4, 1.0), v) == 0.0);

  // Scale w so that mean * ln(1/eps) = 1, giving one bit.
  const CVec w0 = random_cvec(rng, 4);
  const double m0 = mean_eve_snr(ctx, inst.cs, Beamformer(w0, 2.0 * w0.squaredNorm()), v) * ctx.log_inv_eps;
  const CVec w1 = w0 / std::sqrt(m0);
  CHECK(optimal_redundancy(ctx, Beamformer(w1, 2.0 * w1.squaredNorm()), v) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("secure EE values") {
  const Instance inst = make_instance(4, 4, 1, 1, 12);
  const SecrecyContext ctx = inst.ctx();
  Rng rng = probe_rng(12);
  const PhaseVector v = random_phase_vector(rng, 4);

  const ObjectiveValue zero = secure_ee(ctx, Beamformer::zero(4, ctx.p_max), v);
  CHECK(zero.ee == 0.0);
  CHECK(zero.numerator_bits == 0.0);
  CHECK(zero.denominator_watts == doctest::Approx(ctx.power.static_power()));

  for (int rep = 0; rep < 50; ++rep) {
    const Beamformer w(random_ball_point(rng, 4, ctx.p_max), ctx.p_max);
    const PhaseVector vr = random_phase_vector(rng, 4);
    const ObjectiveValue ev = secure_ee(ctx, w, vr);
    CHECK(ev.numerator_bits >= 0.0);
    CHECK(ev.denominator_watts > 0.0);
    CHECK(ev.ee_bits_per_joule == doctest::Approx(ev.ee * 1e7).epsilon(1e-14));
    const double ref = reference_secure_ee(inst.cfg, inst.cs, 0, 0, w.vec(), vr.reflection());
    CHECK(std::abs(ev.ee - ref) <= 1e-12 * std::max(ref, 1e-300) + 1e-300);
    CHECK(std::max(0.0, secrecy_rate(ctx, w.vec(), vr.vec())) == doctest::Approx(ev.numerator_bits).epsilon(1e-14));
  }

  CHECK_THROWS_AS(secure_ee(ctx, Beamformer(CVec::Ones(4), 10.0 * 4.0), v), Error);
  CHECK_THROWS_AS(secure_ee(ctx, Beamformer::zero(3, ctx.p_max), v), Error);
}

TEST_CASE("secure EE is proportional to the secrecy rate when 1/eta = 0") {
  const Instance inst = make_instance(3, 3, 1, 1, 21, {{"power.spectral_efficiency", "true"}});
  const SecrecyContext ctx = inst.ctx();
  Rng rng = probe_rng(21);
  const double statics = ctx.power.static_power();
  for (int rep = 0; rep < 20; ++rep) {
    const Beamformer w(random_ball_point(rng, 3, ctx.p_max), ctx.p_max);
    const PhaseVector v = random_phase_vector(rng, 3);
    const ObjectiveValue ev = secure_ee(ctx, w, v);
    CHECK(ev.denominator_watts == statics);
    CHECK(ev.ee == doctest::Approx(ev.numerator_bits / statics).epsilon(1e-15));
  }
}

TEST_CASE("perfect-CSI context uses the drawn Eve channel") {
  const Instance inst = make_instance(3, 5, 1, 2, 31);
  const SecrecyContext known = make_known_eve_context(inst.cfg, inst.cs, 0, 1);
  Rng rng = probe_rng(31);
  for (int rep = 0; rep < 10; ++rep) {
    const CVec w = random_ball_point(rng, 3, inst.cfg.p_max_w);
    const PhaseVector v = random_phase_vector(rng, 5).canonical();
    const CVec theta = v.reflection();
    const cplx user = composite_channel(inst.cs, 0, theta).cwiseProduct(w).sum();
    // Eve composite channel written out from its definition.
    const cplx eve = std::sqrt(inst.cs.alpha_1 * inst.cs.alpha_r_eve[1]) *
                         (inst.cs.g_r[1].adjoint() * theta.asDiagonal() * inst.cs.H * w).value() +
                     std::sqrt(inst.cs.alpha_d_eve[1]) * inst.cs.g_d[1].dot(w);
    const double expected = std::log2((1.0 + std::norm(user) / inst.cs.sigma2_user) /
                                      (1.0 + std::norm(eve) / inst.cs.sigma2_eve));
    CHECK(secrecy_rate(known, w, v.vec()) == doctest::Approx(expected).epsilon(1e-11));
  }
}

TEST_CASE("worst link over all pairs") {
  SUBCASE("single pair passes through") {
    const Instance inst = make_instance(3, 3, 1, 1, 40);
    const auto ctxs = make_contexts(inst.cfg, inst.cs);
    Rng rng = probe_rng(40);
    const Beamformer w(random_ball_point(rng, 3, inst.cfg.p_max_w), inst.cfg.p_max_w);
    const PhaseVector v = random_phase_vector(rng, 3);
    const WorstLink wl = overall_objective(ctxs, w, v);
    CHECK(wl.ee == secure_ee(ctxs[0], w, v).ee);
    CHECK(wl.k == 0);
    CHECK(wl.j == 0);
  }
  SUBCASE("ties go to the first pair") {
    const Instance inst = make_instance(3, 3, 1, 1, 41);
    SecrecyContext a = inst.ctx();
    SecrecyContext b = a;
    b.k = 1;
    const Beamformer w(CVec::Zero(3), inst.cfg.p_max_w);
    const WorstLink wl = overall_objective({a, b}, w, PhaseVector::identity(3));
    CHECK(wl.k == 0);
    CHECK(wl.j == 0);
  }
  SUBCASE("matches an exhaustive scan") {
    for (std::uint64_t seed = 50; seed < 60; ++seed) {
      const Instance inst = make_instance(4, 4, 2, 2, seed);
      const auto ctxs = make_contexts(inst.cfg, inst.cs);
      REQUIRE(ctxs.size() == 4);
      Rng rng = probe_rng(seed);
      const Beamformer w(random_ball_point(rng, 4, inst.cfg.p_max_w), inst.cfg.p_max_w);
      const PhaseVector v = random_phase_vector(rng, 4);
      double best = INFINITY;
      int bk = -1, bj = -1;
      for (int k = 0; k < 2; ++k)
        for (int j = 0; j < 2; ++j) {
          const double ref = reference_secure_ee(inst.cfg, inst.cs, k, j, w.vec(), v.reflection());
          if (ref < best) {
            best = ref;
            bk = k;
            bj = j;
          }
        }
      const WorstLink wl = overall_objective(ctxs, w, v);
      CHECK(wl.ee == doctest::Approx(best).epsilon(1e-12));
      if (best > 0.0) {
        CHECK(wl.k == bk);
        CHECK(wl.j == bj);
      }
    }
  }
}
