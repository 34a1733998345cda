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

#include <sstream>

using namespace secee;
using namespace secee::test;

TEST_CASE("Monte Carlo SOP") {
  const Instance inst = make_instance(4, 4, 1, 1, 3);
  const SecrecyContext ctx = inst.ctx();
  Rng rng = probe_rng(3);
  const Beamformer w(random_ball_point(rng, 4, ctx.p_max), ctx.p_max);
  const PhaseVector v = random_phase_vector(rng, 4);
  const McEstimate zero = mc_sop(inst.cs, 0, w, v, 0.0, 10000, 1);
  CHECK(zero.p == 1.0);
  CHECK(zero.ci_half_width == 0.0);

  const double D = optimal_redundancy(ctx, w, v);
  const McEstimate at_opt = mc_sop(inst.cs, 0, w, v, D, 200000, 2);
  CHECK(std::abs(at_opt.p - ctx.epsilon) <= at_opt.ci_half_width * 1.5);
  CHECK(at_opt.samples == 200000);

  const McEstimate again = mc_sop(inst.cs, 0, w, v, D, 200000, 2);
  CHECK(again.p == at_opt.p);
}

TEST_CASE("finite-difference gradient") {
  // f(x) = x^H Q x + 2 Re(b^H x) has gradient 2 Q x + 2 b.
  Rng rng = probe_rng(5);
  const CMat R = draw_cn_matrix(rng, 4, 4, 1.0);
  const CMat Q = R.adjoint() * R;
  const CVec b = random_cvec(rng, 4);
  const CVec x = random_cvec(rng, 4);
  auto f = [&](const CVec& y) { return std::real(y.dot(Q * y)) + 2.0 * std::real(b.dot(y)); };
  const CVec g = fd_gradient(f, x, 1e-5);
  CHECK(rel_err(g, CVec(2.0 * Q * x + 2.0 * b)) <= 1e-9);
  CHECK_THROWS_AS(fd_gradient(f, x, 1e-3), Error);
  CHECK_THROWS_AS(fd_gradient(f, x, 1e-9), Error);
}

TEST_CASE("multistart search") {
  const Instance inst = make_instance(2, 2, 1, 1, 7);
  const MultistartResult r = multistart_search(inst.cfg, inst.cs, 0, 0, 3, 2000, 7);
  CHECK(r.objective >= 0.0);
  CHECK(r.w.squaredNorm() <= inst.cfg.p_max_w * (1.0 + 1e-12));
  CHECK(r.theta.cwiseAbs().isOnes(1e-12));
  CHECK(r.objective == doctest::Approx(reference_secure_ee(inst.cfg, inst.cs, 0, 0, r.w, r.theta)));
  CHECK(r.evaluations >= 2000);

  // Vanishing power budget: vanishing objective.
  double prev = INFINITY;
  for (double dbm : {-40.0, -60.0, -80.0}) {
    const Instance tiny = make_instance(2, 2, 1, 1, 7, {{"power.p_max_dbm", std::to_string(dbm)}});
    const double obj = multistart_search(tiny.cfg, tiny.cs, 0, 0, 2, 500, 7).objective;
    CHECK(obj <= prev);
    prev = obj;
  }
  CHECK(prev < 1e-3 * std::max(r.objective, 1e-300));
}

TEST_CASE("plain variants share the first iterate and the result") {
  const Instance inst = make_instance(10, 10, 1, 1, 2);
  AmOptions opts = AmOptions::from_config(inst.cfg);
  opts.tol = opts.pg.tol = opts.manifold.tol = 1e-8;
  const VariantComparison cmp = plain_variants(inst.ctx(), PhaseVector::identity(10), opts);
  REQUIRE(cmp.accelerated.am_trace.size() >= 1);
  CHECK(cmp.accelerated.am_trace.front() == cmp.plain.am_trace.front());
  CHECK(rel_err(cmp.accelerated.objective(), cmp.plain.objective()) <= 1e-4);
  CHECK(cmp.accelerated_iterations() > 0);
}

TEST_CASE("oracle report") {
  const OracleReport pass = make_oracle_report("sop", 0.1, 0.1005, 1000000, 0.01);
  CHECK(pass.pass);
  CHECK(pass.rel_error == doctest::Approx(0.005));
  const OracleReport fail = make_oracle_report("grad", 1.0, 1.1, 20, 1e-5);
  CHECK_FALSE(fail.pass);
  const OracleReport abs_tol = make_oracle_report("anchor", 0.0, 1e-10, 1, 1e-9, false);
  CHECK(abs_tol.pass);
  std::ostringstream out;
  write_oracle_csv(out, {pass, fail});
  const std::string csv = out.str();
  CHECK(csv.rfind("quantity,oracle_value,library_value,abs_error,rel_error,samples,tolerance,tolerance_kind,pass\n", 0) == 0);
  CHECK(csv.find("sop,0.10000000000000001,") != std::string::npos);
  CHECK(csv.find(",false\n") != std::string::npos);
}
