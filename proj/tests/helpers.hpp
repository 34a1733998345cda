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

#ifndef SECEE_TESTS_HELPERS_HPP
#define SECEE_TESTS_HELPERS_HPP

#include "secee/channel.hpp"
#include "secee/config.hpp"
#include "secee/objective.hpp"
#include "secee/random.hpp"

#include <string>

namespace secee::test {

struct Instance {
  SystemConfig cfg;
  ChannelSet cs;
  SecrecyContext ctx(int k = 0, int j = 0) const { return make_context(cfg, cs, k, j); }
};

inline Instance make_instance(int n, int m, int k, int j, std::uint64_t seed, ConfigEntries extra = {}) {
  extra["system.n_antennas"] = std::to_string(n);
  extra["system.n_elements"] = std::to_string(m);
  extra["system.n_users"] = std::to_string(k);
  extra["system.n_eves"] = std::to_string(j);
  Instance inst;
  inst.cfg = load_config({}, extra);
  inst.cs = generate_trial(inst.cfg, seed, 0);
  return inst;
}

inline CVec random_cvec(Rng& rng, Index n, double var = 1.0) { return draw_cn_vector(rng, n, var); }

/// Random point of the power ball with squared norm in [0.05, 1] p_max.
inline CVec random_ball_point(Rng& rng, Index n, double p_max) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  CVec w = draw_cn_vector(rng, n, 1.0);
  return w * std::sqrt(u(rng) * p_max) / w.norm();
}

inline CVec random_unit(Rng& rng, Index n) { return draw_unit_phases(rng, n); }

inline PhaseVector random_phase_vector(Rng& rng, Index m) { return PhaseVector(draw_unit_phases(rng, m + 1)); }

inline double rel_err(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

inline double rel_err(const CVec& a, const CVec& b) {
  const double s = std::max(a.norm(), b.norm());
  return s == 0.0 ? 0.0 : (a - b).norm() / s;
}

inline Rng probe_rng(std::uint64_t seed) { return make_rng(seed, 0, Stream::Probe); }

}  // namespace secee::test

#endif  // SECEE_TESTS_HELPERS_HPP
