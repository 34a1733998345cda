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

#include "secee/types.hpp"

#include <numeric>

namespace secee {

Beamformer::Beamformer(CVec w, double p_max) : w_(std::move(w)), p_max_(p_max) {
  if (!(p_max > 0.0)) throw Error("beamformer: p_max must be > 0");
  if (!w_.allFinite()) throw Error("beamformer: non-finite entries");
  if (w_.squaredNorm() > p_max * (1.0 + kPowerBallRelTol))
    throw Error("beamformer: ||w||^2 exceeds p_max");
}

PhaseVector::PhaseVector(CVec v) : v_(std::move(v)) {
  if (v_.size() < 2) throw Error("phase vector: needs at least one element plus the auxiliary entry");
  if (!v_.allFinite()) throw Error("phase vector: non-finite entries");
  if ((v_.array().abs() - 1.0).abs().maxCoeff() > 1e-9) throw Error("phase vector: entries must be unit modulus");
}

PhaseVector PhaseVector::identity(Index n_elements) { return PhaseVector(CVec::Ones(n_elements + 1)); }

PhaseVector PhaseVector::from_reflection(const CVec& theta) {
  CVec v(theta.size() + 1);
  v.head(theta.size()) = theta.conjugate();
  v(theta.size()) = 1.0;
  return PhaseVector(v);
}

PhaseVector PhaseVector::canonical() const {
  const cplx last = v_(v_.size() - 1);
  CVec out = v_ * (std::conj(last) / std::abs(last));
  out(out.size() - 1) = 1.0;
  return PhaseVector(out);
}

CVec PhaseVector::reflection() const {
  const cplx last = v_(v_.size() - 1);
  return (v_.head(n_elements()) * (std::conj(last) / std::abs(last))).conjugate();
}

double PhaseVector::max_modulus_error() const { return (v_.array().abs() - 1.0).abs().maxCoeff(); }

int SolveReport::total_am_rounds() const {
  return std::accumulate(subproblems.begin(), subproblems.end(), 0,
                         [](int acc, const SubproblemResult& r) { return acc + r.am_rounds; });
}

}  // namespace secee
