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

#ifndef SECEE_RANDOM_HPP
#define SECEE_RANDOM_HPP

#include "secee/types.hpp"

#include <cstdint>
#include <random>

namespace secee {

/// Named random substreams. Each (master seed, trial, purpose) triple maps to an
/// independent mt19937_64 state, so trials can be generated in any order.
enum class Stream : std::uint64_t {
  Channels = 1,
  EveRealization = 2,
  RandomPhases = 3,
  Oracle = 4,
  Probe = 5,
};

using Rng = std::mt19937_64;

/// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline Rng make_rng(std::uint64_t master, std::uint64_t trial, Stream purpose) {
  const std::uint64_t a = mix64(master);
  const std::uint64_t b = mix64(a ^ mix64(trial + 0x632be59bd9b4e019ULL));
  const std::uint64_t c = mix64(b ^ static_cast<std::uint64_t>(purpose));
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32),
                    static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32)};
  return Rng(seq);
}

/// Circularly-symmetric complex Gaussian CN(0, variance).
inline cplx draw_cn(Rng& rng, double variance = 1.0) {
  std::normal_distribution<double> n(0.0, std::sqrt(variance / 2.0));
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

inline CVec draw_cn_vector(Rng& rng, Index n, double variance = 1.0) {
  CVec out(n);
  for (Index i = 0; i < n; ++i) out(i) = draw_cn(rng, variance);
  return out;
}

inline CMat draw_cn_matrix(Rng& rng, Index rows, Index cols, double variance = 1.0) {
  CMat out(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) out(r, c) = draw_cn(rng, variance);
  return out;
}

/// Unit-modulus vector with phases uniform on [0, 2 pi).
inline CVec draw_unit_phases(Rng& rng, Index n) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
  CVec out(n);
  for (Index i = 0; i < n; ++i) out(i) = std::polar(1.0, u(rng));
  return out;
}

}  // namespace secee

#endif  // SECEE_RANDOM_HPP
