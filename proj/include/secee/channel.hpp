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

#ifndef SECEE_CHANNEL_HPP
#define SECEE_CHANNEL_HPP

#include "secee/types.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace secee {

/// Log-distance path loss as a linear power gain:
/// 10^(-(ref_loss_db + 10 exponent log10(distance / ref_dist)) / 10).
double pathloss(double distance, double exponent, double ref_loss_db, double ref_dist);

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// One simulation trial: channels, large-scale gains and Eve statistics.
struct ChannelSet {
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;

  CMat H;                  // M x N, BS -> RIS
  std::vector<CVec> h_r;   // K x (M), RIS -> user k
  std::vector<CVec> h_d;   // K x (N), BS -> user k

  // Eve statistics and one small-scale realization per Eve (the latter only
  // feeds the perfect-CSI baseline and Monte Carlo checks).
  std::vector<double> mu_r2;  // J
  std::vector<double> mu_d2;  // J
  std::vector<CVec> g_r;      // J x (M)
  std::vector<CVec> g_d;      // J x (N)

  double alpha_1 = 0.0;              // BS -> RIS
  std::vector<double> alpha_r;       // RIS -> user k
  std::vector<double> alpha_d;       // BS -> user k
  std::vector<double> alpha_r_eve;   // RIS -> Eve j
  std::vector<double> alpha_d_eve;   // BS -> Eve j

  std::vector<Point> users;
  std::vector<Point> eves;

  double sigma2_user = 0.0;
  double sigma2_eve = 0.0;

  Index n_antennas() const { return H.cols(); }
  Index n_elements() const { return H.rows(); }
  int n_users() const { return static_cast<int>(h_r.size()); }
  int n_eves() const { return static_cast<int>(g_r.size()); }

  double kappa1(int j) const;
  double kappa2(int j) const;
};

/// Deterministic in (cfg, seed, trial).
ChannelSet generate_trial(const SystemConfig& cfg, std::uint64_t seed, std::uint64_t trial = 0);

/// Stacked channels for user k.
///   A     = [sqrt(alpha_1 alpha_r,k) diag(conj h_r,k) H ; sqrt(alpha_d,k) h_d,k^H]
///   H_hat = [H ; 0]
/// With theta_m = conj(v_m) and v_{M+1} = 1, v^H A w is the composite
/// user channel h_hat(Theta) w.
struct EffectiveChannels {
  CMat A;
  CMat H_hat;
};

EffectiveChannels effective_channels(const ChannelSet& cs, int k);

/// Composite row h_hat(Theta) = sqrt(alpha_1 alpha_r,k) h_r^H Theta H + sqrt(alpha_d,k) h_d^H,
/// returned as a column vector c with h_hat w = c^T w.
CVec composite_channel(const ChannelSet& cs, int k, const CVec& theta);

/// Perfect-CSI Eve stack for Eve j, mirroring A with the drawn g_r, g_d.
CMat eve_known_channels(const ChannelSet& cs, int j);

/// Text fixture format. Header line: "secee-channels 1 N M K J seed trial",
/// followed by named blocks of row-major "re im" pairs at 17 significant digits.
void write_channels(std::ostream& out, const ChannelSet& cs);
ChannelSet read_channels(std::istream& in);

}  // namespace secee

#endif  // SECEE_CHANNEL_HPP
