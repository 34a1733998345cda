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

#include "secee/channel.hpp"

#include "secee/random.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace secee {

double pathloss(double distance, double exponent, double ref_loss_db, double ref_dist) {
  if (!(ref_dist > 0.0)) throw Error("pathloss: reference distance must be > 0");
  if (!(distance >= ref_dist))
    throw Error("pathloss: distance " + std::to_string(distance) + " m is below the reference distance");
  return std::pow(10.0, -(ref_loss_db + 10.0 * exponent * std::log10(distance / ref_dist)) / 10.0);
}

double ChannelSet::kappa1(int j) const { return alpha_1 * alpha_r_eve.at(j) * mu_r2.at(j) / sigma2_eve; }
double ChannelSet::kappa2(int j) const { return alpha_d_eve.at(j) * mu_d2.at(j) / sigma2_eve; }

namespace {

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

}  // namespace

ChannelSet generate_trial(const SystemConfig& cfg, std::uint64_t seed, std::uint64_t trial) {
  const auto& g = cfg.geometry;
  const auto& pl = cfg.pathloss;
  const Index N = cfg.n_antennas;
  const Index M = cfg.n_elements;
  const int K = cfg.n_users;
  const int J = cfg.n_eves;

  ChannelSet cs;
  cs.seed = seed;
  cs.trial = trial;
  cs.sigma2_user = cfg.sigma2_user_w;
  cs.sigma2_eve = cfg.sigma2_eve_w;
  if (!(cs.sigma2_user > 0.0 && cs.sigma2_eve > 0.0)) throw Error("generate_trial: config not validated (noise power)");

  Rng rng = make_rng(seed, trial, Stream::Channels);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const Point bs{g.bs_x, g.bs_y};
  const Point ris{g.ris_x, g.ris_y};
  auto gain = [&](Point a, Point b, double exponent) {
    const double d = distance(a, b);
    if (d <= 0.0) throw Error("generate_trial: degenerate geometry (zero distance)");
    return pathloss(d, exponent, pl.ref_loss_db, pl.ref_dist_m);
  };
  cs.alpha_1 = gain(bs, ris, pl.exp_bs_ris);

  for (int k = 0; k < K; ++k) {
    const double r = g.user_radius * std::sqrt(unit(rng));
    const double phi = 2.0 * kPi * unit(rng);
    const Point u{g.user_center_x + r * std::cos(phi), g.user_center_y + r * std::sin(phi)};
    cs.users.push_back(u);
    cs.alpha_r.push_back(gain(ris, u, pl.exp_ris_user));
    cs.alpha_d.push_back(gain(bs, u, pl.exp_bs_user));
  }
  for (int j = 0; j < J; ++j) {
    const double d = g.eve_ris_min + (g.eve_ris_max - g.eve_ris_min) * unit(rng);
    const double phi = 2.0 * kPi * unit(rng);
    const Point e{ris.x + d * std::cos(phi), ris.y + d * std::sin(phi)};
    cs.eves.push_back(e);
    cs.alpha_r_eve.push_back(gain(ris, e, pl.exp_ris_eve));
    cs.alpha_d_eve.push_back(gain(bs, e, pl.exp_bs_eve));
    cs.mu_r2.push_back(cfg.eve_mu_r2);
    cs.mu_d2.push_back(cfg.eve_mu_d2);
  }

  cs.H = draw_cn_matrix(rng, M, N);
  for (int k = 0; k < K; ++k) {
    cs.h_r.push_back(draw_cn_vector(rng, M));
    cs.h_d.push_back(draw_cn_vector(rng, N));
  }

  Rng eve_rng = make_rng(seed, trial, Stream::EveRealization);
  for (int j = 0; j < J; ++j) {
    cs.g_r.push_back(draw_cn_vector(eve_rng, M, cs.mu_r2[j]));
    cs.g_d.push_back(draw_cn_vector(eve_rng, N, cs.mu_d2[j]));
  }
  return cs;
}

EffectiveChannels effective_channels(const ChannelSet& cs, int k) {
  const Index M = cs.n_elements();
  const Index N = cs.n_antennas();
  EffectiveChannels ec;
  ec.A.resize(M + 1, N);
  ec.A.topRows(M) = std::sqrt(cs.alpha_1 * cs.alpha_r.at(k)) * (cs.h_r[k].conjugate().asDiagonal() * cs.H);
  ec.A.row(M) = std::sqrt(cs.alpha_d.at(k)) * cs.h_d[k].adjoint();
  ec.H_hat = CMat::Zero(M + 1, N);
  ec.H_hat.topRows(M) = cs.H;
  return ec;
}

CVec composite_channel(const ChannelSet& cs, int k, const CVec& theta) {
  // Row vector h_r^H Theta H + ..., transposed to a column.
  const Eigen::RowVectorXcd row = std::sqrt(cs.alpha_1 * cs.alpha_r.at(k)) *
                                      (cs.h_r.at(k).adjoint() * theta.asDiagonal() * cs.H) +
                                  std::sqrt(cs.alpha_d.at(k)) * cs.h_d.at(k).adjoint();
  return row.transpose();
}

CMat eve_known_channels(const ChannelSet& cs, int j) {
  const Index M = cs.n_elements();
  CMat B(M + 1, cs.n_antennas());
  B.topRows(M) = std::sqrt(cs.alpha_1 * cs.alpha_r_eve.at(j)) * (cs.g_r.at(j).conjugate().asDiagonal() * cs.H);
  B.row(M) = std::sqrt(cs.alpha_d_eve.at(j)) * cs.g_d.at(j).adjoint();
  return B;
}

namespace {

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_matrix(std::ostream& out, const std::string& name, const CMat& m) {
  out << name << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) out << (c ? " " : "") << num(m(r, c).real()) << ' ' << num(m(r, c).imag());
    out << '\n';
  }
}

void write_reals(std::ostream& out, const std::string& name, const std::vector<double>& v) {
  out << name << ' ' << v.size() << '\n';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << num(v[i]);
  out << '\n';
}

std::string expect_name(std::istream& in, const std::string& name) {
  std::string got;
  if (!(in >> got) || got != name) throw Error("read_channels: expected block '" + name + "', got '" + got + "'");
  return got;
}

CMat read_matrix(std::istream& in, const std::string& name) {
  expect_name(in, name);
  Index rows = 0, cols = 0;
  if (!(in >> rows >> cols)) throw Error("read_channels: bad dimensions for '" + name + "'");
  CMat m(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) {
      double re = 0.0, im = 0.0;
      if (!(in >> re >> im)) throw Error("read_channels: truncated block '" + name + "'");
      m(r, c) = {re, im};
    }
  return m;
}

std::vector<double> read_reals(std::istream& in, const std::string& name) {
  expect_name(in, name);
  std::size_t n = 0;
  if (!(in >> n)) throw Error("read_channels: bad length for '" + name + "'");
  std::vector<double> v(n);
  for (auto& x : v)
    if (!(in >> x)) throw Error("read_channels: truncated block '" + name + "'");
  return v;
}

}  // namespace

void write_channels(std::ostream& out, const ChannelSet& cs) {
  out << "secee-channels 1 " << cs.n_antennas() << ' ' << cs.n_elements() << ' ' << cs.n_users() << ' '
      << cs.n_eves() << ' ' << cs.seed << ' ' << cs.trial << '\n';
  write_reals(out, "scalars", {cs.alpha_1, cs.sigma2_user, cs.sigma2_eve});
  write_reals(out, "alpha_r", cs.alpha_r);
  write_reals(out, "alpha_d", cs.alpha_d);
  write_reals(out, "alpha_r_eve", cs.alpha_r_eve);
  write_reals(out, "alpha_d_eve", cs.alpha_d_eve);
  write_reals(out, "mu_r2", cs.mu_r2);
  write_reals(out, "mu_d2", cs.mu_d2);
  write_matrix(out, "H", cs.H);
  for (int k = 0; k < cs.n_users(); ++k) {
    write_matrix(out, "h_r", cs.h_r[k]);
    write_matrix(out, "h_d", cs.h_d[k]);
  }
  for (int j = 0; j < cs.n_eves(); ++j) {
    write_matrix(out, "g_r", cs.g_r[j]);
    write_matrix(out, "g_d", cs.g_d[j]);
  }
}

ChannelSet read_channels(std::istream& in) {
  std::string magic;
  int version = 0;
  Index N = 0, M = 0;
  int K = 0, J = 0;
  ChannelSet cs;
  if (!(in >> magic >> version >> N >> M >> K >> J >> cs.seed >> cs.trial) || magic != "secee-channels" ||
      version != 1)
    throw Error("read_channels: bad header");
  const auto scalars = read_reals(in, "scalars");
  if (scalars.size() != 3) throw Error("read_channels: bad scalars block");
  cs.alpha_1 = scalars[0];
  cs.sigma2_user = scalars[1];
  cs.sigma2_eve = scalars[2];
  cs.alpha_r = read_reals(in, "alpha_r");
  cs.alpha_d = read_reals(in, "alpha_d");
  cs.alpha_r_eve = read_reals(in, "alpha_r_eve");
  cs.alpha_d_eve = read_reals(in, "alpha_d_eve");
  cs.mu_r2 = read_reals(in, "mu_r2");
  cs.mu_d2 = read_reals(in, "mu_d2");
  cs.H = read_matrix(in, "H");
  for (int k = 0; k < K; ++k) {
    cs.h_r.push_back(read_matrix(in, "h_r"));
    cs.h_d.push_back(read_matrix(in, "h_d"));
  }
  for (int j = 0; j < J; ++j) {
    cs.g_r.push_back(read_matrix(in, "g_r"));
    cs.g_d.push_back(read_matrix(in, "g_d"));
  }
  if (cs.H.rows() != M || cs.H.cols() != N || static_cast<int>(cs.alpha_r.size()) != K ||
      static_cast<int>(cs.alpha_r_eve.size()) != J)
    throw Error("read_channels: block sizes disagree with header");
  return cs;
}

}  // namespace secee
