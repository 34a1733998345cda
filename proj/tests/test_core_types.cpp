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

#include <doctest.h>

#include <set>

using namespace secee;
using namespace secee::test;

namespace {

std::string error_of(const ConfigEntries& overrides) {
  try {
    load_config({}, overrides);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("defaults validate and derive the noise power") {
  const SystemConfig cfg = load_config({}, {});
  // -96 dBm/Hz over 10 MHz is -26 dBm.
  CHECK(cfg.sigma2_user_w == doctest::Approx(std::pow(10.0, -2.6) * 1e-3).epsilon(1e-12));
  CHECK(cfg.sigma2_eve_w == doctest::Approx(cfg.sigma2_user_w).epsilon(1e-12));
}

TEST_CASE("paper power constants are converted to watts") {
  const SystemConfig cfg = load_config({}, {{"power.eta", "0.311"},
                                            {"power.p_a_dbm", "39"},
                                            {"power.p_c_dbm", "20"},
                                            {"power.p_s_dbm", "10"}});
  CHECK(cfg.eta == 0.311);
  CHECK(cfg.p_a_w == doctest::Approx(7.9432823472).epsilon(1e-9));
  CHECK(cfg.p_c_w == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(cfg.p_s_w == doctest::Approx(0.01).epsilon(1e-12));
}

TEST_CASE("out-of-range fields name the field") {
  CHECK(error_of({{"secrecy.sop_bound", "0"}}).find("sop_bound out of (0,1)") != std::string::npos);
  CHECK(error_of({{"secrecy.sop_bound", "1"}}).find("sop_bound out of (0,1)") != std::string::npos);
  CHECK(error_of({{"system.n_antennas", "0"}}).find("system.n_antennas") != std::string::npos);
  CHECK(error_of({{"power.eta", "1.5"}}).find("power.eta") != std::string::npos);
  CHECK(error_of({{"power.eta", "0"}}).find("power.eta") != std::string::npos);
  CHECK(error_of({{"system.n_users", "2"}, {"secrecy.sop_bound", "0.1,0.2,0.3"}}).find("secrecy.sop_bound") !=
        std::string::npos);
  CHECK(error_of({{"system.bogus", "1"}}).find("system.bogus") != std::string::npos);
  CHECK(error_of({{"system.n_users", "2x"}}).find("system.n_users") != std::string::npos);
  CHECK(error_of({{"run.quantization_levels", "1"}}).find("run.quantization_levels") != std::string::npos);
}

TEST_CASE("per-user SOP bounds") {
  const SystemConfig cfg = load_config({}, {{"system.n_users", "2"}, {"secrecy.sop_bound", "0.1, 0.3"}});
  CHECK(cfg.sop(0) == 0.1);
  CHECK(cfg.sop(1) == 0.3);
  const SystemConfig one = load_config({}, {{"system.n_users", "3"}});
  CHECK(one.sop(2) == 0.1);
}

TEST_CASE("override precedence: override > file > default") {
  const ConfigEntries file{{"power.p_max_dbm", "5"}, {"system.n_users", "2"}};
  const SystemConfig from_file = load_config(file, {});
  CHECK(from_file.p_max_w == doctest::Approx(dbm_to_watts(5.0)));
  CHECK(from_file.n_eves == 10);
  const SystemConfig overridden = load_config(file, {{"power.p_max_dbm", "10"}});
  CHECK(overridden.p_max_w == doctest::Approx(dbm_to_watts(10.0)));
  CHECK(overridden.n_users == 2);
}

TEST_CASE("INI parsing with comments and round trip") {
  const std::string text =
      "; comment\n[system]\nn_antennas = 4 ; inline\n# other comment\nn_elements=6\n[power]\np_max_dbm = -3.5 # dBm\n";
  const ConfigEntries e = parse_ini(text);
  CHECK(e.at("system.n_antennas") == "4");
  CHECK(e.at("system.n_elements") == "6");
  CHECK(e.at("power.p_max_dbm") == "-3.5");

  const SystemConfig cfg = load_config(e, {{"secrecy.sop_bound", "0.25"}, {"run.quantization_levels", "4"}});
  const SystemConfig again = load_config(parse_ini(to_ini(cfg)), {});
  CHECK(to_entries(again) == to_entries(cfg));
  CHECK(again.n_antennas == 4);
  CHECK(again.quantization_levels == 4);
}

TEST_CASE("config schema lists every key once") {
  const auto& schema = config_schema();
  std::set<std::string> keys;
  for (const auto& f : schema) CHECK(keys.insert(f.key).second);
  CHECK(keys.count("power.p_max_dbm") == 1);
  CHECK(keys.count("solver.tol") == 1);
  CHECK(to_entries(load_config({}, {})).size() == schema.size());
}

TEST_CASE("total power") {
  PowerModel pm;
  pm.inv_eta = 1.0 / 0.311;
  pm.p_a = 1.0;
  pm.p_c = 0.25;
  pm.p_s = 0.01;
  pm.n_users = 2;
  pm.n_elements = 10;
  SUBCASE("zero transmit power gives the static power") { CHECK(total_power(pm, 0.0) == doctest::Approx(1.6)); }
  SUBCASE("unit arithmetic") {
    PowerModel unit;
    unit.inv_eta = 1.0;
    unit.p_a = 2.0;
    unit.n_users = 1;
    unit.n_elements = 1;
    CHECK(total_power(unit, Beamformer(CVec::Constant(1, cplx(1.0, 0.0)), 1.0)) == doctest::Approx(3.0));
  }
  SUBCASE("spectral-efficiency mode has a constant denominator") {
    const SystemConfig cfg = load_config({}, {{"power.spectral_efficiency", "true"}});
    const PowerModel se = PowerModel::from_config(cfg);
    CHECK(se.inv_eta == 0.0);
    CHECK(total_power(se, 0.0) == total_power(se, cfg.p_max_w));
  }
}

TEST_CASE("beamformer feasibility") {
  CHECK_NOTHROW(Beamformer(CVec::Constant(4, cplx(0.5, 0.0)), 1.0));
  CHECK_NOTHROW(Beamformer(CVec::Constant(4, cplx(0.5, 0.0)) * (1.0 + 1e-14), 1.0));
  CHECK_THROWS_AS(Beamformer(CVec::Constant(4, cplx(0.6, 0.0)), 1.0), Error);
  CHECK_THROWS_AS(Beamformer(CVec::Zero(2), 0.0), Error);
  CVec bad = CVec::Zero(2);
  bad(0) = cplx(std::nan(""), 0.0);
  CHECK_THROWS_AS(Beamformer(bad, 1.0), Error);
}

TEST_CASE("phase vector invariants") {
  Rng rng = probe_rng(3);
  const PhaseVector v = random_phase_vector(rng, 6);
  CHECK(v.max_modulus_error() <= kUnitModulusTol);
  const PhaseVector c = v.canonical();
  CHECK(c.vec()(6) == cplx(1.0, 0.0));
  CHECK(c.max_modulus_error() <= kUnitModulusTol);
  // Common phase only: c = v * conj(v_{M+1}).
  CHECK(rel_err(c.vec(), CVec(v.vec() * std::conj(v.vec()(6)))) < 1e-15);
  // Reflection coefficients are conj(v_m) after canonical rotation.
  const CVec theta = v.reflection();
  for (Index m = 0; m < 6; ++m) CHECK(std::abs(theta(m) - std::conj(c.vec()(m))) < 1e-15);
  const PhaseVector back = PhaseVector::from_reflection(theta);
  CHECK(rel_err(back.vec(), c.vec()) < 1e-15);
  CHECK(PhaseVector::identity(3).vec() == CVec::Ones(4));

  CHECK_THROWS_AS(PhaseVector(CVec::Ones(1)), Error);
  CVec off = CVec::Ones(3);
  off(1) = 1.1;
  CHECK_THROWS_AS(PhaseVector{off}, Error);
}
