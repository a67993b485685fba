// Copyright 2026 The ftdsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <doctest.h>

#include "ftd/io.hpp"
#include "ftd/random.hpp"

using namespace ftd;
using io::json;

TEST_CASE("matrix JSON: arrays are canonical, text strings are accepted") {
  Rng rng(1);
  const ComplexMatrix m = ginibre(3, 3, rng);
  const json j = io::matrix_to_json(m);
  CHECK(j.is_array());
  CHECK(j[0][0].is_array());
  CHECK(max_abs(io::matrix_from_json(j) - m) == 0.0);
  CHECK(max_abs(io::matrix_from_json(json(format_matrix_text(m))) - m) == 0.0);
  CHECK(io::matrix_from_json(json::parse("[[1, [0, 2]], [3, 4]]"))(0, 1) == cplx(0.0, 2.0));
  CHECK_THROWS_AS(io::matrix_from_json(json::parse("[[1, 2], [3]]")), io::FormatError);
  CHECK_THROWS_AS(io::matrix_from_json(json::parse("{\"a\": 1}")), io::FormatError);
}

TEST_CASE("dims validation names the field") {
  CHECK(io::dims_from_json(json::parse("[2, 3]")) == BipartiteDims(2, 3));
  try {
    io::dims_from_json(json::parse("[2]"), "dynamics.dims");
    FAIL("expected FormatError");
  } catch (const io::FormatError& e) {
    CHECK(std::string(e.what()).find("dynamics.dims") != std::string::npos);
  }
  CHECK_THROWS(io::dims_from_json(json::parse("[1, 2]")));
  CHECK_THROWS(io::dims_from_json(json::parse("[7, 2]")));
  CHECK_THROWS(io::dims_from_json(json::parse("[2.5, 2]")));
}

TEST_CASE("state text round trip") {
  Rng rng(2);
  const DensityOperator rho(random_density_matrix(6, 3, rng), BipartiteDims(2, 3));
  const std::string text = io::format_state_text(rho);
  CHECK(text.rfind("dims 2 3\n6 6\n", 0) == 0);
  const auto back = io::parse_state_text(text);
  CHECK(back.dims() == rho.dims());
  CHECK(max_abs(back.matrix() - rho.matrix()) == 0.0);
  CHECK_THROWS(io::parse_state_text("2 2\n1 0\n0 0\n"));
}

TEST_CASE("channel JSON round trip") {
  const auto ch = one_sided_dephasing_channel(0.3);
  const json j = io::channel_to_json(ch);
  const auto back = io::channel_from_json(j);
  REQUIRE(back.kraus().size() == ch.kraus().size());
  for (std::size_t i = 0; i < ch.kraus().size(); ++i) CHECK(max_abs(back.kraus()[i] - ch.kraus()[i]) == 0.0);
  CHECK_THROWS_AS(io::channel_from_json(json::parse(R"({"dims":[2,2],"kraus":[],"extra":1})")), io::FormatError);
  const json text_form = {{"dims", {2, 2}}, {"kraus", {format_matrix_text(identity(4))}}};
  CHECK(io::channel_from_json(text_form).kraus().size() == 1);
}

TEST_CASE("generator JSON round trip") {
  const auto gen = amplitude_damping_generator(0.5);
  const auto back = io::generator_from_json(io::generator_to_json(gen));
  CHECK(back.dims() == gen.dims());
  REQUIRE(back.jumps().size() == gen.jumps().size());
  CHECK(max_abs(back.hamiltonian() - gen.hamiltonian()) == 0.0);
  for (std::size_t i = 0; i < gen.jumps().size(); ++i) CHECK(max_abs(back.jumps()[i] - gen.jumps()[i]) == 0.0);
}

TEST_CASE("verdict and report JSON") {
  const auto rho = DensityOperator::from_pure(bell_state(BellState::PhiPlus));
  const json v = io::verdict_to_json(classify_separability(rho));
  CHECK(v.at("classification") == "Entangled");
  CHECK(v.at("lambda_minus").get<double>() == doctest::Approx(-0.5));

  FtdReport report{FtdMethod::Scan, rho, {{1.0, 3.0, true}, {0.2, 0.4, false}}, {}, std::nullopt};
  const json j = io::report_to_json(report, "traj.csv");
  CHECK(j.at("method") == "scan");
  CHECK(j.at("trajectory_csv_path") == "traj.csv");
  CHECK(j.at("intervals")[0] == json::parse("[1.0, 3.0, true]"));
  const auto back = io::report_from_json(j);
  CHECK(back.intervals.size() == 2);
  CHECK(back.intervals[1].a == 0.2);
  CHECK(max_abs(back.witness_state.matrix() - rho.matrix()) == 0.0);
}

TEST_CASE("trajectory CSV has the exact header and one row per sample") {
  const auto dyn = depolarizing_dynamics(1.0, 1.0, 1e-2);
  const auto traj = entanglement_trajectory(dyn, DensityOperator::from_pure(bell_state(BellState::PhiPlus)), 5);
  const std::string csv = io::trajectory_csv(traj);
  CHECK(csv.rfind("t,tr,purity,lambda_minus,negativity\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
  CHECK(csv.find("\n0,") != std::string::npos);
}

TEST_CASE("real formatting round trips") {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-17, 12345.678}) CHECK(std::stod(io::format_real(x)) == x);
}
