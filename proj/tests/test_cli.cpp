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


// Drives the built ftdsim binary and inspects exit codes and artifacts.

#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <string>

#include <fmt/format.h>

#include "ftd/scenario.hpp"

namespace fs = std::filesystem;
using ftd::io::json;

namespace {

const fs::path kData = FTDSIM_TEST_DATA;

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run ftdsim(const std::string& args) {
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path() / fmt::format("ftdsim_cli_test_{}", ::getpid());
  fs::create_directories(dir);
  const fs::path out = dir / fmt::format("out{}.txt", counter);
  const fs::path err = dir / fmt::format("err{}.txt", counter++);
  const std::string cmd = fmt::format("\"{}\" {} >\"{}\" 2>\"{}\"", FTDSIM_CLI_PATH, args, out.string(), err.string());
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = ftd::io::read_file(out);
  r.err = ftd::io::read_file(err);
  return r;
}

fs::path fresh_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / fmt::format("ftdsim_cli_{}_{}", name, ::getpid());
  fs::remove_all(p);
  return p;
}

std::string data(const std::string& file) { return "\"" + (kData / file).string() + "\""; }

}  // namespace

TEST_CASE("simulate depolarizing-bell: onset ln 3, byte-identical reruns, reloadable report") {
  const fs::path a = fresh_dir("dep_a"), b = fresh_dir("dep_b");
  const auto r1 = ftdsim(fmt::format("simulate depolarizing-bell --samples 128 --out-dir \"{}\"", a.string()));
  REQUIRE(r1.code == 0);
  const auto r2 = ftdsim(fmt::format("simulate depolarizing-bell --samples 128 --out-dir \"{}\"", b.string()));
  REQUIRE(r2.code == 0);

  const std::string summary = ftd::io::read_file(a / "summary.csv");
  CHECK(summary.rfind("index,label,onset,verdict\n", 0) == 0);
  CHECK(summary.find("FtdFound") != std::string::npos);
  const auto onset_pos = summary.find("1.0986");
  CHECK(onset_pos != std::string::npos);

  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(a)) {
    ++files;
    const fs::path twin = b / entry.path().filename();
    REQUIRE(fs::exists(twin));
    CHECK(ftd::io::read_file(entry.path()) == ftd::io::read_file(twin));
  }
  CHECK(files == 3);

  const std::string csv = ftd::io::read_file(a / "depolarizing-bell_state0.csv");
  CHECK(csv.rfind("t,tr,purity,lambda_minus,negativity\n", 0) == 0);

  const auto report = ftd::io::report_from_json(json::parse(ftd::io::read_file(a / "depolarizing-bell_state0_report.json")));
  CHECK(std::abs(report.intervals.at(0).a - std::log(3.0)) < 1e-4);
  const auto sc = ftd::scenario::build_scenario(*ftd::scenario::builtin_config("depolarizing-bell"), ".");
  CHECK(ftd::verify_report(sc.dynamics, report));
}

TEST_CASE("simulate local-rotations: NoFtdFound for all states") {
  const fs::path dir = fresh_dir("rot");
  const auto r = ftdsim(fmt::format("simulate local-rotations --samples 64 --out-dir \"{}\"", dir.string()));
  REQUIRE(r.code == 0);
  const std::string summary = ftd::io::read_file(dir / "summary.csv");
  CHECK(summary.find(",FtdFound\n") == std::string::npos);
  std::size_t count = 0;
  for (auto pos = summary.find("NoFtdFound"); pos != std::string::npos; pos = summary.find("NoFtdFound", pos + 1)) ++count;
  CHECK(count == 3);
}

TEST_CASE("simulate a config with file references") {
  const fs::path dir = fresh_dir("file_refs");
  const auto r = ftdsim(fmt::format("simulate {} --out-dir \"{}\"", data("lindblad_from_file.json"), dir.string()));
  INFO(r.err);
  REQUIRE(r.code == 0);
  CHECK(fs::exists(dir / "lindblad-file_state1.csv"));
}

TEST_CASE("config errors exit 2 and name the field") {
  const auto bad = ftdsim("simulate " + data("bad_dims.json"));
  CHECK(bad.code == 2);
  CHECK(bad.err.find("dynamics.dims") != std::string::npos);

  const auto unknown = ftdsim("simulate " + data("unknown_field.json"));
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("tolerance") != std::string::npos);

  CHECK(ftdsim("simulate no-such-scenario-or-file").code == 2);
  CHECK(ftdsim("simulate").code == 2);
  CHECK(ftdsim("frobnicate").code == 2);
  CHECK(ftdsim("sweep depolarizing-bell --param rate --range 1:2").code == 2);
}

TEST_CASE("numerical-invariant violations exit 3 naming the step") {
  const auto r = ftdsim("simulate " + data("unstable.json") + " --out-dir \"" + fresh_dir("unstable").string() + "\"");
  CHECK(r.code == 3);
  CHECK(r.err.find("step") != std::string::npos);
}

TEST_CASE("classify unitaries") {
  const auto cnot = ftdsim("classify " + data("cnot.txt"));
  REQUIRE(cnot.code == 0);
  const auto j = json::parse(cnot.out);
  CHECK(j.at("tag") == "NotProductPreserving");
  CHECK(j.at("predicates").at("pure_state_preserving") == true);
  CHECK(j.at("predicates").at("unital") == true);
  CHECK(j.at("predicates").at("trials") == 500);

  const auto swap = json::parse(ftdsim("classify " + data("swap.txt")).out);
  CHECK(swap.at("tag") == "LocalSwap");
  CHECK(swap.at("factors").is_object());

  const auto local = json::parse(ftdsim("classify " + data("x_kron_z.txt")).out);
  CHECK(local.at("tag") == "Local");
  const auto ua = ftd::io::matrix_from_json(local.at("factors").at("A"));
  const auto ub = ftd::io::matrix_from_json(local.at("factors").at("B"));
  CHECK(ftd::phase_aligned_distance(ftd::kron(ua, ub), ftd::kron(ftd::pauli(1), ftd::pauli(3))) < 1e-8);

  CHECK(ftdsim("classify " + data("not_unitary.txt")).code == 4);
  CHECK(ftdsim("classify " + data("truncated.txt")).code == 2);
  CHECK(ftdsim("classify " + data("missing.txt")).code == 2);
}

TEST_CASE("classify a channel") {
  const auto r = ftdsim("classify --channel " + data("dephasing_half.json") + " --trials 50 --seed 3");
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j.at("kraus_rank") == 2);
  CHECK(j.at("reconstruction") == "NotPurePreserving");
  CHECK(j.at("predicates").at("unital") == true);
  CHECK(j.at("predicates").at("pure_state_preserving") == false);
  CHECK(j.at("predicates").at("seed") == 3);
  CHECK(ftdsim("classify --channel " + data("cnot.txt")).code == 2);
}

TEST_CASE("witness subcommand") {
  const fs::path dir = fresh_dir("witness");
  const auto cnot = ftdsim(fmt::format("witness cnot-pulse --samples 128 --out-dir \"{}\"", dir.string()));
  REQUIRE(cnot.code == 0);
  CHECK(cnot.out.find("closed_witness") != std::string::npos);
  const auto report = json::parse(ftd::io::read_file(dir / "cnot-pulse_witness_report.json"));
  CHECK(report.at("method") == "closed_witness");
  CHECK(report.at("trajectory_csv_path") == "cnot-pulse_witness.csv");

  const auto deph = ftdsim(fmt::format("witness dephasing-witness --samples 64 --out-dir \"{}\"", dir.string()));
  REQUIRE(deph.code == 0);
  CHECK(deph.out.find("unital_witness") != std::string::npos);

  const auto rot = ftdsim(fmt::format("witness local-rotations --samples 32 --out-dir \"{}\"", dir.string()));
  CHECK(rot.code == 0);
  CHECK(rot.out.find("AllLocalUnitary") != std::string::npos);

  const auto rot_at = ftdsim(fmt::format("witness local-rotations --t 1.0 --samples 32 --out-dir \"{}\"", dir.string()));
  CHECK(rot_at.code == 1);
  CHECK(rot_at.out.find("NotApplicable") != std::string::npos);
}

TEST_CASE("sweep over the depolarizing rate") {
  const fs::path dir = fresh_dir("sweep");
  const auto r = ftdsim(fmt::format("sweep depolarizing-bell --param rate --range 1:2:2 --samples 128 --out-dir \"{}\"",
                                    dir.string()));
  REQUIRE(r.code == 0);
  const std::string csv = ftd::io::read_file(dir / "sweep.csv");
  CHECK(csv.rfind("rate,index,label,onset,verdict\n", 0) == 0);
  CHECK(csv.find("\n1,0,") != std::string::npos);
  CHECK(csv.find("\n2,0,") != std::string::npos);
  // Onset scales as ln 3 / rate.
  CHECK(csv.find("0.5493") != std::string::npos);
}
