#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  ///< stdout and stderr, merged

  bool contains(const std::string& needle) const {
    return output.find(needle) != std::string::npos;
  }
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(SHIFTED_POISSON_CLI_PATH) + " " + args + " 2>&1";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.output.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string fixture(const std::string& name) {
  return std::string(SHIFTED_POISSON_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("usage surface: help and argument errors") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("--help").contains("check-poisson"));
  CHECK(run_cli("").exit_code == 2);            // a subcommand is required
  CHECK(run_cli("frobnicate").exit_code == 2);  // unknown subcommand

  const RunResult both = run_cli("check-linfty --builtin sl2 " + fixture("casimir-sl2.json"));
  CHECK(both.exit_code == 2);
  CHECK(both.contains("not both"));

  CHECK(run_cli("check-linfty").exit_code == 2);
  CHECK(run_cli("check-linfty --builtin no-such-algebra").exit_code == 2);
  CHECK(run_cli("check-linfty /no/such/file.json").exit_code == 2);
  CHECK(run_cli("check-linfty " + fixture("bad-syntax.json")).contains("document:"));
  CHECK(run_cli("check-linfty " + fixture("bad-syntax.json")).exit_code == 2);

  // A named candidate needs the shift to fix its symmetry type.
  const RunResult no_shift = run_cli("check-poisson --builtin sl2 --candidate casimir");
  CHECK(no_shift.exit_code == 2);
  CHECK(no_shift.contains("--shift"));
}

TEST_CASE("builtin --list names every catalog algebra") {
  const RunResult result = run_cli("builtin --list");
  CHECK(result.exit_code == 0);
  for (const char* name : {"abelian1", "abelian2", "sl2", "gl2", "heisenberg", "aff1",
                           "string-sl2", "string-gl2-trace", "cotangent-sl2",
                           "cotangent-heisenberg"}) {
    CHECK(result.contains(name));
  }
}

TEST_CASE("check-linfty: verdicts and exit codes") {
  const RunResult good = run_cli("check-linfty --builtin sl2");
  CHECK(good.exit_code == 0);
  CHECK(good.contains("verdict: consistent"));

  const RunResult bad = run_cli("check-linfty " + fixture("perturbed-sl2.json"));
  CHECK(bad.exit_code == 1);
  CHECK(bad.contains("input: file perturbed-sl2.json"));
  CHECK(bad.contains("residual row (1,3)"));
  CHECK(bad.contains("verdict: violated"));

  CHECK(run_cli("check-linfty " + fixture("dga.json")).exit_code == 0);
}

TEST_CASE("check-poisson: builtin candidates") {
  const RunResult casimir =
      run_cli("check-poisson --builtin sl2 --candidate casimir --shift 2 --specialized");
  CHECK(casimir.exit_code == 0);
  CHECK(casimir.contains("candidate components: (2,0) [3 terms]"));
  CHECK(casimir.contains("specialized identities: all hold"));
  CHECK(casimir.contains("verdict: verified"));

  const RunResult unit =
      run_cli("check-poisson --builtin string-sl2 --candidate unit-form --shift 3 --specialized");
  CHECK(unit.exit_code == 1);
  CHECK(unit.contains("failed: mixed-invariance"));
  CHECK(unit.contains("failed: cobracket-compatibility"));
  CHECK(unit.contains("failed: mixed-symmetrization"));
  CHECK(unit.contains("verdict: violated"));

  // The Killing form of the Heisenberg algebra is degenerate.
  CHECK(run_cli("check-poisson --builtin heisenberg --candidate casimir --shift 2").exit_code == 2);
}

TEST_CASE("check-poisson: documents") {
  const RunResult file_casimir = run_cli("check-poisson " + fixture("casimir-sl2.json") +
                                         " --specialized");
  CHECK(file_casimir.exit_code == 0);
  CHECK(file_casimir.contains("shift: 2"));  // taken from the document
  CHECK(file_casimir.contains("verdict: verified"));

  const RunResult warned = run_cli("check-poisson " + fixture("unprojected.json"));
  CHECK(warned.exit_code == 0);
  CHECK(warned.contains("warning: component (2,0) projected onto its symmetry type"));
  CHECK(warned.contains("verdict: verified"));
}

TEST_CASE("enumerate: admissible shapes and the high-shift note") {
  const RunResult shapes = run_cli("enumerate --N 2 --n 3");
  CHECK(shapes.exit_code == 0);
  CHECK(shapes.contains("(2,0)"));
  CHECK(shapes.contains("(2,1)"));
  CHECK(shapes.contains("total: 2"));

  const RunResult empty = run_cli("enumerate --N 1 --n 4");
  CHECK(empty.exit_code == 0);
  CHECK(empty.contains("total: 0"));
  CHECK(empty.contains("note:"));

  CHECK(run_cli("enumerate --N 0 --n 1").exit_code == 2);
  CHECK(run_cli("enumerate --N 1").exit_code == 2);  // --n is required
}

TEST_CASE("solve: strata, verification, and error paths") {
  const RunResult killing = run_cli("solve --builtin sl2 --shift 2 --unknown 2,0 --verify");
  CHECK(killing.exit_code == 0);
  CHECK(killing.contains("solution space: dimension 1"));
  CHECK(killing.contains("verify offset: residual zero"));
  CHECK(killing.contains("verify offset+basis[0]: residual zero"));

  const RunResult dropped = run_cli("solve --builtin abelian1 --shift 3 --all-unknowns");
  CHECK(dropped.exit_code == 0);
  CHECK(dropped.contains("zero-dimensional unknowns dropped: (2,0) (2,1)"));
  CHECK(dropped.contains("solution space: dimension 0"));

  const RunResult nonlinear = run_cli("solve --builtin sl2 --shift 1 --unknown 2,1 --unknown 3,0");
  CHECK(nonlinear.exit_code == 2);
  CHECK(nonlinear.contains("nonlinear system"));

  CHECK(run_cli("solve --builtin sl2 --shift 2 --unknown 2,0 --all-unknowns").exit_code == 2);
  CHECK(run_cli("solve --builtin sl2 --shift 2 --unknown bogus").exit_code == 2);
  CHECK(run_cli("solve --builtin sl2 --unknown 2,0").exit_code == 2);  // shift is required
}

TEST_CASE("project: symmetry projection is idempotent on documents") {
  const RunResult first = run_cli("project " + fixture("unprojected.json"));
  CHECK(first.exit_code == 0);
  CHECK(first.contains("1/2"));
  CHECK(first.contains("-1/2"));

  const std::string temp = "/tmp/shifted_poisson_projected.json";
  {
    std::ofstream out(temp, std::ios::binary);
    out << first.output;
  }
  const RunResult second = run_cli("project " + temp);
  CHECK(second.exit_code == 0);
  CHECK(second.output == first.output);
}

}  // TEST_SUITE
