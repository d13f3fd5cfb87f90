// End-to-end checks of the command-line tool: the exit-code contract,
// structured-output determinism, and the examples round trip.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <iostream>
#include <string>
#include <vector>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(LLC_ENTROPY_BIN) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  while (std::fgets(buf.data(), buf.size(), pipe)) output += buf.data();
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, output};
}

int failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "FAILED: " << what << "\n";
  }
}

} // namespace

int main() {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "llc-entropy-cli-test";
  fs::remove_all(dir);

  // examples: deterministic file set
  RunResult ex = run("examples " + dir.string());
  expect(ex.exit_code == 0, "examples exits 0");
  expect(fs::exists(dir / "bernoulli-left.sys"), "bernoulli-left.sys written");
  expect(fs::exists(dir / "identity.sys"), "identity.sys written");

  // every written example parses and computes
  for (const auto& entry : fs::directory_iterator(dir)) {
    RunResult r = run("topological " + entry.path().string());
    expect(r.exit_code == 0, "topological on " + entry.path().string() +
                                 " exits 0 (got " +
                                 std::to_string(r.exit_code) + ")");
  }

  // known values
  RunResult left = run("topological " + (dir / "bernoulli-left.sys").string());
  expect(left.output.find("ent* = 1") != std::string::npos,
         "left shift value 1");
  RunResult right =
      run("topological " + (dir / "bernoulli-right.sys").string());
  expect(right.output.find("ent* = 0") != std::string::npos,
         "right shift value 0");
  RunResult alg = run("algebraic --of-dual " +
                      (dir / "bernoulli-left.sys").string());
  expect(alg.exit_code == 0 && alg.output.find("ent = 1") != std::string::npos,
         "algebraic of the dual is 1");

  // uncertified-only results exit 2
  RunResult shallow = run("topological --n-cap 2 --s-min 8 " +
                          (dir / "bernoulli-left.sys").string());
  expect(shallow.exit_code == 2, "uncertified-only exits 2 (got " +
                                     std::to_string(shallow.exit_code) + ")");

  // parse errors exit 1 with a line-numbered diagnostic
  fs::path bad = dir / "bad.sys";
  std::ofstream(bad) << "[field]\np = 4\n[space]\ntracks = 1\n";
  RunResult parse = run("topological " + bad.string());
  expect(parse.exit_code == 1, "parse error exits 1");
  expect(parse.output.find("line 2") != std::string::npos,
         "diagnostic carries the line number");
  RunResult missing = run("topological " + (dir / "nope.sys").string());
  expect(missing.exit_code == 1, "missing file exits 1");

  // verify: all checks pass on the triangular example
  RunResult verify =
      run("verify " + (dir / "triangular-shifts.sys").string());
  expect(verify.exit_code == 0, "verify exits 0 (got " +
                                    std::to_string(verify.exit_code) + ")");
  expect(verify.output.find("addition: pass") != std::string::npos,
         "addition reported");
  expect(verify.output.find("bridge: pass") != std::string::npos,
         "bridge reported");

  // missing prerequisite section exits 1
  RunResult noinv =
      run("verify --check modulus " + (dir / "identity.sys").string());
  expect(noinv.exit_code == 0 || noinv.exit_code == 1,
         "modulus needs an inverse section");
  RunResult noinv2 =
      run("verify --check addition " + (dir / "bernoulli-left.sys").string());
  expect(noinv2.exit_code == 1, "addition without invariant exits 1");

  // an [invariant] section naming a non-invariant subspace is a
  // prerequisite failure, not a theorem failure
  fs::path notinv = dir / "notinv.sys";
  {
    std::ifstream in(dir / "triangular-shifts.sys");
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    auto pos = text.find("tracks = 1\n", text.find("[invariant]"));
    text.replace(pos, 11, "tracks = 2\n"); // track 2 is not invariant here
    std::ofstream(notinv) << text;
  }
  RunResult badinv = run("verify --check addition " + notinv.string());
  expect(badinv.exit_code == 1, "non-invariant subspace exits 1 (got " +
                                    std::to_string(badinv.exit_code) + ")");

  // structured output is stable across runs
  std::string cmd = "topological --format structured " +
                    (dir / "expanding-band2.sys").string();
  RunResult a = run(cmd), b = run(cmd);
  expect(a.exit_code == 0 && a.output == b.output,
         "structured output is deterministic");
  expect(a.output.find("\"value\": 2") != std::string::npos,
         "structured value present");

  if (failures == 0) std::puts("cli tests passed");
  return failures == 0 ? 0 : 1;
}
