#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

namespace clirun {

struct Run {
  std::string out;
  int exit_code = -1;
};

inline std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

/// Runs the CLI binary with `args`, capturing stdout; stderr is discarded.
inline Run run(const std::vector<std::string>& args) {
  std::string cmd = quote(CLI_PATH);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

inline std::string scratch(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("transverse_test_" + name)).string();
}

struct Golden {
  std::vector<std::string> args;
  int exit_code;
};

/// Fixture commands covering every verb and every exit code.
inline std::vector<Golden> golden_commands() {
  const auto f = fixture;
  return {
      {{"gen", "--vertices", "6", "--dim", "2", "--density", "1/2", "--seed", "4", "--out", scratch("gen.complex")}, 0},
      {{"perturb", "--complex", f("theta.complex"), "--map", f("theta.map"), "--eps", "1/8", "--seed", "3", "--out",
        scratch("theta_perturbed.map")},
       0},
      {{"bounds", "--n", "2", "--m", "4", "--d", "1", "--t", "0", "--T", "3"}, 0},
      {{"stab", "--family", f("e1_family.json"), "--sets", f("e1_infeasible.json"), "--mode", "linear"}, 0},
      {{"stab", "--family", f("zaxis_family.json"), "--sets", f("zaxis_sets.json"), "--mode", "search", "--budget",
        "20"},
       0},
      {{"stab", "--family", f("lift_family.json"), "--sets", f("lift_sets.json"), "--mode", "univariate"}, 0},
      {{"count", "--complex", f("two_edges.complex"), "--map", f("two_edges.map"), "--plane", f("point_on_ab.json"),
        "--nmax", "1"},
       0},
      {{"section", "--complex", f("two_edges.complex"), "--map", f("two_edges.map"), "--plane", f("line_x_half.json"),
        "--eps", "1"},
       0},
      {{"cotype", "--complex", f("two_edges.complex"), "--map", f("two_edges.map"), "--plane", f("line_x_half.json"),
        "--q", "1", "--eps", "1"},
       0},
      {{"verify", "--grid", f("grid_golden.json"), "--trials", "2", "--seed", "7"}, 0},
      {{"verify", "--grid", f("grid_violation.json"), "--trials", "1", "--seed", "1"}, 1},
      {{"bounds", "--n", "x", "--m", "4", "--d", "1", "--t", "0", "--T", "3"}, 2},
      {{"verify", "--grid", f("grid_unknown_key.json"), "--trials", "1", "--seed", "1"}, 2},
      {{"frobnicate"}, 2},
      {{"count", "--complex", f("tetra.complex"), "--map", f("tetra.map"), "--plane", f("line_x_half.json"), "--nmax",
        "1"},
       3},
  };
}

}  // namespace clirun
