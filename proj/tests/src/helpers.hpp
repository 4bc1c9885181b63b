#ifndef QFV_TESTS_HELPERS_HPP
#define QFV_TESTS_HELPERS_HPP

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qfv/quiver.hpp"

namespace qfv_tests {

inline std::string fixture(const std::string& name) {
  return std::string(QFV_FIXTURES_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline qfv::QuiverFlagSpec make_spec(
    int vertices, const std::vector<std::pair<int, int>>& arrows,
    const std::vector<int>& dims) {
  qfv::Quiver q;
  q.vertices = vertices;
  for (auto [t, h] : arrows) q.arrows.push_back({t, h});
  return qfv::QuiverFlagSpec(q, dims);
}

// The projective bundle P(O + O(1) + O(1)) over P^1.
inline qfv::QuiverFlagSpec proj_bundle() {
  return make_spec(3, {{0, 1}, {0, 1}, {0, 2}, {1, 2}, {1, 2}}, {1, 1, 1});
}

// The three-step toric tower with s = (2, 5, 3).
inline qfv::QuiverFlagSpec tower() {
  return make_spec(4,
                   {{0, 1}, {0, 1}, {0, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 2},
                    {1, 3}, {2, 3}, {2, 3}},
                   {1, 1, 1, 1});
}

// The Grassmann bundle with r = (1, 2, 2) and s = (4, 5).
inline qfv::QuiverFlagSpec gr_bundle() {
  return make_spec(3, {{0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 2}, {1, 2}, {1, 2}},
                   {1, 2, 2});
}

// The partial flag variety Fl(4; 2, 1).
inline qfv::QuiverFlagSpec flag421() {
  return make_spec(3, {{0, 1}, {0, 1}, {0, 1}, {0, 1}, {1, 2}}, {1, 2, 1});
}

// n parallel arrows 0 -> 1 with dimension r at the sink.
inline qfv::QuiverFlagSpec kronecker(int n, int r) {
  std::vector<std::pair<int, int>> arrows(n, {0, 1});
  return make_spec(2, arrows, {1, r});
}

struct CliResult {
  int exit_code = -1;
  std::string out;
};

// Runs the installed CLI binary with the given arguments, capturing stdout.
inline CliResult run_cli(const std::string& args) {
  CliResult r;
  const std::string cmd =
      std::string(QFV_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace qfv_tests

#endif  // QFV_TESTS_HELPERS_HPP
