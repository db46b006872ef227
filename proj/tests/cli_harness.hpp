// Minimal harness for driving the command-line tool from tests: runs it
// through the shell, captures exit code, stdout and stderr.
#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace heaplam::testing {

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

// args must already be shell-quoted; expressions are safe inside single
// quotes since the grammar has no quote character.
inline CliResult run_cli(const std::string& cli, const std::string& args) {
  static int counter = 0;
  const std::string tag = std::to_string(++counter);
  const std::string out_path = "cli_stdout_" + tag + ".tmp";
  const std::string err_path = "cli_stderr_" + tag + ".tmp";
  const std::string cmd =
      "'" + cli + "' " + args + " >" + out_path + " 2>" + err_path;
  const int status = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = read_file(out_path);
  r.err = read_file(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

}  // namespace heaplam::testing
