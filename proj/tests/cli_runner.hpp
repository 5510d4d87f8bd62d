#pragma once

// Runs the command-line binary (compile definition PAIRABLE_CLI_PATH) through
// the shell and captures exit code plus output for the end-to-end tests.

#include <cstdio>
#include <string>
#include <sys/wait.h>

struct CliResult {
  int exit_code = -1;
  std::string out;

  bool contains(const std::string& needle) const {
    return out.find(needle) != std::string::npos;
  }
};

// merge_stderr folds stderr into the captured stream; otherwise stderr is
// dropped so stdout comparisons stay byte-exact.
inline CliResult run_cli(const std::string& args, bool merge_stderr = true) {
  const std::string cmd = std::string(PAIRABLE_CLI_PATH) + " " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  CliResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, n);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}
