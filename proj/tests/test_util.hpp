#pragma once

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace testutil {

inline std::string data_dir() {
  const char *env = std::getenv("GMINE_DATA");
  return env ? env : "data";
}

inline std::string cli_path() {
  const char *env = std::getenv("GMINE_CLI");
  return env ? env : "build/tools/generics-miner";
}

inline std::string fixture(const std::string &name) {
  return data_dir() + "/fixtures/" + name;
}

// Fresh scratch directory per test binary run.
class TempDir {
 public:
  explicit TempDir(const std::string &tag) {
    std::mt19937_64 rng(std::random_device{}());
    path_ = std::filesystem::temp_directory_path() /
            ("gmine_" + tag + "_" + std::to_string(rng()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  std::string str() const { return path_.string(); }
  std::string file(const std::string &name) const {
    return (path_ / name).string();
  }

 private:
  std::filesystem::path path_;
};

inline std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline void write_file(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

inline CliResult run_cli(const std::string &args) {
  std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  CliResult r;
  FILE *pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace testutil
