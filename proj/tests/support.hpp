#pragma once

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "sygus/parser.hpp"
#include "sygus/smt.hpp"

#ifndef SYGUS_FIXTURE_DIR
#error "the build must define SYGUS_FIXTURE_DIR"
#endif

namespace testutil {

inline std::filesystem::path fixture_dir() {
  return std::filesystem::path(SYGUS_FIXTURE_DIR);
}

inline std::string benchmark_path(const std::string& name) {
  return (fixture_dir() / "benchmarks" / (name + ".sl")).string();
}

inline std::string solution_path(const std::string& bench, const std::string& variant) {
  return (fixture_dir() / "solutions" / bench / (variant + ".sol")).string();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

// One backend session per test binary; queries are serial within a binary.
inline sygus::SmtSession& session() {
  static sygus::SmtSession s(sygus::SmtConfig{sygus::resolve_smt_command(), 60, ""});
  return s;
}

// A fresh scratch directory under the system temp root.
inline std::filesystem::path fresh_dir(const std::string& tag) {
  auto dir = std::filesystem::temp_directory_path() /
             ("sygus_" + tag + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

} // namespace testutil
