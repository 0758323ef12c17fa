#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "reacproc/batch.hpp"

namespace reacproc::testing {

inline std::filesystem::path data_dir() { return REACPROC_DATA_DIR; }

/// The shipped dictionary and property tables, loaded once.
inline const Tables& shipped_tables() {
  static const Tables tables =
      load_tables(data_dir() / "dict-syn.txt", data_dir() / "particles.txt",
                  data_dir() / "leptons.txt");
  return tables;
}

inline Dictionary dictionary_from(const std::string& text) {
  std::istringstream in(text);
  return load_dictionary(in);
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::size_t count_lines(const std::filesystem::path& p) {
  const std::string text = read_file(p);
  std::size_t n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

inline void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << text;
}

/// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("reacproc-test-" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

// The reaction used throughout as the worked example.
inline constexpr const char* kWorkedExample =
    "E+ E- --> W- < QUARK QUARKBAR > W+ < TAU+ NUTAU + MU+ NUMU + E+ NUE > ;";
inline constexpr const char* kWorkedExampleLex =
    "e+ e- --> W+ < e+ nu(e) + mu+ nu(mu) + nu(tau) tau+ > W- < QUARK QUARKBAR > ;";
inline constexpr const char* kWorkedExampleDict =
    "e+ e- --> W+ < e+ nu(e) + mu+ nu(mu) + tau+ nu(tau) > W- < QUARK QUARKBAR > ;";

}  // namespace reacproc::testing
