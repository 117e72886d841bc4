#pragma once

#include <cstdlib>
#include <filesystem>

namespace sgn::test {

inline std::filesystem::path fixture_dir() { return SGN_TEST_FIXTURES; }

/// $SGN_DATA_DIR when set, otherwise the repository's data directory.
inline std::filesystem::path data_root() {
  if (const char* env = std::getenv("SGN_DATA_DIR"); env && *env) return env;
  return SGN_DATA_ROOT;
}

}  // namespace sgn::test
