#include "haarlab/config.hpp"

#include <cstdlib>
#include <string>

namespace haarlab {

namespace {

int read_max_level() {
  const char* env = std::getenv("HAARLAB_MAX_LEVEL");
  if (env == nullptr) return kDefaultMaxLevel;
  try {
    const int v = std::stoi(std::string(env));
    if (v >= 1 && v <= kHardMaxLevel) return v;
  } catch (...) {
  }
  return kDefaultMaxLevel;
}

}  // namespace

int max_level() {
  static const int value = read_max_level();
  return value;
}

}  // namespace haarlab
