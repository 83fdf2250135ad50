#pragma once

#include <stdexcept>
#include <string>

namespace tropgr {

// Library-wide failure type. Messages carry a short machine-readable
// prefix (e.g. "indeterminate-valuation:") followed by detail.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

inline void require(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
}

}  // namespace tropgr
