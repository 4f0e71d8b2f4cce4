#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace dlv {

// An enumeration would exceed the per-call size guard.  Callers that only
// need a verdict should switch to the decision-level operations, which never
// enumerate the group.
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input text could not be parsed; `position` is a 0-based character offset
// into the offending string.
struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

// A checked internal identity failed.  This is a defect report, not a user
// error: it means one of the closed forms disagreed with its own
// consistency condition.
struct DefectError : std::logic_error {
  using std::logic_error::logic_error;
};

// Hard cap on enumerated elements per call.  DLV_GUARD_SCALE (integer,
// clamped to [1,10]) scales the default.
inline std::uint64_t size_guard(std::uint64_t base = 1'000'000) {
  static const std::uint64_t scale = [] {
    const char* env = std::getenv("DLV_GUARD_SCALE");
    if (!env) return std::uint64_t{1};
    long v = std::strtol(env, nullptr, 10);
    if (v < 1) v = 1;
    if (v > 10) v = 10;
    return static_cast<std::uint64_t>(v);
  }();
  return base * scale;
}

inline void check_guard(std::uint64_t n, const std::string& what,
                        std::uint64_t base = 1'000'000) {
  if (n > size_guard(base))
    throw GuardError(what + " would enumerate " + std::to_string(n) +
                     " elements, above the size guard of " +
                     std::to_string(size_guard(base)) +
                     "; use the decision-level operations instead");
}

}  // namespace dlv
