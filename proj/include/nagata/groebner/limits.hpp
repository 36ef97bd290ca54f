#pragma once

#include <chrono>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace nagata {

/// Caps on work per step. Zero means unlimited.
struct Limits {
  std::size_t max_pairs = 0;
  std::size_t max_entries = 0;
  double max_seconds = 0;
};

class ResourceExceeded : public std::runtime_error {
 public:
  explicit ResourceExceeded(const std::string& what) : std::runtime_error(what) {}
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }
  void check(const Limits& limits, const char* step) const {
    if (limits.max_seconds > 0 && seconds() > limits.max_seconds)
      throw ResourceExceeded(std::string(step) + ": time limit of " + std::to_string(limits.max_seconds) +
                             " s exceeded");
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace nagata
