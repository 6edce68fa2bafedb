#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>

namespace olab {

// Thrown when an operation would need data outside the truncated window.
// Callers must either shrink the request or rebuild with a larger radius;
// results are never silently clipped.
struct window_error : std::runtime_error {
  explicit window_error(const std::string &what) : std::runtime_error(what) {}
};

// Thrown when a computation would exceed a configured size limit
// (group enumeration, transporter materialization, ...).
struct capacity_error : std::runtime_error {
  explicit capacity_error(const std::string &what) : std::runtime_error(what) {}
};

// Thrown on invalid parameters (bad degrees, malformed input files, ...).
struct config_error : std::runtime_error {
  explicit config_error(const std::string &what) : std::runtime_error(what) {}
};

struct limits {
  // Hard cap on full element enumeration (conjugacy classes, character
  // tables, brute-force cross-checks).  Overridable via OLAB_MAX_GROUP_ORDER.
  std::uint64_t max_enumerated_order = 200000;
  // Cap on explicitly materialized transporter element lists.
  std::uint64_t max_transporter_elements = 100000;
  // Cap on tuple-orbit sizes (safety net; legitimate orbits stay tiny).
  std::uint64_t max_tuple_orbit = 5000000;
  // Seed for the randomized pre-sift in stabilizer-chain construction.
  std::uint64_t rng_seed = 0x01ab5eed;

  static limits from_env() {
    limits l;
    if (const char *s = std::getenv("OLAB_MAX_GROUP_ORDER"))
      l.max_enumerated_order = std::strtoull(s, nullptr, 10);
    return l;
  }
};

inline limits &global_limits() {
  static limits l = limits::from_env();
  return l;
}

// Deterministic RNG used everywhere randomness speeds things up; results
// never depend on the draws (verification passes are deterministic).
using rng_t = std::mt19937_64;

} // namespace olab
