#pragma once

#include <cstdint>
#include <string_view>

#include "menon/int128.hpp"

namespace menon {

inline constexpr std::uint64_t kDefaultIterationCap = 10'000'000;
inline constexpr const char* kIterationCapEnvVar = "MENON_MAX_ITERATIONS";

// Upper bound on loop iterations for a single brute-force evaluation.
struct IterationCap {
  std::uint64_t max_iterations = kDefaultIterationCap;
};

// Reads MENON_MAX_ITERATIONS when set, otherwise returns the default.
// Throws DomainError when the variable is set but not a positive integer.
IterationCap iteration_cap_from_env();

// Throws ResourceError naming `what` when `iterations` exceeds the cap.
void require_within_cap(Natural iterations, IterationCap cap,
                        std::string_view what);

}  // namespace menon
