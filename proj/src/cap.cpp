#include "menon/cap.hpp"

#include <cstdlib>
#include <string>

namespace menon {

IterationCap iteration_cap_from_env() {
  const char* raw = std::getenv(kIterationCapEnvVar);
  if (raw == nullptr || *raw == '\0') return {};
  const Natural value = parse_natural(raw);
  if (value == 0 || value > ~std::uint64_t{0}) {
    throw DomainError(std::string(kIterationCapEnvVar) +
                      " must be a positive 64-bit integer");
  }
  return {static_cast<std::uint64_t>(value)};
}

void require_within_cap(Natural iterations, IterationCap cap,
                        std::string_view what) {
  if (iterations > cap.max_iterations) {
    throw ResourceError(std::string(what) + " needs " + to_string(iterations) +
                        " iterations, above the cap of " +
                        std::to_string(cap.max_iterations));
  }
}

}  // namespace menon
