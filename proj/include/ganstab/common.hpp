#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ganstab {

inline constexpr const char* kVersion = "ganstab 0.1.0";

// Error hierarchy. The CLI maps these onto exit codes:
// config/schema/usage -> 2, numeric failures -> 3, internal invariants -> 4.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ShapeError : Error {
  using Error::Error;
};
struct StateError : Error {
  using Error::Error;
};
struct ArgumentError : Error {
  using Error::Error;
};
struct SchemaError : Error {
  using Error::Error;
};
struct CsvParseError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};
struct NumericError : Error {
  using Error::Error;
};
struct BudgetError : Error {
  using Error::Error;
};

// FNV-1a, used for config hashes and for deriving named sub-seeds.
inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace ganstab
