#pragma once

#include <stdexcept>
#include <string>

namespace niche {

inline constexpr const char* kToolName = "appniche";
inline constexpr const char* kToolVersion = "0.1.0";

// Error taxonomy maps onto CLI exit codes: validation 2, data 3, numeric 4.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Warnings go to stderr only; artifacts must stay byte-deterministic.
void log_warn(const std::string& msg);

// splitmix64, used to derive per-restart / per-k sub-seeds from a master seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace niche
