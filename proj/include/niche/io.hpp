#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace niche {

// Write-then-rename so partially written artifacts never land under out/.
void write_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);
bool file_exists(const std::string& path);
std::vector<std::string> read_lines(const std::string& path);

std::uint64_t fnv1a64(const std::string& bytes);
std::string hex64(std::uint64_t v);

// RFC-4180-ish quoting, only when needed.
std::string csv_escape(const std::string& field);

// Shortest fixed-format float used in CSV artifacts (up to 12 significant
// digits, trailing zeros trimmed); deterministic across runs.
std::string format_double(double v);

}  // namespace niche
