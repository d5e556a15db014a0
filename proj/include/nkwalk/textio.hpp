#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nkwalk {

// Shortest decimal form that parses back to the identical double.
std::string format_double(double value);

// Strict full-string parses; throw IoError with `context` on failure.
double parse_double(std::string_view text, const std::string& context);
std::uint64_t parse_u64(std::string_view text, const std::string& context);
std::uint32_t parse_u32(std::string_view text, const std::string& context);

std::vector<std::string_view> split(std::string_view text, char sep);
std::string_view trim(std::string_view text);

// FNV-1a 64-bit over raw bytes; used for output manifests.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace nkwalk
