#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cylflow {

/// FNV-1a 64-bit content hash, reported as 16 hex digits.  Used for the run
/// manifest and the constants-file checksum (integrity, not security).
std::uint64_t fnv1a64(std::string_view data);
std::string fnv1a64_hex(std::string_view data);

/// Fixed 17-significant-digit formatting: lossless for 64-bit reals.
std::string format_real(double v);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

std::string hash_file(const std::string& path);

/// Whitespace-separated k x k matrix, one row per line.
std::vector<std::vector<double>> read_matrix_file(const std::string& path);

}  // namespace cylflow
