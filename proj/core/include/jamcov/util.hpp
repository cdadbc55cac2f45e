#pragma once

#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace jamcov {

inline constexpr double kPi = std::numbers::pi;

inline constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

// FNV-1a, used for scenario hashes and artifact digests.
std::uint64_t fnv1a64(std::string_view bytes);
std::string to_hex(std::uint64_t value);

// Shortest decimal representation that round-trips the double exactly.
std::string format_double(double value);

// Deterministic fixed-order pairwise reduction; more accurate than a plain
// left-to-right sum and independent of worker count by construction.
double pairwise_sum(std::span<const double> values);

}  // namespace jamcov
