#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "jamcov/scenario.hpp"

namespace jamcov {

// Reads and fully validates a scenario file (JSON, // comments allowed).
// Unknown keys are rejected; missing keys take the documented Urban
// defaults. SNR values may be declared in dB via "snr_unit": "db"; they are
// converted to linear ratios here and nowhere else.
Scenario load_scenario(const std::filesystem::path& path);
Scenario parse_scenario(const std::string& text);

// Canonical serialization: sorted keys, linear units, round-trip floats.
// Loading the canonical form reproduces the same scenario and hash.
std::string canonical_json(const Scenario& scenario);

std::uint64_t scenario_hash(const Scenario& scenario);
std::string scenario_hash_hex(const Scenario& scenario);

}  // namespace jamcov
