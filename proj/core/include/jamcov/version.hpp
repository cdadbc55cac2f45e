#pragma once

namespace jamcov {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace jamcov
