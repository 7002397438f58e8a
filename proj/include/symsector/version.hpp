#pragma once

namespace symsector {

inline constexpr const char* kVersion = "0.1.0";

} // namespace symsector
