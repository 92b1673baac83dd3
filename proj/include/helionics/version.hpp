#pragma once

namespace helionics {

inline constexpr const char* kVersion = "0.1.0";

} // namespace helionics
