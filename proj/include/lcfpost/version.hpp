#pragma once

namespace lcfpost {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace lcfpost
