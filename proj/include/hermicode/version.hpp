#pragma once

namespace hermicode {

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace hermicode
