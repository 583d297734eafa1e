#pragma once

namespace ccq {

inline constexpr const char* version = "0.1.0";

} // namespace ccq
