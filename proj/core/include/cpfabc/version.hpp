#pragma once

namespace cpfabc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace cpfabc
