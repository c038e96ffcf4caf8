#pragma once

namespace quatcat {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace quatcat
