#pragma once

namespace msseg {
inline constexpr const char* kVersion = "1.0.0";
}
