#pragma once

namespace tsl {
inline constexpr const char* kSchemaVersion = "tsl-1";
}
