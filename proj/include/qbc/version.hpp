#pragma once

namespace qbc {

inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace qbc
