#pragma once

namespace gmine {

inline constexpr const char *kVersion = "0.1.0";

}  // namespace gmine
