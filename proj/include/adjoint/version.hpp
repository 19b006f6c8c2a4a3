#pragma once

namespace adjoint {

inline constexpr const char* kVersion = "0.1.0";

} // namespace adjoint
