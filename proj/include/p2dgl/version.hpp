#pragma once

namespace p2dgl {

inline constexpr const char* kVersion = "0.1.0";

} // namespace p2dgl
