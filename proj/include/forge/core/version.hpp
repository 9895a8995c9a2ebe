#pragma once

#define FORGE_VERSION "0.1.0"

namespace forge {
inline const char* version() { return FORGE_VERSION; }
} // namespace forge
