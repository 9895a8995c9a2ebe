#include "forge/core/data_dir.hpp"

#include <cstdlib>
#include <filesystem>

#include "forge/core/error.hpp"

#ifndef FORGE_DEFAULT_DATA_DIR
#define FORGE_DEFAULT_DATA_DIR ""
#endif

namespace forge {

namespace {
std::string g_override;
} // namespace

void set_data_dir(const std::string& dir) { g_override = dir; }

std::string data_dir() {
    if (!g_override.empty()) return g_override;
    if (const char* env = std::getenv("FORGE_DATA_DIR"); env && env[0]) return env;
    std::string def = FORGE_DEFAULT_DATA_DIR;
    if (!def.empty() && std::filesystem::exists(def)) return def;
    // fall back to ./data next to the current working directory
    if (std::filesystem::exists("data")) return "data";
    throw Error("bundled data directory not found; set FORGE_DATA_DIR", ErrorCode::config);
}

std::string data_path(const std::string& relative) {
    return (std::filesystem::path(data_dir()) / relative).string();
}

} // namespace forge
