#pragma once

#include <string>

namespace forge {

// Bundled-data lookup order: explicit override, FORGE_DATA_DIR env var,
// compiled-in source-tree default.
void set_data_dir(const std::string& dir);
std::string data_dir();
std::string data_path(const std::string& relative);

} // namespace forge
