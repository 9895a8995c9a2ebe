#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace forge {

std::string sha256_hex(const void* data, size_t len);
std::string sha256_hex(const std::string& s);
std::string sha256_file_hex(const std::string& path);

} // namespace forge
