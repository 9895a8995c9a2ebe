#pragma once

#include <string>

#include "forge/core/image.hpp"

namespace forge {

// 8-bit RGB PNG round-trip. Reading converts gray/RGBA inputs to 3-channel
// float in [0,1]; writing quantizes with round-to-nearest (max error 1/510).
Image read_png(const std::string& path);
void write_png(const std::string& path, const Image& img);

// Raw float sidecar preserving exact values (little-endian f32, h/w/c header).
void write_f32(const std::string& path, const Image& img);
Image read_f32(const std::string& path);

} // namespace forge
