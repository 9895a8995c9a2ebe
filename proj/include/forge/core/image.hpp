#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "forge/core/error.hpp"

namespace forge {

// Image tensor convention used everywhere: height x width x channel,
// row-major, float values in [0,1].
struct Image {
    int h = 0;
    int w = 0;
    int c = 0;
    std::vector<float> data;

    Image() = default;
    Image(int h_, int w_, int c_, float fill = 0.0f)
        : h(h_), w(w_), c(c_), data(static_cast<size_t>(h_) * w_ * c_, fill) {}

    size_t size() const { return data.size(); }

    float& at(int y, int x, int ch) {
        return data[(static_cast<size_t>(y) * w + x) * c + ch];
    }
    float at(int y, int x, int ch) const {
        return data[(static_cast<size_t>(y) * w + x) * c + ch];
    }

    bool same_shape(const Image& o) const { return h == o.h && w == o.w && c == o.c; }
};

void assert_unit_range(const Image& img, const char* what);

Image clamp01(Image img);

// Bilinear resize; differentiable counterpart lives in the embedding backends.
Image resize_bilinear(const Image& img, int out_h, int out_w);

// Luminance (BT.601) grayscale; single-channel output.
Image to_gray(const Image& img);

float max_abs_diff(const Image& a, const Image& b);

} // namespace forge
