#include "forge/core/image.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace forge {

void assert_unit_range(const Image& img, const char* what) {
    for (float v : img.data) {
        if (!(v >= 0.0f && v <= 1.0f)) {
            throw Error(std::string(what) + ": pixel value " + std::to_string(v) +
                            " outside [0,1]",
                        ErrorCode::invalid_argument);
        }
    }
}

Image clamp01(Image img) {
    for (float& v : img.data) v = std::clamp(v, 0.0f, 1.0f);
    return img;
}

Image resize_bilinear(const Image& img, int out_h, int out_w) {
    require(img.h > 0 && img.w > 0, "resize: empty image");
    if (img.h == out_h && img.w == out_w) return img;
    Image out(out_h, out_w, img.c);
    const float sy = static_cast<float>(img.h) / out_h;
    const float sx = static_cast<float>(img.w) / out_w;
    for (int y = 0; y < out_h; ++y) {
        float fy = (y + 0.5f) * sy - 0.5f;
        int y0 = static_cast<int>(std::floor(fy));
        float wy = fy - y0;
        int y0c = std::clamp(y0, 0, img.h - 1);
        int y1c = std::clamp(y0 + 1, 0, img.h - 1);
        for (int x = 0; x < out_w; ++x) {
            float fx = (x + 0.5f) * sx - 0.5f;
            int x0 = static_cast<int>(std::floor(fx));
            float wx = fx - x0;
            int x0c = std::clamp(x0, 0, img.w - 1);
            int x1c = std::clamp(x0 + 1, 0, img.w - 1);
            for (int ch = 0; ch < img.c; ++ch) {
                float v00 = img.at(y0c, x0c, ch);
                float v01 = img.at(y0c, x1c, ch);
                float v10 = img.at(y1c, x0c, ch);
                float v11 = img.at(y1c, x1c, ch);
                out.at(y, x, ch) = (1 - wy) * ((1 - wx) * v00 + wx * v01) +
                                   wy * ((1 - wx) * v10 + wx * v11);
            }
        }
    }
    return out;
}

Image to_gray(const Image& img) {
    if (img.c == 1) return img;
    require(img.c == 3, "to_gray: expected 1 or 3 channels");
    Image out(img.h, img.w, 1);
    for (int y = 0; y < img.h; ++y)
        for (int x = 0; x < img.w; ++x)
            out.at(y, x, 0) = 0.299f * img.at(y, x, 0) + 0.587f * img.at(y, x, 1) +
                              0.114f * img.at(y, x, 2);
    return out;
}

float max_abs_diff(const Image& a, const Image& b) {
    require(a.same_shape(b), "max_abs_diff: shape mismatch");
    float m = 0.0f;
    for (size_t i = 0; i < a.data.size(); ++i)
        m = std::max(m, std::abs(a.data[i] - b.data[i]));
    return m;
}

} // namespace forge
