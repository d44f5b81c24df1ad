#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "mmod/errors.hpp"
#include "mmod/geometry.hpp"

namespace mmod {

/// Row-major grayscale raster with real intensities in [0, 255].
struct GrayImage {
    std::int64_t width = 0;
    std::int64_t height = 0;
    std::vector<double> pixels;

    GrayImage() = default;
    GrayImage(std::int64_t w, std::int64_t h, double fill = 0.0)
        : width(w), height(h), pixels(static_cast<std::size_t>(w * h), fill) {}

    double& at(std::int64_t x, std::int64_t y) { return pixels[static_cast<std::size_t>(y * width + x)]; }
    double at(std::int64_t x, std::int64_t y) const { return pixels[static_cast<std::size_t>(y * width + x)]; }

    /// Clamped read; used wherever a border pixel must be replicated.
    double at_clamped(std::int64_t x, std::int64_t y) const {
        x = std::clamp<std::int64_t>(x, 0, width - 1);
        y = std::clamp<std::int64_t>(y, 0, height - 1);
        return at(x, y);
    }

    std::int64_t pixel_count() const { return width * height; }
    bool empty() const { return width <= 0 || height <= 0; }
};

namespace detail {
// lerp keeps constant inputs exactly constant, unlike the weighted-sum form.
inline double lerp(double a, double b, double t) { return a + t * (b - a); }
}  // namespace detail

/// Bilinear resample to new_w x new_h with center-aligned sample positions.
inline GrayImage bilinear_resize(const GrayImage& src, std::int64_t new_w, std::int64_t new_h) {
    if (src.empty()) throw ConfigError("bilinear_resize: empty source image");
    if (new_w <= 0 || new_h <= 0) throw ConfigError("bilinear_resize: nonpositive target size");
    GrayImage dst(new_w, new_h);
    const double sx = static_cast<double>(src.width) / static_cast<double>(new_w);
    const double sy = static_cast<double>(src.height) / static_cast<double>(new_h);
    for (std::int64_t y = 0; y < new_h; ++y) {
        double fy = (static_cast<double>(y) + 0.5) * sy - 0.5;
        fy = std::clamp(fy, 0.0, static_cast<double>(src.height - 1));
        const auto y0 = static_cast<std::int64_t>(fy);
        const std::int64_t y1 = std::min(y0 + 1, src.height - 1);
        const double ty = fy - static_cast<double>(y0);
        for (std::int64_t x = 0; x < new_w; ++x) {
            double fx = (static_cast<double>(x) + 0.5) * sx - 0.5;
            fx = std::clamp(fx, 0.0, static_cast<double>(src.width - 1));
            const auto x0 = static_cast<std::int64_t>(fx);
            const std::int64_t x1 = std::min(x0 + 1, src.width - 1);
            const double tx = fx - static_cast<double>(x0);
            const double top = detail::lerp(src.at(x0, y0), src.at(x1, y0), tx);
            const double bot = detail::lerp(src.at(x0, y1), src.at(x1, y1), tx);
            dst.at(x, y) = detail::lerp(top, bot, ty);
        }
    }
    return dst;
}

inline GrayImage mirror_horizontal(const GrayImage& src) {
    GrayImage dst(src.width, src.height);
    for (std::int64_t y = 0; y < src.height; ++y)
        for (std::int64_t x = 0; x < src.width; ++x)
            dst.at(x, y) = src.at(src.width - 1 - x, y);
    return dst;
}

/// Mirror a box along with its image: left' = image_width - left - width.
inline Rect mirror_rect(const Rect& r, std::int64_t image_width) {
    return {image_width - r.left - r.width, r.top, r.width, r.height};
}

struct PyramidLevel {
    GrayImage image;
    double to_original;  // multiply level coordinates by this to reach input coordinates
};

struct PyramidParams {
    int downsample_num = 4;
    int downsample_den = 5;
    std::int64_t min_pyramid_pixels = 17000;
    int upsample_factor = 1;  // 1 or 2
};

/// Image pyramid: level 0 is the (optionally 2x upsampled) input, each
/// later level shrinks both dimensions by downsample_num/downsample_den
/// (floor) until the next level would fall under min_pyramid_pixels.
/// Level 0 is always present.
struct ImagePyramid {
    std::vector<PyramidLevel> levels;

    static ImagePyramid build(const GrayImage& img, const PyramidParams& p) {
        if (img.empty()) throw ConfigError("ImagePyramid: empty input image");
        if (p.upsample_factor != 1 && p.upsample_factor != 2)
            throw ConfigError("ImagePyramid: upsample_factor must be 1 or 2");
        if (p.downsample_num <= 0 || p.downsample_den <= p.downsample_num)
            throw ConfigError("ImagePyramid: downsample ratio must be in (0, 1)");

        ImagePyramid pyr;
        GrayImage level0 = (p.upsample_factor == 1)
                               ? img
                               : bilinear_resize(img, img.width * 2, img.height * 2);
        const double step = static_cast<double>(p.downsample_den) / static_cast<double>(p.downsample_num);
        double to_orig = 1.0 / static_cast<double>(p.upsample_factor);
        pyr.levels.push_back({std::move(level0), to_orig});
        for (;;) {
            const GrayImage& prev = pyr.levels.back().image;
            const std::int64_t nw = prev.width * p.downsample_num / p.downsample_den;
            const std::int64_t nh = prev.height * p.downsample_num / p.downsample_den;
            if (nw <= 0 || nh <= 0 || nw * nh < p.min_pyramid_pixels) break;
            to_orig *= step;
            pyr.levels.push_back({bilinear_resize(prev, nw, nh), to_orig});
        }
        return pyr;
    }
};

/// Map a level-space rectangle back to input-image coordinates by scaling
/// position and size with the level's factor, rounding to nearest.
inline Rect level_rect_to_original(const Rect& r, double to_original) {
    const auto rnd = [to_original](std::int64_t v) {
        return static_cast<std::int64_t>(std::llround(static_cast<double>(v) * to_original));
    };
    Rect out{rnd(r.left), rnd(r.top), rnd(r.width), rnd(r.height)};
    out.width = std::max<std::int64_t>(out.width, 1);
    out.height = std::max<std::int64_t>(out.height, 1);
    return out;
}

}  // namespace mmod
