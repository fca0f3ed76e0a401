#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "limbs/cubic.hpp"
#include "limbs/ray.hpp"

namespace limbs {

struct Image {
    int width = 0, height = 0;
    std::vector<std::uint8_t> pixels;  // RGB, row-major, top row first

    std::uint8_t* at(int x, int y) { return &pixels[3 * ((std::size_t)y * width + x)]; }
    const std::uint8_t* at(int x, int y) const {
        return &pixels[3 * ((std::size_t)y * width + x)];
    }
};

struct Window {
    Complex center{0.0, 0.0};
    double half_width = 1.5;  // vertical extent follows the aspect ratio
};

struct RenderOptions {
    int max_iter = 512;
    double escape_radius = 1e6;
    int threads = 0;  // 0: hardware concurrency
};

/// Escape-time image of the dynamical plane with smoothed exterior shading;
/// overlay polylines are rasterized last. Byte-identical output regardless
/// of the thread count.
Image render_julia(const CubicMap& P, const Window& w, int width, int height,
                   const std::vector<RayTrace>& overlays = {}, const RenderOptions& opt = {});

/// Parameter plane of the a -> z^3 + 3az^2 family: escape time of omega_2.
Image render_param_lemon(const Window& w, int width, int height,
                         const std::vector<RayTrace>& overlays = {},
                         const RenderOptions& opt = {});

/// Binary PPM (P6), exact header "P6\n<w> <h>\n255\n".
void write_ppm(const Image& img, const std::string& path);
Image read_ppm(const std::string& path);

} // namespace limbs
