#include "limbs/render.hpp"

#include <cmath>
#include <fstream>
#include <thread>

namespace limbs {

namespace {

struct Rgb {
    std::uint8_t r, g, b;
};

// smooth exterior shading from the escape count; interior flat
Rgb shade(double nu, bool escaped) {
    if (!escaped) return {24, 24, 40};
    double t = std::log1p(nu) * 0.55;
    auto chan = [&](double phase) {
        double v = 0.5 + 0.5 * std::cos(t + phase);
        return (std::uint8_t)std::lround(255.0 * v);
    };
    return {chan(0.0), chan(0.9), chan(1.8)};
}

template <typename F>
void render_rows(Image& img, int threads, F&& pixel) {
    int n = threads > 0 ? threads : (int)std::thread::hardware_concurrency();
    if (n <= 0) n = 1;
    auto task = [&](int t0) {
        for (int y = t0; y < img.height; y += n)
            for (int x = 0; x < img.width; ++x) {
                Rgb c = pixel(x, y);
                auto* p = img.at(x, y);
                p[0] = c.r;
                p[1] = c.g;
                p[2] = c.b;
            }
    };
    if (n == 1) {
        task(0);
        return;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < n; ++t) pool.emplace_back(task, t);
    for (auto& th : pool) th.join();
}

Complex pixel_point(const Window& w, int width, int height, int x, int y) {
    double hw = w.half_width;
    double hh = hw * height / width;
    double re = w.center.real() - hw + 2.0 * hw * (x + 0.5) / width;
    double im = w.center.imag() + hh - 2.0 * hh * (y + 0.5) / height;
    return {re, im};
}

void draw_overlays(Image& img, const Window& w, const std::vector<RayTrace>& overlays) {
    static const Rgb palette[6] = {{255, 255, 255}, {255, 210, 80}, {120, 255, 120},
                                   {255, 120, 120}, {120, 180, 255}, {230, 120, 255}};
    double hw = w.half_width;
    double hh = hw * img.height / img.width;
    auto to_px = [&](Complex z, double& fx, double& fy) {
        fx = (z.real() - (w.center.real() - hw)) / (2 * hw) * img.width - 0.5;
        fy = ((w.center.imag() + hh) - z.imag()) / (2 * hh) * img.height - 0.5;
    };
    auto put = [&](int x, int y, Rgb c) {
        if (x < 0 || y < 0 || x >= img.width || y >= img.height) return;
        auto* p = img.at(x, y);
        p[0] = c.r;
        p[1] = c.g;
        p[2] = c.b;
    };
    for (std::size_t k = 0; k < overlays.size(); ++k) {
        Rgb c = palette[k % 6];
        const auto& pts = overlays[k].points;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            double x0, y0, x1, y1;
            to_px(pts[i].second, x0, y0);
            to_px(pts[i + 1].second, x1, y1);
            int steps = (int)std::ceil(std::max(std::abs(x1 - x0), std::abs(y1 - y0))) + 1;
            for (int sgm = 0; sgm <= steps; ++sgm) {
                double u = (double)sgm / steps;
                put((int)std::lround(x0 + (x1 - x0) * u), (int)std::lround(y0 + (y1 - y0) * u), c);
            }
        }
    }
}

} // namespace

Image render_julia(const CubicMap& P, const Window& w, int width, int height,
                   const std::vector<RayTrace>& overlays, const RenderOptions& opt) {
    Image img;
    img.width = width;
    img.height = height;
    img.pixels.assign((std::size_t)3 * width * height, 0);
    const double r2 = opt.escape_radius * opt.escape_radius;
    render_rows(img, opt.threads, [&](int x, int y) {
        Complex z = pixel_point(w, width, height, x, y);
        int n = 0;
        bool escaped = false;
        for (; n < opt.max_iter; ++n) {
            if (std::norm(z) > r2) {
                escaped = true;
                break;
            }
            z = eval(P, z);
        }
        double nu = n;
        if (escaped)
            nu = n - std::log(std::log(std::abs(z)) / std::log(opt.escape_radius)) / std::log(3.0);
        return shade(nu, escaped);
    });
    draw_overlays(img, w, overlays);
    return img;
}

Image render_param_lemon(const Window& w, int width, int height,
                         const std::vector<RayTrace>& overlays, const RenderOptions& opt) {
    Image img;
    img.width = width;
    img.height = height;
    img.pixels.assign((std::size_t)3 * width * height, 0);
    const double r2 = opt.escape_radius * opt.escape_radius;
    render_rows(img, opt.threads, [&](int x, int y) {
        Complex a = pixel_point(w, width, height, x, y);
        CubicMap P{a, {0.0, 0.0}};
        Complex z = P.omega2();
        int n = 0;
        bool escaped = false;
        for (; n < opt.max_iter; ++n) {
            if (std::norm(z) > r2) {
                escaped = true;
                break;
            }
            z = eval(P, z);
        }
        double nu = n;
        if (escaped)
            nu = n - std::log(std::log(std::abs(z)) / std::log(opt.escape_radius)) / std::log(3.0);
        Rgb c = shade(nu, escaped);
        if (!escaped) c = {240, 236, 160};  // connectedness locus
        return c;
    });
    draw_overlays(img, w, overlays);
    return img;
}

void write_ppm(const Image& img, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("write_ppm: cannot open " + path);
    f << "P6\n" << img.width << " " << img.height << "\n255\n";
    f.write((const char*)img.pixels.data(), (std::streamsize)img.pixels.size());
    if (!f) throw Error("write_ppm: write failed");
}

Image read_ppm(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("read_ppm: cannot open " + path);
    std::string magic;
    f >> magic;
    if (magic != "P6") throw Error("read_ppm: not a P6 file");
    int w, h, maxv;
    f >> w >> h >> maxv;
    f.get();
    Image img;
    img.width = w;
    img.height = h;
    img.pixels.resize((std::size_t)3 * w * h);
    f.read((char*)img.pixels.data(), (std::streamsize)img.pixels.size());
    if (!f) throw Error("read_ppm: truncated file");
    return img;
}

} // namespace limbs
