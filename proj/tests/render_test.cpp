#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "limbs/render.hpp"

using namespace limbs;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

} // namespace

TEST_CASE("ppm header bytes") {
    Image img;
    img.width = 1;
    img.height = 1;
    img.pixels = {255, 255, 255};
    write_ppm(img, "test_1x1.ppm");
    std::string bytes = slurp("test_1x1.ppm");
    CHECK(bytes == std::string("P6\n1 1\n255\n") + "\xff\xff\xff");

    Image img2;
    img2.width = 2;
    img2.height = 1;
    img2.pixels = {1, 2, 3, 4, 5, 6};
    write_ppm(img2, "test_2x1.ppm");
    std::string b2 = slurp("test_2x1.ppm");
    CHECK(b2.size() == std::string("P6\n2 1\n255\n").size() + 6);

    std::remove("test_1x1.ppm");
    std::remove("test_2x1.ppm");
}

TEST_CASE("ppm round trip") {
    CubicMap z3{{0, 0}, {0, 0}};
    Image img = render_julia(z3, Window{{0, 0}, 1.5}, 64, 48);
    write_ppm(img, "test_rt.ppm");
    Image back = read_ppm("test_rt.ppm");
    CHECK(back.width == img.width);
    CHECK(back.height == img.height);
    CHECK(back.pixels == img.pixels);
    std::remove("test_rt.ppm");
}

TEST_CASE("unit circle boundary of z^3") {
    CubicMap z3{{0, 0}, {0, 0}};
    const int n = 200;
    Image img = render_julia(z3, Window{{0, 0}, 1.5}, n, n);
    // walk the middle row: the interior color must start within one pixel of
    // |z| = 1
    int first_interior = -1, last_interior = -1;
    for (int x = 0; x < n; ++x) {
        const auto* p = img.at(x, n / 2);
        bool interior = p[0] == 24 && p[1] == 24 && p[2] == 40;
        if (interior && first_interior < 0) first_interior = x;
        if (interior) last_interior = x;
    }
    double px = 3.0 / n;  // pixel size
    double left = -1.5 + (first_interior + 0.5) * px;
    double right = -1.5 + (last_interior + 0.5) * px;
    CHECK(std::abs(left + 1.0) < 2.5 * px);
    CHECK(std::abs(right - 1.0) < 2.5 * px);
}

TEST_CASE("render determinism across thread counts") {
    CubicMap P{{0.5008698635349041, -0.2596779506723834}, {0, 0}};
    std::vector<RayTrace> overlays{trace_ray(P, Angle(1, 4), 1e-5),
                                   trace_ray(P, Angle(5, 8), 1e-5)};
    RenderOptions one;
    one.threads = 1;
    RenderOptions many;
    many.threads = 5;
    Image a = render_julia(P, Window{{0, 0}, 1.8}, 160, 120, overlays, one);
    Image b = render_julia(P, Window{{0, 0}, 1.8}, 160, 120, overlays, many);
    CHECK(a.pixels == b.pixels);

    Image c = render_param_lemon(Window{{0, 0}, 1.2}, 120, 90, {}, one);
    Image d = render_param_lemon(Window{{0, 0}, 1.2}, 120, 90, {}, many);
    CHECK(c.pixels == d.pixels);
}

TEST_CASE("symmetries of the standard pictures") {
    // z^3: the julia set is invariant under 120-degree rotation; compare the
    // escape classification at symmetric sample points
    CubicMap z3{{0, 0}, {0, 0}};
    const int n = 121;
    Image img = render_julia(z3, Window{{0, 0}, 1.5}, n, n);
    auto interior = [&](int x, int y) {
        const auto* p = img.at(x, y);
        return p[0] == 24 && p[1] == 24 && p[2] == 40;
    };
    int mismatches = 0, total = 0;
    for (int y = 10; y < n - 10; y += 3)
        for (int x = 10; x < n - 10; x += 3) {
            double re = -1.5 + 3.0 * (x + 0.5) / n;
            double im = 1.5 - 3.0 * (y + 0.5) / n;
            Complex z{re, im};
            Complex r = z * std::polar(1.0, 2.0943951023931953);
            int xr = (int)std::lround((r.real() + 1.5) / 3.0 * n - 0.5);
            int yr = (int)std::lround((1.5 - r.imag()) / 3.0 * n - 0.5);
            if (xr < 0 || yr < 0 || xr >= n || yr >= n) continue;
            ++total;
            if (interior(x, y) != interior(xr, yr)) ++mismatches;
        }
    CHECK(total > 500);
    CHECK(mismatches <= total / 50);  // grid alignment only

    // lemon parameter plane: exact 180-degree symmetry pixel(a) = pixel(-a)
    Image par = render_param_lemon(Window{{0, 0}, 1.2}, 90, 64);
    for (int y = 0; y < 64; ++y)
        for (int x = 0; x < 90; ++x) {
            const auto* p = par.at(x, y);
            const auto* q = par.at(90 - 1 - x, 64 - 1 - y);
            CHECK(p[0] == q[0]);
            CHECK(p[1] == q[1]);
            CHECK(p[2] == q[2]);
        }
}

TEST_CASE("lemon connectedness locus is visible and centered") {
    Image par = render_param_lemon(Window{{0, 0}, 1.2}, 101, 101);
    // the center a=0 must be in the locus color and connected to a
    // neighborhood
    auto locus = [&](int x, int y) {
        const auto* p = par.at(x, y);
        return p[0] == 240 && p[1] == 236 && p[2] == 160;
    };
    CHECK(locus(50, 50));
    CHECK(locus(50, 40));
    CHECK(locus(40, 50));
    // corners escape
    CHECK_FALSE(locus(0, 0));
    CHECK_FALSE(locus(100, 100));
}
