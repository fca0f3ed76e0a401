#include "limbs/cubic.hpp"

#include <cmath>

namespace limbs {

Complex iterate(const CubicMap& P, Complex z, int n) {
    for (int i = 0; i < n; ++i) z = eval(P, z);
    return z;
}

std::pair<Complex, Complex> iterate_with_derivative(const CubicMap& P, Complex z, int n) {
    Complex d{1.0, 0.0};
    for (int i = 0; i < n; ++i) {
        d *= eval_derivative(P, z);
        z = eval(P, z);
    }
    return {z, d};
}

double green(const CubicMap& P, Complex z, int max_iter) {
    // once |z| > 1e100 the relative truncation error is ~|3a/z|, far below
    // double precision after the 3^{-n} scaling
    double scale = 1.0;
    for (int n = 0; n < max_iter; ++n) {
        double m = std::abs(z);
        if (m > 1e100) return scale * std::log(m);
        z = eval(P, z);
        scale /= 3.0;
    }
    return 0.0;
}

PeriodicPoint find_periodic(const CubicMap& P, int q, Complex guess, double root_tol) {
    Complex z = guess;
    for (int it = 0; it < 80; ++it) {
        auto [v, d] = iterate_with_derivative(P, z, q);
        Complex f = v - z;
        Complex fp = d - 1.0;
        if (std::abs(fp) < 1e-300 || !std::isfinite(std::abs(fp)))
            throw NoConvergence("find_periodic: degenerate derivative");
        Complex dz = f / fp;
        z -= dz;
        if (std::abs(dz) < root_tol * (1.0 + std::abs(z))) {
            auto [v2, lam] = iterate_with_derivative(P, z, q);
            if (std::abs(v2 - z) > 1e-6 * (1.0 + std::abs(z)))
                throw NoConvergence("find_periodic: residual too large");
            return {z, lam, it + 1};
        }
    }
    throw NoConvergence("find_periodic: Newton did not converge");
}

std::vector<Normalization> to_normal_form(Complex c2, Complex c1, Complex c0) {
    // conjugate Q(z) = z^3 + c2 z^2 + c1 z + c0 by z -> z + h,
    // 3h^2 + 2 c2 h + c1 = 0
    Complex disc = c2 * c2 - 3.0 * c1;
    Complex root = std::sqrt(disc);
    std::vector<Complex> hs;
    hs.push_back((-c2 + root) / 3.0);
    if (std::abs(root) > 1e-14 * (1.0 + std::abs(c2))) hs.push_back((-c2 - root) / 3.0);
    std::vector<Normalization> out;
    for (Complex h : hs) {
        Normalization n;
        n.shift = h;
        n.map.a = (3.0 * h + c2) / 3.0;
        n.map.b = ((h + c2) * h + c1) * h + c0 - h;
        out.push_back(n);
    }
    return out;
}

} // namespace limbs
