#include "limbs/ray.hpp"

#include <cmath>

namespace limbs {

const char* ray_status_name(RayStatus s) {
    switch (s) {
        case RayStatus::Landed: return "landed";
        case RayStatus::MaxStepsReached: return "max-steps";
        case RayStatus::Broken: return "broken";
    }
    return "?";
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::CoLand: return "coland";
        case Verdict::Distinct: return "distinct";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// inverse Boettcher asymptotics: phi^{-1}(W) = W - a + a^2/W + O(W^{-2})
Complex far_field(const CubicMap& P, double S, double turn) {
    Complex W = std::exp(S) * Complex(std::cos(kTwoPi * turn), std::sin(kTwoPi * turn));
    return W - P.a + P.a * P.a / W;
}

} // namespace

RayTrace trace_ray(const CubicMap& P, const Angle& theta, double s_start, double s_end,
                   int steps_per_division) {
    RayOptions opt;
    opt.s_start = s_start;
    opt.steps_per_division = steps_per_division;
    return trace_ray(P, theta, s_end, opt);
}

RayTrace trace_ray(const CubicMap& P, const Angle& theta, double s_end, const RayOptions& opt) {
    RayTrace ray;
    ray.angle = theta;
    const int N = opt.steps_per_division;
    std::vector<double> turns{theta.to_double()};
    std::vector<Angle> angs{theta};

    Complex z{0.0, 0.0};
    const double log3 = std::log(3.0);
    for (long j = 0;; ++j) {
        if (j > opt.max_steps) {
            ray.status = RayStatus::MaxStepsReached;
            break;
        }
        double s = opt.s_start * std::exp(-(double)j / N * log3);
        bool last = false;
        if (s < s_end) {
            s = s_end;
            last = true;
        }
        int n = (int)(j / N);
        while ((int)angs.size() <= n) {
            angs.push_back(mul_map(3, angs.back()));
            turns.push_back(angs.back().to_double());
        }
        double S = s * std::pow(3.0, n);
        Complex w = far_field(P, S, turns[(std::size_t)n]);
        if (j == 0) {
            z = w;
        } else {
            bool converged = false;
            for (int it = 0; it < opt.max_newton; ++it) {
                auto [v, d] = iterate_with_derivative(P, z, n);
                if (!std::isfinite(std::abs(v)) || std::abs(d) < opt.derivative_floor) {
                    ray.status = RayStatus::Broken;
                    return ray;
                }
                Complex dz = (v - w) / d;
                z -= dz;
                if (std::abs(dz) < opt.newton_tol * (1.0 + std::abs(z))) {
                    converged = true;
                    break;
                }
            }
            if (!converged || !std::isfinite(std::abs(z))) {
                ray.status = RayStatus::Broken;
                return ray;
            }
        }
        ray.points.emplace_back(s, z);
        if (last) {
            std::size_t m = ray.points.size();
            if (m >= 2) {
                double gap = std::abs(ray.points[m - 1].second - ray.points[m - 2].second);
                if (gap < opt.spatial_tol) {
                    ray.status = RayStatus::Landed;
                    ray.landing = ray.points.back().second;
                } else {
                    ray.status = RayStatus::MaxStepsReached;
                }
            }
            break;
        }
    }
    return ray;
}

ColandResult coland_test(const CubicMap& P, const Angle& th1, const Angle& th2, int q,
                         const ColandOptions& opt) {
    ColandResult res;
    RayTrace r1 = trace_ray(P, th1, opt.s_end, opt.ray);
    RayTrace r2 = trace_ray(P, th2, opt.s_end, opt.ray);
    res.ray1 = r1.status;
    res.ray2 = r2.status;
    if (r1.status == RayStatus::Broken || r2.status == RayStatus::Broken) return res;
    if (r1.points.empty() || r2.points.empty()) return res;

    PeriodicPoint p1, p2;
    try {
        p1 = find_periodic(P, q, r1.tail());
        p2 = find_periodic(P, q, r2.tail());
    } catch (const NoConvergence&) {
        return res;
    }
    // refinement must stay near the traced tail, else the Newton basin jumped
    double drift = std::max(std::abs(p1.z - r1.tail()), std::abs(p2.z - r2.tail()));
    if (drift > 0.2 * (1.0 + std::abs(p1.z))) return res;

    if (std::abs(p1.multiplier - 1.0) < opt.parabolic_guard ||
        std::abs(p2.multiplier - 1.0) < opt.parabolic_guard)
        return res;  // parabolic-degenerate refinement

    double sep = std::abs(p1.z - p2.z);
    if (sep < opt.coland_tol) {
        res.verdict = Verdict::CoLand;
        res.point = p1.z;
        res.multiplier = p1.multiplier;
    } else if (sep > opt.separation_floor) {
        res.verdict = Verdict::Distinct;
        res.point = p1.z;
        res.point2 = p2.z;
        res.multiplier = p1.multiplier;
    }
    return res;
}

bool yoccoz_check(Complex lambda, const Angle& rotation, int n_cycles, int d, double slack) {
    double mod = std::abs(lambda);
    if (mod <= 1.0) throw NonRepelling("yoccoz_check: |multiplier| <= 1");
    double re = std::log(mod);
    double target = kTwoPi * rotation.to_double();
    double im = std::arg(lambda);
    // branch with imaginary part nearest 2 pi p/q
    double k = std::round((target - im) / kTwoPi);
    im += kTwoPi * k;
    const auto& qden = rotation.den();
    double q = qden.get_d();
    double radius = std::log((double)d) / ((double)n_cycles * q);
    double lhs = ((re * re) + (im - target) * (im - target)) / re;
    return lhs <= 2.0 * radius + slack;
}

} // namespace limbs
