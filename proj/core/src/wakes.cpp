#include "limbs/wakes.hpp"

#include <algorithm>
#include <cmath>

#include "limbs/lamination.hpp"

namespace limbs {

const char* locus_status_name(LocusStatus s) {
    switch (s) {
        case LocusStatus::InLocus: return "in-locus";
        case LocusStatus::Escaped: return "escaped";
        case LocusStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

bool point_in_polygon(const std::vector<Complex>& poly, Complex z) {
    bool in = false;
    for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
        const Complex& p = poly[i];
        const Complex& q = poly[i + 1];
        if ((p.imag() > z.imag()) != (q.imag() > z.imag())) {
            double x = p.real() + (z.imag() - p.imag()) * (q.real() - p.real()) /
                                      (q.imag() - p.imag());
            if (x > z.real()) in = !in;
        }
    }
    return in;
}

double dist_to_polygon(const std::vector<Complex>& poly, Complex z) {
    double best = 1e300;
    for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
        Complex a = poly[i], b = poly[i + 1];
        Complex ab = b - a;
        double len2 = std::norm(ab);
        double t = len2 > 0 ? std::clamp(((z - a) * std::conj(ab)).real() / len2, 0.0, 1.0) : 0.0;
        best = std::min(best, std::abs(z - (a + t * ab)));
    }
    return best;
}

Complex far_point(const CubicMap& P, double S, double turn) {
    Complex W = std::exp(S) * Complex(std::cos(kTwoPi * turn), std::sin(kTwoPi * turn));
    return W - P.a + P.a * P.a / W;
}

WakeSystem::Region make_region(const CubicMap& P, const RayTrace& rx, const RayTrace& ry,
                               Complex landing, double s_top) {
    WakeSystem::Region reg;
    reg.ax = rx.angle;
    reg.ay = ry.angle;
    reg.landing = landing;
    reg.polygon.push_back(landing);
    for (auto it = rx.points.rbegin(); it != rx.points.rend(); ++it)
        if (it->first <= s_top) reg.polygon.push_back(it->second);
    double tx = rx.angle.to_double(), ty = ry.angle.to_double();
    if (ty < tx) ty += 1.0;
    const int arcn = 96;
    for (int i = 0; i <= arcn; ++i)
        reg.polygon.push_back(far_point(P, s_top, tx + (ty - tx) * i / arcn));
    for (const auto& [s, z] : ry.points)
        if (s <= s_top) reg.polygon.push_back(z);
    reg.polygon.push_back(landing);
    return reg;
}

} // namespace

bool WakeSystem::contains(long wake, Complex z) const {
    const Region& r = (wake == 0) ? subwake_ : wakes_[(std::size_t)wake - 1];
    return point_in_polygon(r.polygon, z);
}

double WakeSystem::boundary_distance(long wake, Complex z) const {
    const Region& r = (wake == 0) ? subwake_ : wakes_[(std::size_t)wake - 1];
    return dist_to_polygon(r.polygon, z);
}

WakeSystem build_wakes(const CubicMap& P, const Angle& t, const ColandOptions& opt) {
    WakeSystem w;
    w.map_ = P;
    w.sp_ = simulating_pair(t);
    const long q = w.q();
    const double s_top = opt.ray.s_start;
    const double s_end = std::min(opt.s_end, 1e-9);

    RayOptions ropt = opt.ray;
    std::vector<RayTrace> rx, ry;
    for (long i = 1; i <= q; ++i) {
        rx.push_back(trace_ray(P, w.sp_.x(i), s_end, ropt));
        ry.push_back(trace_ray(P, w.sp_.y(i), s_end, ropt));
        if (rx.back().status == RayStatus::Broken || ry.back().status == RayStatus::Broken)
            throw RayFailure("build_wakes: ray broken at wake " + std::to_string(i));
    }
    // refine the co-landing orbit
    for (long i = 1; i <= q; ++i) {
        PeriodicPoint px, py;
        try {
            px = find_periodic(P, (int)q, rx[(std::size_t)i - 1].tail());
            py = find_periodic(P, (int)q, ry[(std::size_t)i - 1].tail());
        } catch (const NoConvergence&) {
            throw NotInLimb("build_wakes: landing refinement failed at wake " + std::to_string(i));
        }
        if (std::abs(px.z - py.z) > opt.coland_tol)
            throw NotInLimb("build_wakes: rays at wake " + std::to_string(i) + " do not co-land");
        w.z_.push_back(px.z);
    }
    for (long i = 1; i <= q; ++i)
        w.wakes_.push_back(make_region(P, rx[(std::size_t)i - 1], ry[(std::size_t)i - 1],
                                       w.z_[(std::size_t)i - 1], s_top));

    // sub-wake W'_k: rays y'_k, x'_k land at the preimage of z_{sigma(k)} in W_k
    RayTrace ryp = trace_ray(P, w.sp_.yprime_k, s_end, ropt);
    RayTrace rxp = trace_ray(P, w.sp_.xprime_k, s_end, ropt);
    if (ryp.status == RayStatus::Broken || rxp.status == RayStatus::Broken)
        throw RayFailure("build_wakes: sub-wake ray broken");
    const Complex ztarget = w.z_[(std::size_t)w.sp_.sigma((int)w.sp_.k) - 1];
    auto refine_preimage = [&](Complex guess) {
        Complex z = guess;
        for (int it = 0; it < 60; ++it) {
            Complex f = eval(P, z) - ztarget;
            Complex d = eval_derivative(P, z);
            if (std::abs(d) < 1e-300) throw NotInLimb("build_wakes: sub-wake refinement degenerate");
            Complex dz = f / d;
            z -= dz;
            if (std::abs(dz) < 1e-12 * (1.0 + std::abs(z))) return z;
        }
        throw NotInLimb("build_wakes: sub-wake refinement failed");
    };
    Complex zp1 = refine_preimage(ryp.tail());
    Complex zp2 = refine_preimage(rxp.tail());
    if (std::abs(zp1 - zp2) > opt.coland_tol)
        throw NotInLimb("build_wakes: sub-wake rays do not co-land");
    w.zprime_ = zp1;
    w.subwake_ = make_region(P, ryp, rxp, w.zprime_, s_top);

    // sanity: omega_2 inside W_k, omega_1 outside every wake
    if (!w.contains(w.sp_.k, P.omega2()))
        throw NotInLimb("build_wakes: omega_2 is not inside the marked wake");
    for (long i = 1; i <= q; ++i)
        if (w.contains(i, P.omega1()))
            throw NotInLimb("build_wakes: omega_1 inside a wake");
    return w;
}

LocusReport lren_membership(const WakeSystem& w, int n_max, double boundary_margin) {
    const CubicMap& P = w.map();
    const long q = w.q();
    LocusReport rep;

    Complex z = P.omega1();
    for (int n = 0; n <= n_max; ++n) {
        for (long i = 1; i <= q; ++i) {
            if (w.boundary_distance(i, z) < boundary_margin) {
                rep.status = LocusStatus::Inconclusive;
                rep.fail_step = n;
                rep.fail_critical = 1;
                return rep;
            }
            if (w.contains(i, z)) {
                rep.status = LocusStatus::Escaped;
                rep.fail_step = n;
                rep.fail_critical = 1;
                return rep;
            }
        }
        z = eval(P, z);
    }
    z = P.omega2();
    for (int n = 0; n <= n_max; ++n) {
        if (w.boundary_distance(w.pair().k, z) < boundary_margin ||
            w.boundary_distance(0, z) < boundary_margin) {
            rep.status = LocusStatus::Inconclusive;
            rep.fail_step = n;
            rep.fail_critical = 2;
            return rep;
        }
        if (!w.contains(w.pair().k, z) || w.contains(0, z)) {
            rep.status = LocusStatus::Escaped;
            rep.fail_step = n;
            rep.fail_critical = 2;
            return rep;
        }
        z = iterate(P, z, (int)q);
    }
    rep.status = LocusStatus::InLocus;
    return rep;
}

OrbitReport classify_coland_orbit(const WakeSystem& w, const ColandOptions& opt) {
    const CubicMap& P = w.map();
    const long q = w.q();
    const auto& z = w.landings();
    OrbitReport rep;

    // merged period: smallest divisor p with z_{i+p} = z_i cyclically
    int p = (int)q;
    for (int cand = 1; cand < q; ++cand) {
        if (q % cand != 0) continue;
        bool ok = true;
        for (long i = 0; i < q && ok; ++i)
            if (std::abs(z[(std::size_t)i] - z[(std::size_t)((i + cand) % q)]) > opt.coland_tol)
                ok = false;
        if (ok) { p = cand; break; }
    }
    rep.period = p;
    rep.merged = p < q;

    PeriodicPoint pp = find_periodic(P, p, z[0]);
    rep.multiplier = pp.multiplier;

    // ray rotation number: from the reduction certificate when merged
    rep.rotation = Angle(0, 1);
    if (rep.merged) {
        auto mp = predict_merging(w.pair().sigma);
        if (mp && mp->p == p) rep.rotation = mp->rotation;
    }

    // third cycle: try the combinatorial candidates and test their rays
    const Orbit& torb = w.pair().orbit_t;
    rep.ray_cycles = 2;
    if (!rep.merged) {
        for (std::size_t i = 0; i < torb.size() && !rep.third_cycle; ++i) {
            if (torb[i].is_zero()) continue;
            Angle hat = m_partner(torb[i]);
            if (torb.contains(hat)) continue;  // satellite pair: no third cycle
            std::optional<Orbit> cand;
            try {
                cand = third_cycle(w.pair().t, PartnerPair{torb[i], hat});
            } catch (const NotPrimitive&) {
                continue;
            }
            if (!cand) continue;
            bool lands = true;
            for (const auto& u : cand->angles) {
                RayTrace r = trace_ray(P, u, std::min(opt.s_end, 1e-9), opt.ray);
                if (r.status == RayStatus::Broken) { lands = false; break; }
                Complex zz;
                try {
                    zz = find_periodic(P, p, r.tail()).z;
                } catch (const NoConvergence&) {
                    lands = false;
                    break;
                }
                bool on_orbit = false;
                for (const auto& zi : z)
                    if (std::abs(zz - zi) < opt.coland_tol) on_orbit = true;
                if (!on_orbit) { lands = false; break; }
            }
            if (lands) {
                rep.third_cycle = true;
                rep.third_angles = cand;
                rep.ray_cycles = 3;
            }
        }
    }
    try {
        rep.yoccoz_ok = yoccoz_check(rep.multiplier, rep.rotation, rep.ray_cycles, 3);
    } catch (const NonRepelling&) {
        rep.yoccoz_ok = false;
    }
    return rep;
}

CubicMap make_chebyshev_basilica() {
    // critical-orbit system: P^3(w1) = P^2(w1), P^2(w2) = w2
    auto system = [](Complex a, Complex b, Complex& f1, Complex& f2) {
        CubicMap P{a, b};
        Complex p1 = eval(P, P.omega1());
        Complex p2 = eval(P, p1);
        Complex p3 = eval(P, p2);
        f1 = p3 - p2;
        Complex q1 = eval(P, P.omega2());
        Complex q2 = eval(P, q1);
        f2 = q2 - P.omega2();
    };
    auto newton2 = [&](Complex a, Complex b) -> std::optional<std::pair<Complex, Complex>> {
        for (int it = 0; it < 100; ++it) {
            Complex f1, f2;
            system(a, b, f1, f2);
            const double h = 1e-7;
            Complex g1a, g2a, g1b, g2b;
            system(a + h, b, g1a, g2a);
            system(a, b + h, g1b, g2b);
            Complex j11 = (g1a - f1) / h, j12 = (g1b - f1) / h;
            Complex j21 = (g2a - f2) / h, j22 = (g2b - f2) / h;
            Complex det = j11 * j22 - j12 * j21;
            if (std::abs(det) < 1e-30) return std::nullopt;
            Complex da = (f1 * j22 - f2 * j12) / det;
            Complex db = (j11 * f2 - j21 * f1) / det;
            a -= da;
            b -= db;
            if (!std::isfinite(std::abs(a) + std::abs(b))) return std::nullopt;
            if (std::abs(da) + std::abs(db) < 1e-14 * (1.0 + std::abs(a) + std::abs(b)))
                return std::make_pair(a, b);
        }
        return std::nullopt;
    };

    // coarse grid scan ranked by residual, then Newton
    struct Seed {
        double res;
        Complex a, b;
    };
    std::vector<Seed> seeds;
    const int g = 13;
    for (int ia = 0; ia < g; ++ia)
        for (int ja = 0; ja < g; ++ja)
            for (int ib = 0; ib < g; ++ib)
                for (int jb = 0; jb < g; ++jb) {
                    Complex a(-1.3 + 2.6 * ia / (g - 1), -1.3 + 2.6 * ja / (g - 1));
                    Complex b(-1.5 + 3.0 * ib / (g - 1), -1.5 + 3.0 * jb / (g - 1));
                    Complex f1, f2;
                    system(a, b, f1, f2);
                    seeds.push_back({std::abs(f1) + std::abs(f2), a, b});
                }
    std::sort(seeds.begin(), seeds.end(), [](const Seed& x, const Seed& y) { return x.res < y.res; });

    std::vector<std::pair<Complex, Complex>> roots;
    for (std::size_t i = 0; i < seeds.size() && i < 600; ++i) {
        auto r = newton2(seeds[i].a, seeds[i].b);
        if (!r) continue;
        auto [a, b] = *r;
        Complex f1, f2;
        system(a, b, f1, f2);
        if (std::abs(f1) + std::abs(f2) > 1e-11) continue;
        if (std::abs(a) < 1e-6) continue;  // z^3-degenerate family
        CubicMap P{a, b};
        if (std::abs(eval(P, P.omega2()) - P.omega2()) < 1e-8) continue;  // want exact period 2
        bool dup = false;
        for (const auto& [ra, rb] : roots)
            if (std::abs(ra - a) + std::abs(rb - b) < 1e-7) dup = true;
        if (!dup) roots.emplace_back(a, b);
    }
    std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
        if (x.first.real() != y.first.real()) return x.first.real() < y.first.real();
        return x.first.imag() < y.first.imag();
    });

    const Angle third(1, 3);
    for (const auto& [a, b] : roots) {
        CubicMap P{a, b};
        ColandResult c = coland_test(P, Angle(1, 4), Angle(5, 8), 2);
        if (c.verdict != Verdict::CoLand) continue;
        try {
            WakeSystem w = build_wakes(P, third);
            OrbitReport rep = classify_coland_orbit(w);
            if (rep.merged && rep.period == 1 && std::abs(rep.multiplier) > 1.0) return P;
        } catch (const Error&) {
            continue;
        }
    }
    throw NoConvergence("make_chebyshev_basilica: no root satisfied the ray conditions");
}

} // namespace limbs
