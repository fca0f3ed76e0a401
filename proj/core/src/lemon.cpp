#include "limbs/lemon.hpp"

#include <cmath>

#include "limbs/simulating.hpp"

namespace limbs {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

Complex unit(double turn) { return {std::cos(kTwoPi * turn), std::sin(kTwoPi * turn)}; }

Complex tracked_log(Complex u, BranchState* state, std::size_t j) {
    Complex L = std::log(u);
    if (state) {
        if (j < state->imag.size()) {
            double k = std::round((state->imag[j] - L.imag()) / kTwoPi);
            L += Complex(0.0, kTwoPi * k);
        }
        if (j < state->imag.size()) state->imag[j] = L.imag();
        else state->imag.push_back(L.imag());
    }
    return L;
}

std::optional<Complex> kappa_impl(Complex a, BranchState* state) {
    if (std::abs(a) < 1e-300) return Complex{0.0, 0.0};
    const CubicMap P = lemon_map(a);
    Complex z = P.omega2();
    Complex S{0.0, 0.0};
    double w = 0.5;
    const double escape = 4.0 + 6.0 * std::abs(a);
    std::size_t j = 0;
    if (state) state->imag.resize(0);
    while (std::abs(z) > 1e-9) {
        Complex u = 1.0 + z / (3.0 * a);
        if (std::abs(u) < 1e-15) return std::nullopt;
        S += w * tracked_log(u, state, j);
        z = eval(P, z);
        ++j;
        w *= 0.5;
        if (j > 100000 || std::abs(z) > escape) return std::nullopt;
    }
    return -6.0 * a * a * std::exp(S);
}

// least squares landing fit: a(u) ~ a* + c2 u^2 + c3 u^3 on u = 1/log(1/s)
std::optional<Complex> fit_landing(const std::vector<std::pair<double, Complex>>& samples) {
    const int m = 3;
    if (samples.size() < 4) return std::nullopt;
    static const int pw[m] = {0, 2, 3};
    Complex M[m][m] = {};
    Complex rhs[m] = {};
    for (const auto& [u, a] : samples) {
        double up[7];
        up[0] = 1;
        for (int i = 1; i < 7; ++i) up[i] = up[i - 1] * u;
        for (int i = 0; i < m; ++i) {
            for (int k = 0; k < m; ++k) M[i][k] += up[pw[i] + pw[k]];
            rhs[i] += a * up[pw[i]];
        }
    }
    // gaussian elimination, partial pivot
    int idx[m] = {0, 1, 2};
    for (int c = 0; c < m; ++c) {
        int piv = c;
        for (int r = c + 1; r < m; ++r)
            if (std::abs(M[idx[r]][c]) > std::abs(M[idx[piv]][c])) piv = r;
        std::swap(idx[c], idx[piv]);
        if (std::abs(M[idx[c]][c]) < 1e-30) return std::nullopt;
        for (int r = c + 1; r < m; ++r) {
            Complex f = M[idx[r]][c] / M[idx[c]][c];
            for (int k = c; k < m; ++k) M[idx[r]][k] -= f * M[idx[c]][k];
            rhs[idx[r]] -= f * rhs[idx[c]];
        }
    }
    Complex sol[m];
    for (int r = m - 1; r >= 0; --r) {
        Complex s = rhs[idx[r]];
        for (int k = r + 1; k < m; ++k) s -= M[idx[r]][k] * sol[k];
        sol[r] = s / M[idx[r]][r];
    }
    return sol[0];
}

} // namespace

Complex internal_kappa(Complex a) {
    auto k = kappa_impl(a, nullptr);
    if (!k) throw NotInBasin("internal_kappa: omega_2 is not attracted to 0");
    return *k;
}

std::optional<Complex> internal_kappa_tracked(Complex a, BranchState& state) {
    BranchState trial = state;
    auto k = kappa_impl(a, &trial);
    if (k) state = std::move(trial);
    return k;
}

std::optional<Complex> cocritical_phi(Complex a, BranchState& state) {
    Complex w = a;
    Complex S{0.0, 0.0};
    double wt = 1.0 / 3.0;
    const CubicMap P = lemon_map(a);
    BranchState trial = state;
    std::size_t j = 0;
    while (true) {
        Complex u = 1.0 + 3.0 * a / w;
        if (!std::isfinite(std::abs(u)) || std::abs(u) < 1e-15) return std::nullopt;
        S += wt * tracked_log(u, &trial, j);
        w = eval(P, w);
        ++j;
        wt /= 3.0;
        if (std::abs(w) > 1e30) break;
        if (j > 400) return std::nullopt;  // co-critical orbit is not escaping
    }
    trial.imag.resize(j);
    state = std::move(trial);
    return a * std::exp(S);
}

namespace {

// One Newton continuation step for kappa(a) = target.
std::optional<Complex> kappa_solve(Complex target, Complex a, BranchState& state) {
    for (int it = 0; it < 60; ++it) {
        BranchState s1 = state;
        auto f = kappa_impl(a, &s1);
        if (!f) return std::nullopt;
        double h = 1e-7 * (1.0 + std::abs(a));
        BranchState s2 = s1;
        auto f2 = kappa_impl(a + h, &s2);
        if (!f2) return std::nullopt;
        Complex d = (*f2 - *f) / h;
        if (std::abs(d) < 1e-30) return std::nullopt;
        Complex da = (*f - target) / d;
        a -= da;
        if (std::abs(da) < 1e-12 * (1.0 + std::abs(a))) {
            BranchState s3 = state;
            kappa_impl(a, &s3);
            state = std::move(s3);
            return a;
        }
    }
    return std::nullopt;
}

} // namespace

Complex boundary_param(const Angle& t, double resolution) {
    const double turn = t.to_double();
    BranchState state;
    // anchor low on the imaginary axis: all branch terms are principal there
    Complex a{0.0, -0.05};
    auto k0 = kappa_impl(a, &state);
    if (!k0) throw ContinuationFailure("boundary_param: anchor evaluation failed");

    auto step = [&](Complex target) {
        auto r = kappa_solve(target, a, state);
        if (!r) throw ContinuationFailure("boundary_param: lift continuation failed");
        a = *r;
    };
    // radial to |kappa| = 1/2 along angle 0
    for (double r = std::abs(*k0); r < 0.5;) {
        r = std::min(0.5, r + 0.05);
        step(Complex{r, 0.0});
    }
    // rotate to the requested internal angle
    int nrot = std::max(8, (int)(std::abs(turn) * 96));
    for (int i = 1; i <= nrot; ++i) step(0.5 * unit(turn * i / nrot));
    // radial ascent with samples for the boundary extrapolation
    std::vector<std::pair<double, Complex>> samples;
    double rmax_gap = std::min(1e-6, resolution);
    for (int kk = 4;; ++kk) {
        double gap = std::pow(10.0, -kk / 2.0);
        if (gap < rmax_gap) break;
        double r = 1.0 - gap;
        // sub-steps toward the sample radius
        for (double rr = std::abs(internal_kappa(a)); rr < r;) {
            rr = std::min(r, rr + std::min(0.05, (1 - rr) * 0.5));
            step(rr * unit(turn));
        }
        double sigma = -std::log(r);                 // internal potential
        samples.emplace_back(1.0 / std::log(1.0 / sigma), a);
    }
    auto est = fit_landing(samples);
    if (!est) throw ContinuationFailure("boundary_param: landing fit failed");
    return *est;
}

RayTrace param_ray(const Angle& xi, double s_end) {
    RayTrace ray;
    ray.angle = xi;
    BranchState state;
    const double turn = xi.to_double();
    double s = 8.0;
    Complex a = std::exp(s) * unit(turn) / std::cbrt(4.0);

    auto newton = [&](double spot, Complex seed) -> std::optional<Complex> {
        Complex target = std::exp(spot) * unit(turn);
        Complex aa = seed;
        for (int it = 0; it < 60; ++it) {
            BranchState s1 = state;
            auto f = cocritical_phi(aa, s1);
            if (!f) return std::nullopt;
            double h = 1e-8 * (1.0 + std::abs(aa));
            BranchState s2 = s1;
            auto f2 = cocritical_phi(aa + h, s2);
            if (!f2) return std::nullopt;
            Complex d = (*f2 - *f) / h;
            if (std::abs(d) < 1e-300) return std::nullopt;
            Complex da = (*f - target) / d;
            aa -= da;
            if (std::abs(da) < 1e-13 * (1.0 + std::abs(aa))) {
                BranchState s3 = state;
                cocritical_phi(aa, s3);
                state = std::move(s3);
                return aa;
            }
        }
        return std::nullopt;
    };

    const double fac = 0.85;
    while (true) {
        auto r = newton(s, a);
        if (!r) {
            // halve toward the previous potential once, then give up
            double sprev = ray.points.empty() ? s * 1.3 : ray.points.back().first;
            double smid = std::sqrt(s * sprev);
            auto rmid = newton(smid, a);
            if (!rmid) {
                ray.status = RayStatus::Broken;
                return ray;
            }
            a = *rmid;
            ray.points.emplace_back(smid, a);
            continue;
        }
        a = *r;
        ray.points.emplace_back(s, a);
        if (s <= s_end) break;
        s = std::max(s_end, s * fac);
    }
    ray.status = RayStatus::Landed;
    std::vector<std::pair<double, Complex>> samples;
    std::size_t n = ray.points.size();
    for (std::size_t i = n - std::min<std::size_t>(8, n); i < n; ++i)
        samples.emplace_back(1.0 / std::log(1.0 / ray.points[i].first), ray.points[i].second);
    auto est = fit_landing(samples);
    if (est) ray.landing = *est;
    else ray.status = RayStatus::MaxStepsReached;
    return ray;
}

LimbMembership is_in_limb(Complex a, const Angle& t) {
    SimulatingPair sp = simulating_pair(t);
    const int q = (int)sp.q();
    LimbMembership m;
    ColandResult r1 = coland_test(lemon_map(a), sp.x_k, sp.y_k, q);
    if (r1.verdict == Verdict::CoLand) {
        m.verdict = Verdict::CoLand;
        m.sign = +1;
        m.detail = r1;
        return m;
    }
    ColandResult r2 = coland_test(lemon_map(-a), sp.x_k, sp.y_k, q);
    if (r2.verdict == Verdict::CoLand) {
        m.verdict = Verdict::CoLand;
        m.sign = -1;
        m.detail = r2;
        return m;
    }
    m.verdict = r1.verdict;
    m.sign = +1;
    m.detail = r1;
    return m;
}

Complex find_center(const Angle& t, std::optional<Complex> seed) {
    const int q = (int)period(2, t);

    auto newton_center = [&](Complex a0) -> std::optional<Complex> {
        Complex a = a0;
        for (int it = 0; it < 80; ++it) {
            // F(a) = P_a^q(omega2) - omega2 with d/da by forward accumulation
            Complex w = -2.0 * a, dw = {-2.0, 0.0};
            for (int j = 0; j < q; ++j) {
                Complex dnext = (3.0 * w * w + 6.0 * a * w) * dw + 3.0 * w * w;
                w = w * w * (w + 3.0 * a);
                dw = dnext;
            }
            Complex f = w + 2.0 * a;
            Complex fp = dw + 2.0;
            if (std::abs(fp) < 1e-300) return std::nullopt;
            Complex da = f / fp;
            a -= da;
            if (!std::isfinite(std::abs(a))) return std::nullopt;
            if (std::abs(da) < 1e-13 * (1.0 + std::abs(a))) return a;
        }
        return std::nullopt;
    };

    auto validate = [&](Complex a) -> bool {
        CubicMap P = lemon_map(a);
        Complex w2 = P.omega2();
        if (std::abs(iterate(P, w2, q) - w2) > 1e-9) return false;
        for (int d = 1; d < q; ++d)
            if (q % d == 0 && std::abs(iterate(P, w2, d) - w2) < 1e-6) return false;
        if (std::abs(a) < 1e-6) return false;
        return true;
    };

    std::vector<Complex> seeds;
    if (seed) {
        seeds.push_back(*seed);
    } else {
        Complex at = boundary_param(t, 1e-4);
        for (double eps : {0.005, 0.01, 0.02, 0.04, 0.08, 0.15})
            seeds.push_back(at * (1.0 + eps));
    }
    bool converged_any = false;
    for (Complex s0 : seeds) {
        auto a = newton_center(s0);
        if (!a || !validate(*a)) continue;
        converged_any = true;
        LimbMembership mem = is_in_limb(*a, t);
        if (mem.verdict == Verdict::CoLand && mem.sign == +1) return *a;
    }
    if (converged_any)
        throw WrongLimb("find_center: converged outside the requested limb");
    throw NoConvergence("find_center: no seed converged");
}

} // namespace limbs
