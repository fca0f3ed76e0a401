#pragma once

#include <optional>
#include <vector>

#include "limbs/angle.hpp"
#include "limbs/cubic.hpp"

namespace limbs {

enum class RayStatus { Landed, MaxStepsReached, Broken };

const char* ray_status_name(RayStatus s);

/// A traced external ray: points at strictly decreasing Green's potentials,
/// with a landing estimate when the tail settles.
struct RayTrace {
    Angle angle;
    std::vector<std::pair<double, Complex>> points;  // (potential, point)
    std::optional<Complex> landing;
    RayStatus status = RayStatus::MaxStepsReached;

    const Complex& tail() const { return points.back().second; }
};

struct RayOptions {
    double s_start = 63.0;          // top potential; |w| up to e^63 is safe
    int steps_per_division = 24;    // Newton targets per potential third
    double newton_tol = 1e-13;
    int max_newton = 40;
    double derivative_floor = 1e-280;  // precritical singularity proxy
    double spatial_tol = 1e-6;         // landing detection
    long max_steps = 200000;
};

/// Inverse-tripling continuation of the external ray at a rational angle:
/// at each target potential s the point solves P^n(z) = w(3^n s, 3^n theta)
/// by Newton from the previous point, where w is the second-order asymptotic
/// of the inverse Boettcher map near infinity.
RayTrace trace_ray(const CubicMap& P, const Angle& theta, double s_start, double s_end,
                   int steps_per_division = 24);
RayTrace trace_ray(const CubicMap& P, const Angle& theta, double s_end = 1e-7,
                   const RayOptions& opt = {});

enum class Verdict { CoLand, Distinct, Inconclusive };

const char* verdict_name(Verdict v);

struct ColandResult {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<Complex> point;        // common landing point (CoLand)
    std::optional<Complex> point2;       // second point (Distinct)
    std::optional<Complex> multiplier;   // cycle multiplier at the refined point
    RayStatus ray1 = RayStatus::MaxStepsReached, ray2 = RayStatus::MaxStepsReached;
};

struct ColandOptions {
    double coland_tol = 1e-6;
    double separation_floor = 1e-3;
    double parabolic_guard = 1e-4;  // |multiplier - 1| below this is Inconclusive
    double s_end = 1e-7;
    RayOptions ray;
};

/// Traces both rays and refines their tails by Newton on P^q - id. The gap
/// between coland_tol and separation_floor is a deliberate Inconclusive band.
ColandResult coland_test(const CubicMap& P, const Angle& th1, const Angle& th2, int q,
                         const ColandOptions& opt = {});

/// Repelling-multiplier test: the branch of log(lambda) with imaginary part
/// nearest 2 pi p/q must lie in the closed disk of radius log(d)/(N q)
/// tangent to the imaginary axis at 2 pi i p/q. Throws NonRepelling.
bool yoccoz_check(Complex lambda, const Angle& rotation, int n_cycles, int d,
                  double slack = 1e-9);

} // namespace limbs
