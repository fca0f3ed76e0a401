#pragma once

#include <optional>
#include <vector>

#include "limbs/angle.hpp"
#include "limbs/cubic.hpp"
#include "limbs/ray.hpp"

namespace limbs {

/// The one-parameter slice P_a(z) = z^3 + 3 a z^2 (omega_1 fixed).
inline CubicMap lemon_map(Complex a) { return CubicMap{a, {0.0, 0.0}}; }

/// Per-term unwrapped logarithm imaginary parts, used to keep the internal
/// and external coordinate evaluations on one analytic branch along a
/// continuation path.
struct BranchState {
    std::vector<double> imag;
};

/// Boettcher coordinate of omega_2 in the immediate basin of 0 (normalized
/// by derivative 3a at the fixed point). Throws NotInBasin when omega_2 is
/// not attracted to 0. The tracked overload continues the branch of the
/// previous evaluation.
Complex internal_kappa(Complex a);
std::optional<Complex> internal_kappa_tracked(Complex a, BranchState& state);

/// Boettcher coordinate of the escaping co-critical point a. Only defined
/// when omega_2 escapes; nullopt otherwise.
std::optional<Complex> cocritical_phi(Complex a, BranchState& state);

/// Boundary point a(t) of the central hyperbolic component: the lift of
/// t -> e^{2 pi i t} under kappa with base point a(0) = -2i/3, followed
/// radially to the boundary and extrapolated. Throws ContinuationFailure.
Complex boundary_param(const Angle& t, double resolution = 1e-4);

/// Parameter ray {Phi(a) = e^{s + 2 pi i xi}} traced from large potential to
/// s_end by Newton continuation. The landing field carries the extrapolated
/// landing estimate (parameter rays can close in on parabolic boundary
/// points only logarithmically in s, so the raw tail is not the estimate).
RayTrace param_ray(const Angle& xi, double s_end = 1e-5);

/// Limb membership via the co-landing of the simulating rays; both the map
/// and its sign-flipped representative are tested.
struct LimbMembership {
    Verdict verdict = Verdict::Inconclusive;
    int sign = +1;  // +1: P_a itself, -1: P_{-a} satisfied the test
    ColandResult detail;
};
LimbMembership is_in_limb(Complex a, const Angle& t);

/// Parameter with omega_2 superattracting of exact period = period(t),
/// validated by limb membership. Seeds itself from boundary_param when no
/// seed is given.
Complex find_center(const Angle& t, std::optional<Complex> seed = std::nullopt);

} // namespace limbs
