#pragma once

#include <optional>
#include <vector>

#include "limbs/angle.hpp"
#include "limbs/cubic.hpp"
#include "limbs/ray.hpp"
#include "limbs/simulating.hpp"

namespace limbs {

/// The dynamical wakes W_1..W_q cut off by the co-landing simulating ray
/// pairs, plus the sub-wake W'_k. Wake regions are closed polylines (ray
/// polylines joined through the landing point and a far-field equipotential
/// arc); membership is decided by crossing counts.
class WakeSystem {
  public:
    struct Region {
        std::vector<Complex> polygon;  // closed
        Complex landing;
        Angle ax, ay;  // boundary ray angles
    };

    const SimulatingPair& pair() const { return sp_; }
    const CubicMap& map() const { return map_; }
    long q() const { return (long)sp_.q(); }
    const std::vector<Complex>& landings() const { return z_; }
    Complex subwake_landing() const { return zprime_; }

    /// 1-based wake index; 0 addresses the sub-wake W'_k.
    bool contains(long wake, Complex z) const;
    double boundary_distance(long wake, Complex z) const;

    friend WakeSystem build_wakes(const CubicMap& P, const Angle& t, const ColandOptions& opt);

  private:
    CubicMap map_;
    SimulatingPair sp_;
    std::vector<Region> wakes_;  // W_1..W_q
    Region subwake_;             // W'_k
    std::vector<Complex> z_;     // refined landing points z_1..z_q
    Complex zprime_;
};

/// Traces all 2q+2 rays, verifies the co-landings, refines the landing
/// points, and assembles the wake polygons. Throws RayFailure / NotInLimb.
WakeSystem build_wakes(const CubicMap& P, const Angle& t, const ColandOptions& opt = {});

enum class LocusStatus { InLocus, Escaped, Inconclusive };

const char* locus_status_name(LocusStatus s);

struct LocusReport {
    LocusStatus status = LocusStatus::Inconclusive;
    int fail_step = -1;      // iterate index when Escaped/Inconclusive
    int fail_critical = 0;   // 1 or 2
};

/// Orbit test for membership in the main renormalization locus: the omega_1
/// orbit must stay outside all closed wakes and the omega_2 orbit of P^q must
/// stay in W_k minus the closed sub-wake, all with a safety margin.
LocusReport lren_membership(const WakeSystem& w, int n_max, double boundary_margin = 1e-4);

struct OrbitReport {
    int period = 0;            // period of the co-landing orbit
    bool merged = false;       // period < q
    bool third_cycle = false;  // a third ray cycle lands on the orbit
    std::optional<Orbit> third_angles;
    Complex multiplier;        // of the period-p cycle
    Angle rotation;            // combinatorial rotation of the rays
    int ray_cycles = 2;
    bool yoccoz_ok = false;
};

/// Classification of the co-landing orbit: merged period, third ray cycle
/// (checked numerically against the combinatorial candidates), multiplier
/// and the multiplier bound.
OrbitReport classify_coland_orbit(const WakeSystem& w, const ColandOptions& opt = {});

/// The cubic intertwining z^2 - 2 with z^2 - 1: omega_1 falls on a fixed
/// point after two iterates, omega_2 is periodic of period 2, and the
/// co-landing orbit of the 1/3-limb is a merged repelling fixed point.
CubicMap make_chebyshev_basilica();

} // namespace limbs
