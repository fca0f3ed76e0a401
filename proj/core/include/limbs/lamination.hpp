#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "limbs/angle.hpp"
#include "limbs/perm.hpp"
#include "limbs/simulating.hpp"

namespace limbs {

/// Two m_2-periodic angles of equal period whose parameter rays co-land.
struct PartnerPair {
    Angle t, t_hat;
};

/// Memoized chord table of the periodic-angle pairing. Periods are built
/// incrementally; the table is read-only once built.
class PartnerTable {
  public:
    /// Ensures all periods <= q are paired.
    void build_to(int q);

    /// All pairs of exact period q (lexicographic, smaller angle first).
    std::vector<PartnerPair> pairs_of_period(int q);

    Angle partner(const Angle& t);

    int built_period() const { return built_; }

  private:
    struct Chord {
        Angle a, b;  // a < b
        int period;
    };
    std::vector<Chord> chords_;
    int built_ = 0;

    bool crosses_existing(const Angle& a, const Angle& b) const;
};

/// The partner of a non-zero m_2-periodic angle. Throws ZeroAngle for t = 0.
Angle m_partner(const Angle& t);

/// The unique unordered 1-based index pair (i, j) with partner(t_i) = t_j,
/// when the orbit contains one.
std::optional<std::pair<int, int>> partner_pair_in_orbit(const Orbit& orbit);

enum class PortraitType { Trivial, Primitive, Satellite };

/// The collection of ray-angle classes landing on one orbit, classified by
/// (N, r): trivial r=N=1, primitive r=1 N=2, satellite r>=2 N=1.
struct Portrait {
    PortraitType type = PortraitType::Trivial;
    std::vector<std::vector<Angle>> classes;  // each sorted
    long orbit_period = 0;
    long ray_period = 0;
    Angle rotation;  // s/r; 0/1 unless satellite
    std::optional<std::pair<Angle, Angle>> characteristic_arc;  // absent iff trivial
};

const char* portrait_type_name(PortraitType t);

/// Merging prediction for an m_2-realizable sigma: when sigma is dynamically
/// reducible, the satellite formal portrait on its unique m_2 orbit.
struct MergePrediction {
    int p = 0, r = 0;
    Angle rotation;
    Portrait portrait;
};

std::optional<MergePrediction> predict_merging(const CyclicPerm& sigma);

/// Portrait of the landing points of the orbit's rays when the quadratic
/// parameter sits in the given partner limb.
Portrait portrait_for_limb(const Orbit& orbit, const PartnerPair& limb);

/// The unique period-q m_3-orbit forming a third ray cycle on the co-landing
/// orbit, found by exhaustive search with projection-bracket matching and a
/// non-crossing check. Requires a primitive limb (throws NotPrimitive).
std::optional<Orbit> third_cycle(const Angle& t, const PartnerPair& limb);

} // namespace limbs
