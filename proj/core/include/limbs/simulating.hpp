#pragma once

#include <optional>
#include <vector>

#include "limbs/angle.hpp"
#include "limbs/perm.hpp"

namespace limbs {

/// The canonical pair of m_3 orbits attached to an m_2-periodic point t:
/// O_k and O_{k-1} interlace as 0 <= x_1 < y_1 < ... < x_k < 1/2 <= y_k < ... < y_q < 1,
/// and [x_k, y_k] is the marked interval around the fixed point 1/2.
struct SimulatingPair {
    Angle t;
    long k = 0;          // 1-based index of t in its sorted m_2 orbit
    Orbit orbit_t;       // the m_2 orbit {t_1..t_q}
    CyclicPerm sigma;
    std::vector<Orbit> realizations;  // O_0 .. O_q, deployment order
    Orbit ox, oy;        // O_k, O_{k-1}
    Angle x_k, y_k;      // marked simulating angles
    Angle xprime_k, yprime_k;  // x_k + 1/3, y_k - 1/3

    long q() const { return (long)orbit_t.size(); }
    Angle x(long i) const { return ox[(std::size_t)i - 1]; }  // 1-based
    Angle y(long i) const { return oy[(std::size_t)i - 1]; }
};

/// The q+1 realizations of an m_2-realizable sigma under m_3, sorted so that
/// #(O_i cap [0,1/2)) = i. Throws NotM2Combinatorics otherwise.
std::vector<Orbit> realizations_ordered(const CyclicPerm& sigma);

/// Simulating orbits and marked angles of a purely m_2-periodic t.
SimulatingPair simulating_pair(const Angle& t);

/// Result of evaluating the monotone projection collapsing [x_i,y_i] to t_i.
struct ProjectionResult {
    bool plateau = false;
    Angle value;      // exact value when plateau
    Angle lo, hi;     // otherwise the value lies in the cyclic arc [lo, hi]
};

/// Plateau table of the degree-1 monotone semiconjugacy between m_3 and m_2.
///
/// The plateaus are the iterated m_3-preimages of the marked interval
/// I_k = [x_k, y_k], pulled back while skipping components that re-enter
/// existing plateaus. At each depth the new components are put in cyclic
/// order-preserving bijection with the new m_2-preimages of t_k, which fixes
/// their projection values; everything is exact rational arithmetic.
class Projection {
  public:
    Projection(const SimulatingPair& sp, int depth);

    ProjectionResult eval(const Angle& theta) const;
    int depth() const { return depth_; }
    std::size_t plateau_count() const { return arcs_.size(); }

  private:
    struct Arc {
        mpq_class start;   // in [0,1)
        mpq_class length;  // < 1, arc may wrap past 0
        mpq_class value;   // in [0,1)
        int level;
    };
    std::vector<Arc> arcs_;  // sorted by start
    int depth_;

    void build(const SimulatingPair& sp);
};

/// One-shot evaluation (builds the plateau table to the requested depth).
ProjectionResult project_angle(const SimulatingPair& sp, const Angle& theta, int depth);

/// For a rotation-type orbit, the complementary marked angle t_{q-k+1}.
std::optional<Angle> complementary_angle(const Angle& t);

/// Checks that O_j meets the open interval ]x_k, y_k[ for every j not in
/// {k-1, k}. k is 1-based.
bool verify_nothird(const CyclicPerm& sigma, long k);

} // namespace limbs
