#pragma once

#include <optional>
#include <string>
#include <vector>

#include "limbs/angle.hpp"

namespace limbs {

/// A permutation of {1..q} in one-line form. For orbit combinatorics it is a
/// single q-cycle; unions of orbits produce general permutations (MultiPerm).
struct CyclicPerm {
    std::vector<int> images;  // images[i] = sigma(i+1), values 1..q

    std::size_t size() const { return images.size(); }
    int operator()(int i) const { return images[i - 1]; }  // 1-based

    bool operator==(const CyclicPerm& o) const { return images == o.images; }

    bool is_permutation() const;
    bool is_single_cycle() const;

    /// Cycle notation "(a b c ...)"; fixed points omitted unless alone.
    std::string cycle_str() const;

    /// Parses "(1 2 4 3)" / "(1243)" cycle notation or "[2,4,1,3]" one-line.
    static CyclicPerm parse(const std::string& text);
    static CyclicPerm from_cycle(const std::vector<int>& cycle, int q = 0);
};

using MultiPerm = CyclicPerm;

/// The cyclic permutation sigma with m_k(t_i) = t_{sigma(i)} on the sorted orbit.
CyclicPerm combinatorics(const Orbit& orbit);

/// Number of cyclic descents: #{i : sigma(i) > sigma(i+1)}, with q+1 = 1.
/// This equals the least degree of a covering map of the circle realizing
/// sigma on a periodic orbit. Defined as 1 for q = 1.
int degree(const CyclicPerm& sigma);

/// p/q when sigma is the rotation i -> i+p (mod q) with gcd(p,q)=1.
std::optional<Angle> rotation_number(const CyclicPerm& sigma);

/// Number of period-q orbits of m_k with combinatorics sigma:
/// binom(q+k-d, q) if sigma(q) > sigma(1), else binom(q+k-d-1, q).
BigInt count_realizations(const CyclicPerm& sigma, long k);

struct RealizationOptions {
    // Guard on the brute-force enumeration over p/(k^q - 1).
    double max_points = 600000;
};

/// All period-q orbits of m_k realizing sigma, each sorted; the list is
/// ordered by #(O cap [0,1/2)) ascending (ties lexicographic).
std::vector<Orbit> enumerate_realizations(const CyclicPerm& sigma, long k,
                                          const RealizationOptions& opt = {});

/// Permutation induced by m_k on the merged sorted angles of several orbits.
MultiPerm union_combinatorics(const std::vector<Orbit>& orbits);

/// Witness that sigma^p splits into p pairwise-unlinked rotation r-cycles of
/// a common rotation number s/r (supports read as points i/q on the circle).
struct ReductionCertificate {
    int p = 0;                            // merged period, a proper divisor of q
    int r = 0;                            // q / p
    Angle rotation;                       // s/r
    std::vector<std::vector<int>> cycles; // supports, each sorted, 1-based
};

/// Tests every proper divisor p of q; certificates are unique when present.
std::optional<ReductionCertificate> dynamically_reducible(const CyclicPerm& sigma);

} // namespace limbs
