#include "limbs/simulating.hpp"

#include <algorithm>
#include <map>

namespace limbs {

static bool m2_realizable(const CyclicPerm& sigma) {
    if (!sigma.is_single_cycle() && sigma.size() != 1) return false;
    const int q = (int)sigma.size();
    if (q == 1) return true;
    const int d = degree(sigma);
    if (d == 1) return sigma(q) < sigma(1);
    if (d == 2) return sigma(q) > sigma(1);
    return false;
}

std::vector<Orbit> realizations_ordered(const CyclicPerm& sigma) {
    if (!m2_realizable(sigma))
        throw NotM2Combinatorics("realizations_ordered: " + sigma.cycle_str() +
                                 " is not realized under m_2");
    const long q = (long)sigma.size();
    auto reals = enumerate_realizations(sigma, 3);
    if ((long)reals.size() != q + 1)
        throw Error("realizations_ordered: expected q+1 realizations");
    const Angle half(1, 2);
    for (long i = 0; i <= q; ++i) {
        long c = 0;
        for (const auto& a : reals[(std::size_t)i].angles)
            if (a < half) ++c;
        if (c != i) throw Error("realizations_ordered: deployment counts not 0..q");
    }
    return reals;
}

SimulatingPair simulating_pair(const Angle& t) {
    SimulatingPair sp;
    sp.t = t;
    sp.orbit_t = forward_orbit(2, t);
    sp.k = sp.orbit_t.index_of(t) + 1;
    sp.sigma = combinatorics(sp.orbit_t);
    sp.realizations = realizations_ordered(sp.sigma);
    sp.ox = sp.realizations[(std::size_t)sp.k];
    sp.oy = sp.realizations[(std::size_t)sp.k - 1];
    sp.x_k = sp.ox[(std::size_t)sp.k - 1];
    sp.y_k = sp.oy[(std::size_t)sp.k - 1];
    const Angle third(1, 3);
    sp.xprime_k = sp.x_k + third;
    sp.yprime_k = sp.y_k - third;
    return sp;
}

namespace {

mpq_class to_q(const Angle& a) { return mpq_class(a.num(), a.den()); }

Angle to_angle(const mpq_class& r) { return Angle(r.get_num(), r.get_den()); }

mpq_class frac1(mpq_class v) {  // normalize into [0,1)
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
    return v - fl;
}

mpq_class cyc_dist(const mpq_class& from, const mpq_class& to) {  // (to - from) mod 1
    return frac1(to - from);
}

} // namespace

Projection::Projection(const SimulatingPair& sp, int depth) : depth_(depth) {
    build(sp);
    for (int n = 1; n <= depth_; ++n) {
        // preimage arcs of the previous level's plateaus (arcs_ sorted by start)
        struct Cand {
            mpq_class start, length, parent_value;
        };
        std::vector<Cand> cands;
        for (const auto& a : arcs_) {
            if (a.level != n - 1) continue;
            for (int j = 0; j < 3; ++j)
                cands.push_back({frac1((a.start + j) / 3), a.length / 3, a.value});
        }
        // arcs are disjoint, so a candidate can only sit inside its cyclic
        // predecessor in start-order
        auto contained = [&](const Cand& c) {
            auto it = std::upper_bound(arcs_.begin(), arcs_.end(), c.start,
                                       [](const mpq_class& v, const Arc& a) { return v < a.start; });
            std::size_t prev = (it == arcs_.begin()) ? arcs_.size() - 1 : (it - arcs_.begin()) - 1;
            const Arc& a = arcs_[prev];
            mpq_class d = cyc_dist(a.start, c.start);
            return d <= a.length && d + c.length <= a.length;
        };
        std::vector<Cand> fresh;
        for (auto& c : cands)
            if (!contained(c)) fresh.push_back(std::move(c));

        // candidate values: unused m_2-preimages of the parents
        std::vector<mpq_class> used;
        used.reserve(arcs_.size());
        for (const auto& a : arcs_) used.push_back(a.value);
        std::sort(used.begin(), used.end());
        auto is_used = [&](const mpq_class& v) {
            return std::binary_search(used.begin(), used.end(), v);
        };
        std::vector<mpq_class> vals;
        for (const auto& c : fresh) {
            mpq_class v0 = c.parent_value / 2;
            mpq_class v1 = frac1(v0 + mpq_class(1, 2));
            if (!is_used(v0)) vals.push_back(v0);
            if (!is_used(v1)) vals.push_back(v1);
        }
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        if (vals.size() != fresh.size())
            throw Error("projection: plateau/value count mismatch");

        // Distribute values to arcs: anchored at the first existing plateau,
        // the new arcs in each gap take the new values in the matching value
        // gap, in cyclic order. Monotonicity of the projection forces this.
        const mpq_class anchor_s = arcs_[0].start;
        const mpq_class anchor_v = arcs_[0].value;
        std::sort(fresh.begin(), fresh.end(), [&](const Cand& x, const Cand& y) {
            return cyc_dist(anchor_s, x.start) < cyc_dist(anchor_s, y.start);
        });
        std::sort(vals.begin(), vals.end(), [&](const mpq_class& x, const mpq_class& y) {
            return cyc_dist(anchor_v, x) < cyc_dist(anchor_v, y);
        });
        const std::size_t m = arcs_.size();
        std::size_t ai = 0, vi = 0;
        std::vector<Arc> added;
        added.reserve(fresh.size());
        for (std::size_t i = 0; i < m; ++i) {
            mpq_class gap_hi_s = (i + 1 < m) ? cyc_dist(anchor_s, arcs_[i + 1].start) : mpq_class(1);
            mpq_class gap_hi_v = (i + 1 < m) ? cyc_dist(anchor_v, arcs_[i + 1].value) : mpq_class(1);
            std::size_t a0 = ai, v0 = vi;
            while (ai < fresh.size() && cyc_dist(anchor_s, fresh[ai].start) < gap_hi_s) ++ai;
            while (vi < vals.size() && cyc_dist(anchor_v, vals[vi]) < gap_hi_v) ++vi;
            if (ai - a0 != vi - v0) throw Error("projection: gap assignment mismatch");
            for (std::size_t j = 0; j < ai - a0; ++j)
                added.push_back({fresh[a0 + j].start, fresh[a0 + j].length, vals[v0 + j], n});
        }
        if (ai != fresh.size() || vi != vals.size())
            throw Error("projection: unassigned plateaus");
        arcs_.insert(arcs_.end(), added.begin(), added.end());
        std::sort(arcs_.begin(), arcs_.end(),
                  [](const Arc& a, const Arc& b) { return a.start < b.start; });
    }
}

void Projection::build(const SimulatingPair& sp) {
    Arc root;
    root.start = to_q(sp.x_k);
    root.length = to_q(sp.y_k) - to_q(sp.x_k);
    root.value = to_q(sp.t);
    root.level = 0;
    arcs_.push_back(root);
}

ProjectionResult Projection::eval(const Angle& theta) const {
    const mpq_class th = to_q(theta);
    // predecessor arc in cyclic start-order
    auto it = std::upper_bound(arcs_.begin(), arcs_.end(), th,
                               [](const mpq_class& v, const Arc& a) { return v < a.start; });
    std::size_t prev = (it == arcs_.begin()) ? arcs_.size() - 1 : (it - arcs_.begin()) - 1;
    const Arc& below = arcs_[prev];
    ProjectionResult r;
    if (cyc_dist(below.start, th) <= below.length) {
        r.plateau = true;
        r.value = to_angle(below.value);
        return r;
    }
    const Arc& above = arcs_[(prev + 1) % arcs_.size()];
    r.plateau = false;
    r.lo = to_angle(below.value);
    r.hi = to_angle(above.value);
    return r;
}

ProjectionResult project_angle(const SimulatingPair& sp, const Angle& theta, int depth) {
    return Projection(sp, depth).eval(theta);
}

std::optional<Angle> complementary_angle(const Angle& t) {
    Orbit orb = forward_orbit(2, t);
    CyclicPerm sigma = combinatorics(orb);
    if (degree(sigma) != 1) return std::nullopt;
    long q = (long)orb.size();
    long k = orb.index_of(t) + 1;
    return orb[(std::size_t)(q - k + 1) - 1];
}

bool verify_nothird(const CyclicPerm& sigma, long k) {
    auto reals = realizations_ordered(sigma);
    const long q = (long)sigma.size();
    if (k < 1 || k > q) throw Error("verify_nothird: bad index k");
    const Angle xk = reals[(std::size_t)k][(std::size_t)k - 1];
    const Angle yk = reals[(std::size_t)k - 1][(std::size_t)k - 1];
    for (long j = 0; j <= q; ++j) {
        if (j == k || j == k - 1) continue;
        bool hit = false;
        for (const auto& a : reals[(std::size_t)j].angles)
            if (in_open_arc(a, xk, yk)) { hit = true; break; }
        if (!hit) return false;
    }
    return true;
}

} // namespace limbs
