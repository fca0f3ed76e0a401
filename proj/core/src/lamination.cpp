#include "limbs/lamination.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace limbs {

bool PartnerTable::crosses_existing(const Angle& a, const Angle& b) const {
    for (const auto& c : chords_) {
        bool ina = in_open_arc(c.a, a, b);
        bool inb = in_open_arc(c.b, a, b);
        if (ina != inb) return true;
    }
    return false;
}

void PartnerTable::build_to(int q) {
    for (int n = built_ + 1; n <= q; ++n) {
        BigInt D;
        mpz_ui_pow_ui(D.get_mpz_t(), 2, (unsigned long)n);
        D -= 1;
        std::vector<Angle> angs;
        for (BigInt p(1); p < D; ++p) {
            Angle t(p, D);
            if (period(2, t) == n) angs.push_back(t);
        }
        std::sort(angs.begin(), angs.end());
        // smallest-first greedy: pair the least unpaired angle with the least
        // unpaired angle it can reach without crossing any chord
        std::vector<bool> paired(angs.size(), false);
        for (std::size_t i = 0; i < angs.size(); ++i) {
            if (paired[i]) continue;
            bool found = false;
            for (std::size_t j = i + 1; j < angs.size(); ++j) {
                if (paired[j]) continue;
                if (!crosses_existing(angs[i], angs[j])) {
                    chords_.push_back({angs[i], angs[j], n});
                    paired[i] = paired[j] = true;
                    found = true;
                    break;
                }
            }
            if (!found) throw Error("partner table: unpairable angle " + angs[i].str());
        }
        built_ = n;
    }
}

std::vector<PartnerPair> PartnerTable::pairs_of_period(int q) {
    build_to(q);
    std::vector<PartnerPair> out;
    for (const auto& c : chords_)
        if (c.period == q) out.push_back({c.a, c.b});
    std::sort(out.begin(), out.end(),
              [](const PartnerPair& x, const PartnerPair& y) { return x.t < y.t; });
    return out;
}

Angle PartnerTable::partner(const Angle& t) {
    if (t.is_zero()) throw ZeroAngle("m_partner: t = 0 has no partner");
    int q = (int)period(2, t);
    build_to(q);
    for (const auto& c : chords_) {
        if (c.a == t) return c.b;
        if (c.b == t) return c.a;
    }
    throw Error("m_partner: angle not found in table");
}

static PartnerTable& shared_table() {
    static PartnerTable table;
    return table;
}
static std::mutex table_mutex;

Angle m_partner(const Angle& t) {
    std::lock_guard<std::mutex> lock(table_mutex);
    return shared_table().partner(t);
}

std::optional<std::pair<int, int>> partner_pair_in_orbit(const Orbit& orbit) {
    std::optional<std::pair<int, int>> found;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        if (orbit[i].is_zero()) continue;
        Angle h = m_partner(orbit[i]);
        long j = orbit.index_of(h);
        if (j < 0 || (std::size_t)j <= i) continue;
        if (found) throw Error("partner_pair_in_orbit: second pair found");
        found = std::make_pair((int)i + 1, (int)j + 1);
    }
    return found;
}

const char* portrait_type_name(PortraitType t) {
    switch (t) {
        case PortraitType::Trivial: return "trivial";
        case PortraitType::Primitive: return "primitive";
        case PortraitType::Satellite: return "satellite";
    }
    return "?";
}

// Shortest arc in the complement of the classes; bounded by a partner pair.
static std::optional<std::pair<Angle, Angle>> characteristic_arc_of(
    const std::vector<std::vector<Angle>>& classes) {
    std::optional<std::pair<Angle, Angle>> best;
    Angle best_len;
    for (const auto& cls : classes) {
        if (cls.size() < 2) continue;
        for (std::size_t i = 0; i < cls.size(); ++i) {
            const Angle& a = cls[i];
            const Angle& b = cls[(i + 1) % cls.size()];
            Angle len = arc_length(a, b);
            if (!best || len < best_len) {
                best = std::make_pair(a, b);
                best_len = len;
            }
        }
    }
    return best;
}

std::optional<MergePrediction> predict_merging(const CyclicPerm& sigma) {
    auto cert = dynamically_reducible(sigma);
    if (!cert) return std::nullopt;
    auto reals = enumerate_realizations(sigma, 2);
    if (reals.size() != 1) throw NotM2Combinatorics("predict_merging: no unique m_2 realization");
    const Orbit& orb = reals[0];

    MergePrediction mp;
    mp.p = cert->p;
    mp.r = cert->r;
    mp.rotation = cert->rotation;
    mp.portrait.type = PortraitType::Satellite;
    mp.portrait.orbit_period = cert->p;
    mp.portrait.ray_period = (long)sigma.size();
    mp.portrait.rotation = cert->rotation;
    for (const auto& supp : cert->cycles) {
        std::vector<Angle> cls;
        for (int idx : supp) cls.push_back(orb[(std::size_t)idx - 1]);
        std::sort(cls.begin(), cls.end());
        mp.portrait.classes.push_back(std::move(cls));
    }
    mp.portrait.characteristic_arc = characteristic_arc_of(mp.portrait.classes);
    return mp;
}

// The wake arc of a partner chord: the side not containing the angle 0.
static std::pair<Angle, Angle> wake_arc(const Angle& a, const Angle& b) {
    if (in_open_arc(Angle(0, 1), a, b) || a.is_zero()) return {b, a};
    return {a, b};
}

static bool arc_subset(const std::pair<Angle, Angle>& inner, const std::pair<Angle, Angle>& outer) {
    // [inner] inside [outer], endpoints allowed to coincide; all lengths are
    // < 1 so the comparison must avoid mod-1 wraps
    Angle wi = arc_length(inner.first, inner.second);
    Angle wo = arc_length(outer.first, outer.second);
    if (wo < wi) return false;
    Angle off = arc_length(outer.first, inner.first);
    return off <= (wo - wi);
}

Portrait portrait_for_limb(const Orbit& orbit, const PartnerPair& limb) {
    if (m_partner(limb.t) != limb.t_hat)
        throw Error("portrait_for_limb: limb angles are not partners");
    const long q = (long)orbit.size();
    auto limb_arc = wake_arc(limb.t, limb.t_hat);

    // innermost orbit pair whose wake contains the limb
    std::optional<std::pair<Angle, Angle>> active;  // (t_i, partner)
    Angle active_width;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        if (orbit[i].is_zero()) continue;
        Angle h = m_partner(orbit[i]);
        auto wa = wake_arc(orbit[i], h);
        if (!arc_subset(limb_arc, wa)) continue;
        Angle w = arc_length(wa.first, wa.second);
        if (!active || w < active_width) {
            active = std::make_pair(orbit[i], h);
            active_width = w;
        }
    }

    Portrait port;
    port.ray_period = q;
    if (!active) {
        port.type = PortraitType::Trivial;
        port.orbit_period = q;
        port.rotation = Angle(0, 1);
        for (const auto& a : orbit.angles) port.classes.push_back({a});
        return port;
    }
    const Angle& ta = active->first;
    const Angle& th = active->second;
    if (orbit.contains(th)) {
        // satellite: grouped by the reduction of the orbit's combinatorics
        CyclicPerm sigma = combinatorics(orbit);
        auto mp = predict_merging(sigma);
        if (!mp) throw Error("portrait_for_limb: satellite pair without reduction");
        Portrait p = mp->portrait;
        return p;
    }
    // primitive: classes are the m_2-images of the active chord
    port.type = PortraitType::Primitive;
    port.orbit_period = q;
    port.rotation = Angle(0, 1);
    Angle a = ta, b = th;
    for (long j = 0; j < q; ++j) {
        std::vector<Angle> cls{a, b};
        std::sort(cls.begin(), cls.end());
        port.classes.push_back(std::move(cls));
        a = mul_map(2, a);
        b = mul_map(2, b);
    }
    std::sort(port.classes.begin(), port.classes.end());
    port.characteristic_arc = characteristic_arc_of(port.classes);
    return port;
}

std::optional<Orbit> third_cycle(const Angle& t, const PartnerPair& limb) {
    SimulatingPair sp = simulating_pair(t);
    Portrait port = portrait_for_limb(sp.orbit_t, limb);
    if (port.type != PortraitType::Primitive)
        throw NotPrimitive("third_cycle: limb portrait is " +
                           std::string(portrait_type_name(port.type)));
    const long q = sp.q();

    // s_i: the partner-orbit angle sharing t_i's class
    std::map<Angle, Angle> s_of_t;
    for (const auto& cls : port.classes) {
        const Angle& a = cls[0];
        const Angle& b = cls[1];
        if (sp.orbit_t.contains(a) && !sp.orbit_t.contains(b)) s_of_t.emplace(a, b);
        else if (sp.orbit_t.contains(b) && !sp.orbit_t.contains(a)) s_of_t.emplace(b, a);
        else throw Error("third_cycle: malformed primitive classes");
    }

    Projection proj(sp, (int)(2 * q));

    auto bracket_hits = [&](const Angle& u, Angle& out) {
        ProjectionResult r = proj.eval(u);
        if (r.plateau) return false;
        Angle width = arc_length(r.lo, r.hi);
        int hits = 0;
        for (const auto& kv : s_of_t) {
            const Angle& s = kv.second;
            Angle d = arc_length(r.lo, s);
            if (!d.is_zero() && d < width) {
                out = s;
                ++hits;
            }
        }
        return hits == 1;
    };

    auto unlinked = [&](const std::vector<Angle>& A, const std::vector<Angle>& B) {
        for (std::size_t g = 0; g < B.size(); ++g) {
            const Angle& lo = B[g];
            const Angle& hi = B[(g + 1) % B.size()];
            bool all = true;
            for (const auto& x : A)
                if (!in_open_arc(x, lo, hi)) { all = false; break; }
            if (all) return true;
        }
        return false;
    };

    BigInt D;
    mpz_ui_pow_ui(D.get_mpz_t(), 3, (unsigned long)q);
    D -= 1;
    std::vector<Orbit> found;
    for (BigInt p(0); p < D; ++p) {
        Angle u0(p, D);
        Orbit orb = forward_orbit(3, u0);
        if ((long)orb.size() != q || !(orb[0] == u0)) continue;
        bool meets = false;
        for (const auto& u : orb.angles)
            if (sp.ox.contains(u) || sp.oy.contains(u)) { meets = true; break; }
        if (meets) continue;

        std::map<Angle, Angle> assigned;  // u -> s
        bool ok = true;
        for (const auto& u : orb.angles) {
            Angle s;
            if (!bracket_hits(u, s)) { ok = false; break; }
            assigned.emplace(u, s);
        }
        if (!ok) continue;
        for (const auto& u : orb.angles) {
            if (assigned[mul_map(3, u)] != mul_map(2, assigned[u])) { ok = false; break; }
        }
        if (!ok) continue;

        // non-crossing: classes {x_i, y_i, u_i} pairwise unlinked
        std::map<Angle, Angle> u_of_s;
        for (const auto& kv : assigned) u_of_s.emplace(kv.second, kv.first);
        std::vector<std::vector<Angle>> triples;
        for (long i = 1; i <= q; ++i) {
            const Angle& ti = sp.orbit_t[(std::size_t)i - 1];
            auto it = s_of_t.find(ti);
            auto itu = u_of_s.find(it->second);
            if (itu == u_of_s.end()) { ok = false; break; }
            std::vector<Angle> tri{sp.x(i), sp.y(i), itu->second};
            std::sort(tri.begin(), tri.end());
            triples.push_back(std::move(tri));
        }
        if (!ok) continue;
        for (std::size_t i = 0; ok && i < triples.size(); ++i)
            for (std::size_t j = i + 1; ok && j < triples.size(); ++j)
                if (!unlinked(triples[i], triples[j]) || !unlinked(triples[j], triples[i]))
                    ok = false;
        if (ok) found.push_back(std::move(orb));
    }
    if (found.size() > 1) throw Error("third_cycle: search produced multiple orbits");
    if (found.empty()) return std::nullopt;
    return found[0];
}

} // namespace limbs
