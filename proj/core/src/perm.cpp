#include "limbs/perm.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

namespace limbs {

bool CyclicPerm::is_permutation() const {
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
        if (v < 1 || v > (int)images.size() || seen[v - 1]) return false;
        seen[v - 1] = true;
    }
    return true;
}

bool CyclicPerm::is_single_cycle() const {
    if (!is_permutation() || images.empty()) return false;
    std::size_t n = 0;
    int i = 1;
    do {
        i = images[i - 1];
        ++n;
    } while (i != 1 && n <= images.size());
    return n == images.size();
}

std::string CyclicPerm::cycle_str() const {
    const int q = (int)images.size();
    std::vector<bool> seen(q, false);
    std::ostringstream os;
    for (int start = 1; start <= q; ++start) {
        if (seen[start - 1]) continue;
        std::vector<int> cyc;
        int i = start;
        do {
            seen[i - 1] = true;
            cyc.push_back(i);
            i = images[i - 1];
        } while (i != start);
        if (cyc.size() == 1 && q > 1) continue;  // drop fixed points in products
        os << "(";
        for (std::size_t j = 0; j < cyc.size(); ++j) {
            if (j) os << " ";
            os << cyc[j];
        }
        os << ")";
    }
    std::string s = os.str();
    return s.empty() ? "()" : s;
}

CyclicPerm CyclicPerm::from_cycle(const std::vector<int>& cycle, int q) {
    int n = q;
    for (int v : cycle) n = std::max(n, v);
    CyclicPerm s;
    s.images.resize(n);
    std::iota(s.images.begin(), s.images.end(), 1);
    for (std::size_t i = 0; i < cycle.size(); ++i)
        s.images[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
    if (!s.is_permutation()) throw ParseError("bad cycle");
    return s;
}

CyclicPerm CyclicPerm::parse(const std::string& text) {
    std::string t = text;
    while (!t.empty() && std::isspace((unsigned char)t.front())) t.erase(t.begin());
    while (!t.empty() && std::isspace((unsigned char)t.back())) t.pop_back();
    if (t.empty()) throw ParseError("empty permutation");
    auto parse_ints = [&](const std::string& body) {
        std::vector<int> out;
        std::string cur;
        for (char c : body) {
            if (c == ',' || std::isspace((unsigned char)c)) {
                if (!cur.empty()) out.push_back(std::stoi(cur));
                cur.clear();
            } else if (std::isdigit((unsigned char)c)) {
                cur += c;
            } else {
                throw ParseError("bad permutation: " + text);
            }
        }
        if (!cur.empty()) out.push_back(std::stoi(cur));
        return out;
    };
    try {
        if (t.front() == '[' && t.back() == ']') {
            CyclicPerm s;
            s.images = parse_ints(t.substr(1, t.size() - 2));
            if (!s.is_permutation()) throw ParseError("not a permutation: " + text);
            return s;
        }
        if (t.front() == '(' && t.back() == ')') {
            std::string body = t.substr(1, t.size() - 2);
            std::vector<int> cyc;
            if (body.find(',') != std::string::npos ||
                body.find(' ') != std::string::npos) {
                cyc = parse_ints(body);
            } else {
                // "(1243)" single-digit entries
                for (char c : body) {
                    if (!std::isdigit((unsigned char)c)) throw ParseError("bad cycle: " + text);
                    cyc.push_back(c - '0');
                }
            }
            return from_cycle(cyc);
        }
    } catch (const std::invalid_argument&) {
        throw ParseError("bad permutation: " + text);
    }
    throw ParseError("bad permutation: " + text);
}

CyclicPerm combinatorics(const Orbit& orbit) {
    CyclicPerm s;
    s.images.reserve(orbit.size());
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        long j = orbit.index_of(mul_map(orbit.base, orbit[i]));
        if (j < 0) throw Error("combinatorics: orbit not invariant");
        s.images.push_back((int)j + 1);
    }
    return s;
}

int degree(const CyclicPerm& sigma) {
    const int q = (int)sigma.size();
    if (q <= 1) return 1;
    int d = 0;
    for (int i = 1; i <= q; ++i)
        if (sigma(i) > sigma(i % q + 1)) ++d;
    return d;
}

std::optional<Angle> rotation_number(const CyclicPerm& sigma) {
    const int q = (int)sigma.size();
    if (q == 1) return Angle(0, 1);
    int p = sigma(1) - 1;
    for (int i = 1; i <= q; ++i)
        if (sigma(i) != (i - 1 + p) % q + 1) return std::nullopt;
    if (std::gcd(p, q) != 1) return std::nullopt;
    return Angle(p, q);
}

static BigInt binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
    return r;
}

BigInt count_realizations(const CyclicPerm& sigma, long k) {
    const long q = (long)sigma.size();
    const int d = degree(sigma);
    if (k < d) throw DegreeTooHigh("count_realizations: m_" + std::to_string(k) +
                                   " cannot realize degree " + std::to_string(d));
    if (k < 2) throw DegreeTooHigh("count_realizations: k must be >= 2");
    if (q >= 2 && sigma((int)q) > sigma(1)) return binom(q + k - d, q);
    return binom(q + k - d - 1, q);
}

std::vector<Orbit> enumerate_realizations(const CyclicPerm& sigma, long k,
                                          const RealizationOptions& opt) {
    const long q = (long)sigma.size();
    if (!sigma.is_single_cycle() && q != 1)
        throw Error("enumerate_realizations: sigma must be a single cycle");
    if (q * std::log2((double)k) > std::log2(opt.max_points))
        throw InstanceTooLarge("enumerate_realizations: k^q exceeds the enumeration bound");
    BigInt D;
    mpz_ui_pow_ui(D.get_mpz_t(), (unsigned long)k, (unsigned long)q);
    D -= 1;

    std::vector<Orbit> found;
    // Periodic points of period dividing q are exactly the p/(k^q - 1); visit
    // each orbit once via its smallest representative.
    for (BigInt p(0); p < D; ++p) {
        Angle t(p, D);
        Orbit orb = forward_orbit(k, t);
        if ((long)orb.size() != q) continue;
        if (!(orb[0] == t)) continue;  // canonical representative only
        if (combinatorics(orb) == sigma) found.push_back(std::move(orb));
    }

    const Angle half(1, 2);
    auto deploy = [&](const Orbit& o) {
        int c = 0;
        for (const auto& a : o.angles)
            if (a < half) ++c;
        return c;
    };
    std::sort(found.begin(), found.end(), [&](const Orbit& a, const Orbit& b) {
        int da = deploy(a), db = deploy(b);
        if (da != db) return da < db;
        return a.angles < b.angles;
    });
    return found;
}

MultiPerm union_combinatorics(const std::vector<Orbit>& orbits) {
    if (orbits.empty()) throw Error("union_combinatorics: no orbits");
    long k = orbits[0].base;
    std::vector<Angle> all;
    for (const auto& o : orbits) {
        if (o.base != k) throw Error("union_combinatorics: mixed map bases");
        all.insert(all.end(), o.angles.begin(), o.angles.end());
    }
    std::sort(all.begin(), all.end());
    for (std::size_t i = 1; i < all.size(); ++i)
        if (all[i] == all[i - 1])
            throw OverlappingOrbits("union_combinatorics: orbits share the angle " + all[i].str());
    Orbit merged;
    merged.base = k;
    merged.angles = std::move(all);
    return combinatorics(merged);
}

std::optional<ReductionCertificate> dynamically_reducible(const CyclicPerm& sigma) {
    const int q = (int)sigma.size();
    if (!sigma.is_single_cycle()) return std::nullopt;
    auto power = [&](int p) {
        std::vector<int> im((std::size_t)q);
        for (int i = 1; i <= q; ++i) {
            int v = i;
            for (int j = 0; j < p; ++j) v = sigma(v);
            im[i - 1] = v;
        }
        return im;
    };
    for (int p = 1; p < q; ++p) {
        if (q % p != 0) continue;
        const int r = q / p;
        auto sp = power(p);
        // sigma^p always splits into p cycles of length r; require each to be
        // a rotation r-cycle of the same rotation number s/r on its support.
        std::vector<std::vector<int>> cycles;
        std::vector<bool> seen((std::size_t)q, false);
        int s_common = -1;
        bool ok = true;
        for (int start = 1; ok && start <= q; ++start) {
            if (seen[start - 1]) continue;
            std::vector<int> supp;
            int i = start;
            do {
                seen[i - 1] = true;
                supp.push_back(i);
                i = sp[i - 1];
            } while (i != start);
            if ((int)supp.size() != r) { ok = false; break; }
            std::sort(supp.begin(), supp.end());
            // rotation condition on the sorted support
            int s = -1;
            for (int j = 0; ok && j < r; ++j) {
                int img = sp[supp[j] - 1];
                int pos = (int)(std::find(supp.begin(), supp.end(), img) - supp.begin());
                int shift = (pos - j + r) % r;
                if (s < 0) s = shift;
                else if (s != shift) ok = false;
            }
            if (!ok) break;
            if (s_common < 0) s_common = s;
            else if (s_common != s) ok = false;
            cycles.push_back(std::move(supp));
        }
        if (!ok || std::gcd(s_common, r) != 1) continue;
        // pairwise unlinked: support A inside one gap of support B
        auto unlinked = [&](const std::vector<int>& A, const std::vector<int>& B) {
            for (std::size_t g = 0; g < B.size(); ++g) {
                int lo = B[g], hi = B[(g + 1) % B.size()];
                bool all_in = true;
                for (int x : A) {
                    int d = ((x - lo) % q + q) % q;
                    int w = ((hi - lo) % q + q) % q;
                    if (w == 0) w = q;
                    if (!(d > 0 && d < w)) { all_in = false; break; }
                }
                if (all_in) return true;
            }
            return false;
        };
        for (std::size_t i = 0; ok && i < cycles.size(); ++i)
            for (std::size_t j = i + 1; ok && j < cycles.size(); ++j)
                if (!unlinked(cycles[i], cycles[j])) ok = false;
        if (!ok) continue;
        ReductionCertificate cert;
        cert.p = p;
        cert.r = r;
        cert.rotation = Angle(s_common, r);
        cert.cycles = std::move(cycles);
        return cert;
    }
    return std::nullopt;
}

} // namespace limbs
