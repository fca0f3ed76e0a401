#include "cli_app.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <sstream>

#include "limbs/angle.hpp"
#include "limbs/lamination.hpp"
#include "limbs/lemon.hpp"
#include "limbs/perm.hpp"
#include "limbs/ray.hpp"
#include "limbs/render.hpp"
#include "limbs/simulating.hpp"
#include "limbs/wakes.hpp"

namespace limbs_cli {

using namespace limbs;

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt(Complex z) { return fmt(z.real()) + "," + fmt(z.imag()); }

Complex parse_complex(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw ParseError("bad complex: '" + s + "'");
    try {
        return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw ParseError("bad complex: '" + s + "'");
    }
}

PartnerPair parse_limb(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw ParseError("bad limb pair: '" + s + "'");
    return {Angle::parse(s.substr(0, comma)), Angle::parse(s.substr(comma + 1))};
}

std::string orbit_record(const Orbit& o) {
    std::ostringstream os;
    CyclicPerm sigma = combinatorics(o);
    os << "orbit=" << o.str() << " sigma=" << sigma.cycle_str() << " degree=" << degree(sigma);
    auto rot = rotation_number(sigma);
    os << " rotation=" << (rot ? rot->str() : std::string("none"));
    os << " period=" << o.size();
    return os.str();
}

std::string classes_record(const std::vector<std::vector<Angle>>& classes) {
    std::string s;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (i) s += ";";
        s += format_angle_list(classes[i]);
    }
    return s;
}

struct VerifyStats {
    long checked = 0;
};

void verify_realize_counts(int maxq, std::ostream& out);
void verify_interlace(int maxq, std::ostream& out);
void verify_nothird_all(int maxq, std::ostream& out);
void verify_invol(int maxq, std::ostream& out);
void verify_partner_tables(int maxq, std::ostream& out);
void verify_yoccoz(std::ostream& out);

// all m_2 orbits of exact period q, one canonical representative each
std::vector<Orbit> m2_orbits_of_period(int q) {
    BigInt D;
    mpz_ui_pow_ui(D.get_mpz_t(), 2, (unsigned long)q);
    D -= 1;
    std::vector<Orbit> out;
    for (BigInt p(0); p < D; ++p) {
        Angle t(p, D);
        Orbit o = forward_orbit(2, t);
        if ((long)o.size() != q || !(o[0] == t)) continue;
        out.push_back(std::move(o));
    }
    return out;
}

void verify_realize_counts(int maxq, std::ostream& out) {
    long n = 0;
    for (int q = 1; q <= maxq; ++q) {
        for (const auto& o : m2_orbits_of_period(q)) {
            CyclicPerm sigma = combinatorics(o);
            auto r3 = enumerate_realizations(sigma, 3);
            if ((long)r3.size() != q + 1 || BigInt(r3.size()) != count_realizations(sigma, 3))
                throw Error("realize-counts: mismatch at " + o.str());
            auto r2 = enumerate_realizations(sigma, 2);
            if (r2.size() != 1 || !(r2[0] == o))
                throw Error("realize-counts: m_2 realization not unique at " + o.str());
            ++n;
        }
    }
    out << "OK " << n << " orbits checked\n";
}

void verify_interlace(int maxq, std::ostream& out) {
    long n = 0;
    const Angle half(1, 2);
    const Angle third(1, 3);
    for (int q = 1; q <= maxq; ++q) {
        for (const auto& o : m2_orbits_of_period(q)) {
            CyclicPerm sigma = combinatorics(o);
            auto reals = realizations_ordered(sigma);
            for (long k = 1; k <= q; ++k) {
                const Orbit& ox = reals[(std::size_t)k];
                const Orbit& oy = reals[(std::size_t)k - 1];
                // 0 <= x_1 < y_1 < ... < x_k < 1/2 <= y_k < ... < x_q < y_q < 1
                for (long i = 0; i < q; ++i) {
                    if (!(ox[(std::size_t)i] < oy[(std::size_t)i]))
                        throw Error("interlace: ordering fails");
                    if (i + 1 < q && !(oy[(std::size_t)i] < ox[(std::size_t)i + 1]))
                        throw Error("interlace: ordering fails");
                }
                const Angle xk = ox[(std::size_t)k - 1], yk = oy[(std::size_t)k - 1];
                if (!(xk < half) || half > yk)
                    throw Error("interlace: marked interval misses 1/2");
                // x_k < y'_k < 1/2 < x'_k < y_k (void for the fixed angle)
                if (q >= 2) {
                    const Angle xpk = xk + third, ypk = yk - third;
                    if (!(xk < ypk && ypk < half && half < xpk && xpk < yk))
                        throw Error("interlace: sub-interval ordering fails");
                }
                // interval length formula |I_{sigma^i(k)}| = 3^{i-1}/(3^q-1)
                BigInt D;
                mpz_ui_pow_ui(D.get_mpz_t(), 3, (unsigned long)q);
                D -= 1;
                long idx = k;
                BigInt pw(1);
                for (long i = 1; i <= q; ++i) {
                    idx = sigma((int)idx);
                    if (arc_length(ox[(std::size_t)idx - 1], oy[(std::size_t)idx - 1]) !=
                        Angle(pw, D))
                        throw Error("interlace: interval length fails");
                    pw *= 3;
                }
                ++n;
            }
        }
    }
    out << "OK " << n << " pairs checked\n";
}

void verify_nothird_all(int maxq, std::ostream& out) {
    long n = 0;
    for (int q = 1; q <= maxq; ++q)
        for (const auto& o : m2_orbits_of_period(q)) {
            CyclicPerm sigma = combinatorics(o);
            auto reals = realizations_ordered(sigma);
            for (long k = 1; k <= q; ++k) {
                const Angle xk = reals[(std::size_t)k][(std::size_t)k - 1];
                const Angle yk = reals[(std::size_t)k - 1][(std::size_t)k - 1];
                for (long j = 0; j <= q; ++j) {
                    if (j == k || j == k - 1) continue;
                    bool hit = false;
                    for (const auto& a : reals[(std::size_t)j].angles)
                        if (in_open_arc(a, xk, yk)) { hit = true; break; }
                    if (!hit) throw Error("nothird fails at " + o.str());
                }
                ++n;
            }
        }
    out << "OK " << n << " marked intervals checked\n";
}

void verify_invol(int maxq, std::ostream& out) {
    long n = 0;
    for (int q = 1; q <= maxq; ++q)
        for (const auto& o : m2_orbits_of_period(q)) {
            CyclicPerm sigma = combinatorics(o);
            auto reals = realizations_ordered(sigma);
            bool rot = degree(sigma) == 1;
            for (long k = 0; k <= q; ++k) {
                bool eq = rotated_orbit(reals[(std::size_t)k]) == reals[(std::size_t)(q - k)];
                bool expect = rot || k == 0 || k == q;
                if (eq != expect) throw Error("invol fails at " + o.str());
                ++n;
            }
        }
    out << "OK " << n << " rotations checked\n";
}

void verify_partner_tables(int maxq, std::ostream& out) {
    PartnerTable table;
    table.build_to(maxq);
    long n = 0;
    std::vector<PartnerPair> all;
    for (int q = 2; q <= maxq; ++q) {
        for (const auto& pr : table.pairs_of_period(q)) {
            if (table.partner(pr.t) != pr.t_hat || table.partner(pr.t_hat) != pr.t)
                throw Error("partner-tables: involution fails");
            if (period(2, pr.t) != period(2, pr.t_hat))
                throw Error("partner-tables: period mismatch");
            all.push_back(pr);
            ++n;
        }
    }
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            bool a_in = in_open_arc(all[j].t, all[i].t, all[i].t_hat);
            bool b_in = in_open_arc(all[j].t_hat, all[i].t, all[i].t_hat);
            if (a_in != b_in) throw Error("partner-tables: chords cross");
        }
    out << "OK " << n << " pairs checked\n";
}

void verify_yoccoz(std::ostream& out) {
    Complex a = find_center(Angle(1, 3));
    SimulatingPair sp = simulating_pair(Angle(1, 3));
    ColandResult c = coland_test(lemon_map(a), sp.x_k, sp.y_k, 2);
    if (c.verdict != Verdict::CoLand) throw Error("yoccoz: center rays do not co-land");
    if (!yoccoz_check(*c.multiplier, Angle(0, 1), 2, 3))
        throw Error("yoccoz: multiplier bound fails");
    out << "OK 1 co-landing orbit checked\n";
}

} // namespace

bool parse_check_line(const std::string& line) {
    auto is_float = [](const std::string& s) {
        if (s.empty()) return false;
        char* end = nullptr;
        std::strtod(s.c_str(), &end);
        return end == s.c_str() + s.size();
    };
    auto is_angle = [](const std::string& s) {
        try {
            Angle::parse(s);
            return true;
        } catch (const Error&) {
            return false;
        }
    };
    auto is_complex = [&](const std::string& s) {
        auto comma = s.find(',');
        return comma != std::string::npos && is_float(s.substr(0, comma)) &&
               is_float(s.substr(comma + 1));
    };
    auto is_angle_list = [&](const std::string& s) {
        // {n1,n2,...}/D
        if (s.size() < 4 || s.front() != '{') return false;
        auto close = s.find('}');
        if (close == std::string::npos || close + 1 >= s.size() || s[close + 1] != '/') return false;
        std::string body = s.substr(1, close - 1);
        std::string den = s.substr(close + 2);
        if (!is_float(den)) return false;
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!is_float(item)) return false;
        return true;
    };
    auto is_perm = [](const std::string& s) {
        try {
            CyclicPerm::parse(s);
            return true;
        } catch (const Error&) {
            return false;
        }
    };
    auto is_value = [&](const std::string& v) {
        if (v.empty()) return true;
        if (is_float(v) || is_angle(v) || is_complex(v) || is_perm(v)) return true;
        // class lists: angle-lists joined by ';'
        std::stringstream ss(v);
        std::string part;
        bool all = true, any = false;
        while (std::getline(ss, part, ';')) {
            any = true;
            if (!is_angle_list(part)) all = false;
        }
        if (any && all) return true;
        // bare words (status names, file paths)
        for (char c : v)
            if (std::isspace((unsigned char)c)) return false;
        return true;
    };

    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string tok;
    while (is >> tok) toks.push_back(tok);
    if (toks.empty()) return true;
    if (toks[0] == "OK") return true;
    // "p1/q1 <-> p2/q2"
    if (toks.size() == 3 && toks[1] == "<->") return is_angle(toks[0]) && is_angle(toks[2]);
    // numeric rows: "s re im" / "re im" / bare count
    bool allnum = true;
    for (const auto& t : toks)
        if (!is_float(t)) allnum = false;
    if (allnum) return true;
    // key=value records
    for (const auto& t : toks) {
        auto eq = t.find('=');
        if (eq == std::string::npos || eq == 0) return false;
        if (!is_value(t.substr(eq + 1))) return false;
    }
    return true;
}

namespace {

int run_impl(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"exact combinatorics and numerics of lemon limbs of cubic polynomials", "limbs"};
    app.require_subcommand(0, 1);

    bool parse_check = false;
    app.add_flag("--parse-check", parse_check, "validate stdin lines against the record grammar");

    // ---- orbits ----
    auto* orbits = app.add_subcommand("orbits", "orbits of the multiplication maps");
    long orbits_k = 2;
    std::string orbits_angle;
    int orbits_period = 0;
    orbits->add_option("--k", orbits_k, "map base k >= 2");
    orbits->add_option("--angle", orbits_angle, "angle p/q");
    orbits->add_option("--period", orbits_period, "list all orbits of this exact period");

    // ---- simulate ----
    auto* simulate = app.add_subcommand("simulate", "simulating pair of an m_2-periodic angle");
    std::string sim_t;
    simulate->add_option("--t", sim_t, "angle p/q")->required();

    // ---- realize ----
    auto* realize = app.add_subcommand("realize", "realizations of a cyclic permutation");
    std::string rz_sigma;
    long rz_k = 3;
    bool rz_count = false;
    realize->add_option("--sigma", rz_sigma, "cycle, e.g. \"(1243)\"")->required();
    realize->add_option("--k", rz_k, "map base");
    realize->add_flag("--count", rz_count, "print the count only");

    // ---- partners ----
    auto* partners = app.add_subcommand("partners", "partner pairs of periodic angles");
    int pt_period = 0;
    partners->add_option("--period", pt_period, "exact period")->required();

    // ---- portrait ----
    auto* portrait = app.add_subcommand("portrait", "portrait classification for a limb");
    std::string po_orbit, po_limb;
    portrait->add_option("--orbit", po_orbit, "any angle of the orbit")->required();
    portrait->add_option("--limb", po_limb, "limb pair t,that")->required();

    // ---- reduce ----
    auto* reduce = app.add_subcommand("reduce", "merging prediction for a permutation");
    std::string rd_sigma;
    reduce->add_option("--sigma", rd_sigma, "cycle notation")->required();

    // ---- third-cycle ----
    auto* third = app.add_subcommand("third-cycle", "third ray cycle for a primitive limb");
    std::string tc_t, tc_limb;
    third->add_option("--t", tc_t, "marked angle")->required();
    third->add_option("--limb", tc_limb, "limb pair t,that")->required();

    // ---- trace-ray ----
    auto* trace = app.add_subcommand("trace-ray", "trace one dynamic external ray");
    std::string tr_a = "0,0", tr_b = "0,0", tr_angle;
    double tr_send = 1e-6;
    trace->add_option("--a", tr_a, "coefficient a as re,im");
    trace->add_option("--b", tr_b, "coefficient b as re,im");
    trace->add_option("--angle", tr_angle, "ray angle p/q")->required();
    trace->add_option("--s-end", tr_send, "final potential");

    // ---- coland ----
    auto* coland = app.add_subcommand("coland", "co-landing test for two rays");
    std::string cl_a = "0,0", cl_b = "0,0", cl_t1, cl_t2;
    int cl_q = 1;
    coland->add_option("--a", cl_a, "coefficient a");
    coland->add_option("--b", cl_b, "coefficient b");
    coland->add_option("--theta1", cl_t1, "first angle")->required();
    coland->add_option("--theta2", cl_t2, "second angle")->required();
    coland->add_option("--q", cl_q, "period to refine against")->required();

    // ---- lemon ----
    auto* lemon = app.add_subcommand("lemon", "the a -> z^3+3az^2 slice");
    auto* lboundary = lemon->add_subcommand("boundary", "boundary point of the central component");
    std::string lb_t;
    lboundary->add_option("--t", lb_t, "internal angle p/q")->required();
    auto* lray = lemon->add_subcommand("ray", "parameter ray");
    std::string lr_xi;
    double lr_send = 1e-5;
    lray->add_option("--xi", lr_xi, "external angle p/q")->required();
    lray->add_option("--s-end", lr_send, "final potential");
    auto* lcenter = lemon->add_subcommand("center", "superattracting center of a limb");
    std::string lc_t, lc_seed;
    lcenter->add_option("--t", lc_t, "internal angle p/q")->required();
    lcenter->add_option("--seed", lc_seed, "Newton seed re,im");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "exhaustive oracle suites");
    verify->fallthrough();
    int vf_maxq = 6;
    verify->add_option("--max-period", vf_maxq, "largest period checked");
    auto* v_realize = verify->add_subcommand("realize-counts", "counts match enumeration");
    auto* v_inter = verify->add_subcommand("interlace", "interlacing and deployment");
    auto* v_nothird = verify->add_subcommand("nothird", "marked interval meets other orbits");
    auto* v_invol = verify->add_subcommand("invol", "rotated-orbit involution");
    auto* v_partner = verify->add_subcommand("partner-tables", "pairing invariants");
    auto* v_yoccoz = verify->add_subcommand("yoccoz", "multiplier bound at a known center");
    auto* v_lren = verify->add_subcommand("lren", "renormalization locus membership");
    std::string vl_a = "0,0", vl_b = "0,0", vl_t;
    int vl_n = 100;
    v_lren->add_option("--a", vl_a, "coefficient a");
    v_lren->add_option("--b", vl_b, "coefficient b");
    v_lren->add_option("--t", vl_t, "limb angle p/q");
    v_lren->add_option("--n", vl_n, "orbit length bound");
    auto* v_all = verify->add_subcommand("all", "run every suite");

    // ---- examples ----
    auto* examples = app.add_subcommand("examples", "named cubic maps");
    auto* ex_cheb = examples->add_subcommand("cheb-basilica", "intertwined z^2-2 and z^2-1");

    // ---- render ----
    auto* render = app.add_subcommand("render", "deterministic PPM images");
    auto add_render_common = [&](CLI::App* sub, std::string& center, double& hw, std::string& res,
                                 std::string& outfile, std::vector<std::string>& rays,
                                 int& threads) {
        sub->add_option("--center", center, "window center re,im");
        sub->add_option("--half-width", hw, "window half width");
        sub->add_option("--res", res, "WxH");
        sub->add_option("--out", outfile, "output .ppm path")->required();
        sub->add_option("--ray", rays, "overlay ray angle p/q (repeatable)");
        sub->add_option("--threads", threads, "worker threads (0 = hardware)");
    };
    auto* rjulia = render->add_subcommand("julia", "dynamical plane");
    std::string rj_a = "0,0", rj_b = "0,0", rj_center = "0,0", rj_res = "512x512", rj_out;
    double rj_hw = 1.6;
    int rj_threads = 0;
    std::vector<std::string> rj_rays;
    rjulia->add_option("--a", rj_a, "coefficient a");
    rjulia->add_option("--b", rj_b, "coefficient b");
    add_render_common(rjulia, rj_center, rj_hw, rj_res, rj_out, rj_rays, rj_threads);
    auto* rparam = render->add_subcommand("param", "lemon-family parameter plane");
    std::string rp_center = "0,0", rp_res = "512x512", rp_out;
    double rp_hw = 1.2;
    int rp_threads = 0;
    std::vector<std::string> rp_rays;
    add_render_common(rparam, rp_center, rp_hw, rp_res, rp_out, rp_rays, rp_threads);

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    if (parse_check) {
        std::string line;
        long bad = 0, n = 0;
        while (std::getline(in, line)) {
            ++n;
            if (!parse_check_line(line)) {
                ++bad;
                out << "bad line " << n << ": " << line << "\n";
            }
        }
        if (bad) throw Error("parse-check: " + std::to_string(bad) + " bad lines");
        out << "OK " << n << " lines parsed\n";
        return 0;
    }

    if (orbits->parsed()) {
        if (!orbits_angle.empty()) {
            out << orbit_record(forward_orbit(orbits_k, Angle::parse(orbits_angle))) << "\n";
        } else if (orbits_period > 0) {
            BigInt D;
            mpz_ui_pow_ui(D.get_mpz_t(), (unsigned long)orbits_k, (unsigned long)orbits_period);
            D -= 1;
            for (BigInt p(0); p < D; ++p) {
                Angle t(p, D);
                Orbit o = forward_orbit(orbits_k, t);
                if ((long)o.size() != orbits_period || !(o[0] == t)) continue;
                out << orbit_record(o) << "\n";
            }
        } else {
            throw ParseError("orbits: need --angle or --period");
        }
        return 0;
    }
    if (simulate->parsed()) {
        SimulatingPair sp = simulating_pair(Angle::parse(sim_t));
        out << "t=" << sp.t.str() << " k=" << sp.k << " x=" << sp.x_k.str() << " y=" << sp.y_k.str()
            << " x'=" << sp.xprime_k.str() << " y'=" << sp.yprime_k.str() << " Ox=" << sp.ox.str()
            << " Oy=" << sp.oy.str() << "\n";
        return 0;
    }
    if (realize->parsed()) {
        CyclicPerm sigma = CyclicPerm::parse(rz_sigma);
        if (rz_count) {
            out << count_realizations(sigma, rz_k).get_str() << "\n";
        } else {
            auto reals = enumerate_realizations(sigma, rz_k);
            for (std::size_t i = 0; i < reals.size(); ++i)
                out << "O" << i << "=" << reals[i].str() << "\n";
        }
        return 0;
    }
    if (partners->parsed()) {
        PartnerTable table;
        for (const auto& pr : table.pairs_of_period(pt_period))
            out << pr.t.str() << " <-> " << pr.t_hat.str() << "\n";
        return 0;
    }
    if (portrait->parsed()) {
        Orbit o = forward_orbit(2, Angle::parse(po_orbit));
        Portrait p = portrait_for_limb(o, parse_limb(po_limb));
        out << "type=" << portrait_type_name(p.type) << " orbit_period=" << p.orbit_period
            << " ray_period=" << p.ray_period << " rotation=" << p.rotation.str();
        if (p.characteristic_arc)
            out << " arc_lo=" << p.characteristic_arc->first.str()
                << " arc_hi=" << p.characteristic_arc->second.str();
        out << " classes=" << classes_record(p.classes) << "\n";
        return 0;
    }
    if (reduce->parsed()) {
        auto mp = predict_merging(CyclicPerm::parse(rd_sigma));
        if (!mp) {
            out << "reducible=no\n";
        } else {
            out << "reducible=yes p=" << mp->p << " r=" << mp->r
                << " rotation=" << mp->rotation.str()
                << " classes=" << classes_record(mp->portrait.classes);
            if (mp->portrait.characteristic_arc)
                out << " arc_lo=" << mp->portrait.characteristic_arc->first.str()
                    << " arc_hi=" << mp->portrait.characteristic_arc->second.str();
            out << "\n";
        }
        return 0;
    }
    if (third->parsed()) {
        auto orb = third_cycle(Angle::parse(tc_t), parse_limb(tc_limb));
        if (!orb) out << "found=no\n";
        else
            out << "found=yes orbit=" << orb->str()
                << " sigma=" << combinatorics(*orb).cycle_str() << "\n";
        return 0;
    }
    if (trace->parsed()) {
        CubicMap P{parse_complex(tr_a), parse_complex(tr_b)};
        RayTrace r = trace_ray(P, Angle::parse(tr_angle), tr_send);
        for (const auto& [s, z] : r.points)
            out << fmt(s) << " " << fmt(z.real()) << " " << fmt(z.imag()) << "\n";
        out << "status=" << ray_status_name(r.status);
        if (r.landing) out << " landing=" << fmt(*r.landing);
        out << "\n";
        return 0;
    }
    if (coland->parsed()) {
        CubicMap P{parse_complex(cl_a), parse_complex(cl_b)};
        ColandResult r = coland_test(P, Angle::parse(cl_t1), Angle::parse(cl_t2), cl_q);
        out << "verdict=" << verdict_name(r.verdict);
        if (r.point) out << " z=" << fmt(*r.point);
        if (r.point2) out << " z2=" << fmt(*r.point2);
        if (r.multiplier) out << " multiplier=" << fmt(*r.multiplier);
        out << "\n";
        return 0;
    }
    if (lboundary->parsed()) {
        Complex a = boundary_param(Angle::parse(lb_t));
        out << fmt(a.real()) << " " << fmt(a.imag()) << "\n";
        return 0;
    }
    if (lray->parsed()) {
        RayTrace r = param_ray(Angle::parse(lr_xi), lr_send);
        for (const auto& [s, z] : r.points)
            out << fmt(s) << " " << fmt(z.real()) << " " << fmt(z.imag()) << "\n";
        out << "status=" << ray_status_name(r.status);
        if (r.landing) out << " landing=" << fmt(*r.landing);
        out << "\n";
        return 0;
    }
    if (lcenter->parsed()) {
        std::optional<Complex> seed;
        if (!lc_seed.empty()) seed = parse_complex(lc_seed);
        Complex a = find_center(Angle::parse(lc_t), seed);
        out << fmt(a.real()) << " " << fmt(a.imag()) << "\n";
        return 0;
    }
    if (verify->parsed()) {
        bool any = false;
        if (v_realize->parsed() || v_all->parsed()) { verify_realize_counts(vf_maxq, out); any = true; }
        if (v_inter->parsed() || v_all->parsed()) { verify_interlace(vf_maxq, out); any = true; }
        if (v_nothird->parsed() || v_all->parsed()) { verify_nothird_all(vf_maxq, out); any = true; }
        if (v_invol->parsed() || v_all->parsed()) { verify_invol(vf_maxq, out); any = true; }
        if (v_partner->parsed() || v_all->parsed()) { verify_partner_tables(vf_maxq, out); any = true; }
        if (v_yoccoz->parsed() || v_all->parsed()) { verify_yoccoz(out); any = true; }
        if (v_lren->parsed()) {
            CubicMap P{parse_complex(vl_a), parse_complex(vl_b)};
            WakeSystem w = build_wakes(P, Angle::parse(vl_t));
            LocusReport rep = lren_membership(w, vl_n);
            out << "status=" << locus_status_name(rep.status);
            if (rep.status != LocusStatus::InLocus)
                out << " step=" << rep.fail_step << " critical=" << rep.fail_critical;
            out << "\n";
            any = true;
        }
        if (!any) throw ParseError("verify: choose a suite");
        return 0;
    }
    if (ex_cheb->parsed()) {
        CubicMap P = make_chebyshev_basilica();
        out << "a=" << fmt(P.a) << " b=" << fmt(P.b) << "\n";
        return 0;
    }
    auto parse_res = [](const std::string& s, int& w, int& h) {
        auto x = s.find('x');
        if (x == std::string::npos) throw ParseError("bad --res: '" + s + "'");
        w = std::stoi(s.substr(0, x));
        h = std::stoi(s.substr(x + 1));
        if (w <= 0 || h <= 0) throw ParseError("bad --res: '" + s + "'");
    };
    if (rjulia->parsed()) {
        CubicMap P{parse_complex(rj_a), parse_complex(rj_b)};
        int w, h;
        parse_res(rj_res, w, h);
        std::vector<RayTrace> overlays;
        for (const auto& s : rj_rays) overlays.push_back(trace_ray(P, Angle::parse(s), 1e-6));
        RenderOptions opt;
        opt.threads = rj_threads;
        Image img = render_julia(P, Window{parse_complex(rj_center), rj_hw}, w, h, overlays, opt);
        write_ppm(img, rj_out);
        out << "out=" << rj_out << " width=" << w << " height=" << h << "\n";
        return 0;
    }
    if (rparam->parsed()) {
        int w, h;
        parse_res(rp_res, w, h);
        std::vector<RayTrace> overlays;
        for (const auto& s : rp_rays) overlays.push_back(param_ray(Angle::parse(s), 1e-4));
        RenderOptions opt;
        opt.threads = rp_threads;
        Image img = render_param_lemon(Window{parse_complex(rp_center), rp_hw}, w, h, overlays, opt);
        write_ppm(img, rp_out);
        out << "out=" << rp_out << " width=" << w << " height=" << h << "\n";
        return 0;
    }
    out << app.help();
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    try {
        return run_impl(args, in, out, err);
    } catch (const limbs::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const limbs::Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace limbs_cli
