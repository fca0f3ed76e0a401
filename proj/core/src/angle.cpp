#include "limbs/angle.hpp"

#include <algorithm>
#include <sstream>

namespace limbs {

Angle::Angle(const BigInt& p, const BigInt& q) {
    if (q == 0) throw ZeroDenominator("angle: zero denominator");
    BigInt num = p, den = q;
    if (den < 0) { num = -num; den = -den; }
    num %= den;                      // mpz % keeps the dividend's sign
    if (num < 0) num += den;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    num_ = num / g;
    den_ = den / g;
}

std::string Angle::str() const {
    if (num_ == 0) return "0";
    return num_.get_str() + "/" + den_.get_str();
}

Angle Angle::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Angle(BigInt(text), BigInt(1));
        return Angle(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw ParseError("bad angle: '" + text + "'");
    }
}

Angle mul_map(long k, const Angle& theta) { return theta.times(BigInt(k)); }

Angle arc_length(const Angle& a, const Angle& b) { return b - a; }

bool in_open_arc(const Angle& c, const Angle& a, const Angle& b) {
    Angle d = c - a;
    return !d.is_zero() && d < (b - a);
}

bool Orbit::contains(const Angle& a) const {
    return std::binary_search(angles.begin(), angles.end(), a);
}

long Orbit::index_of(const Angle& a) const {
    auto it = std::lower_bound(angles.begin(), angles.end(), a);
    if (it == angles.end() || !(*it == a)) return -1;
    return it - angles.begin();
}

std::string Orbit::str() const { return format_angle_list(angles); }

std::string format_angle_list(const std::vector<Angle>& angles) {
    BigInt lcm(1);
    for (const auto& a : angles) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a.den().get_mpz_t());
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < angles.size(); ++i) {
        if (i) os << ",";
        os << BigInt(angles[i].num() * (lcm / angles[i].den())).get_str();
    }
    os << "}/" << lcm.get_str();
    return os.str();
}

Orbit forward_orbit(long k, const Angle& theta) {
    BigInt g;
    BigInt kk(k);
    mpz_gcd(g.get_mpz_t(), theta.den().get_mpz_t(), kk.get_mpz_t());
    if (g != 1)
        throw PreperiodicAngle("forward_orbit: " + theta.str() + " is not purely periodic under m_" +
                               std::to_string(k));
    Orbit o;
    o.base = k;
    Angle x = theta;
    do {
        o.angles.push_back(x);
        x = mul_map(k, x);
    } while (x != theta);
    std::sort(o.angles.begin(), o.angles.end());
    return o;
}

long period(long k, const Angle& theta) {
    BigInt g, kk(k);
    mpz_gcd(g.get_mpz_t(), theta.den().get_mpz_t(), kk.get_mpz_t());
    if (g != 1)
        throw PreperiodicAngle("period: " + theta.str() + " is not purely periodic under m_" +
                               std::to_string(k));
    long q = 1;
    Angle x = mul_map(k, theta);
    while (x != theta) {
        x = mul_map(k, x);
        ++q;
    }
    return q;
}

Orbit rotated_orbit(const Orbit& o) {
    Orbit r;
    r.base = o.base;
    const Angle half(1, 2);
    for (const auto& a : o.angles) r.angles.push_back(a + half);
    std::sort(r.angles.begin(), r.angles.end());
    return r;
}

} // namespace limbs
