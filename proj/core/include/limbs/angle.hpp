#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <vector>

#include "limbs/errors.hpp"

namespace limbs {

using BigInt = mpz_class;

/// An exact rational angle in R/Z, stored reduced with 0 <= num < den.
///
/// Angles are the universal currency of the combinatorics here: orbits of
/// the multiplication maps m_k, simulating pairs, partner chords, external
/// ray arguments. Denominators like 3^q - 1 outgrow machine words quickly,
/// hence GMP integers.
class Angle {
  public:
    Angle() : num_(0), den_(1) {}
    Angle(const BigInt& p, const BigInt& q);
    Angle(long p, long q) : Angle(BigInt(p), BigInt(q)) {}

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }

    /// kt mod 1, exact.
    Angle times(const BigInt& k) const { return Angle(num_ * k, den_); }

    Angle operator+(const Angle& o) const {
        return Angle(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Angle operator-(const Angle& o) const {
        return Angle(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    /// Division by a positive integer (no mod-1 wrap: num/den < 1 already).
    Angle over(long k) const { return Angle(num_, den_ * k); }

    bool operator==(const Angle& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Angle& o) const { return !(*this == o); }
    bool operator<(const Angle& o) const { return cmp(num_ * o.den_, o.num_ * den_) < 0; }
    bool operator<=(const Angle& o) const { return cmp(num_ * o.den_, o.num_ * den_) <= 0; }
    bool operator>(const Angle& o) const { return o < *this; }
    bool operator>=(const Angle& o) const { return o <= *this; }

    double to_double() const { return mpq_class(num_, den_).get_d(); }

    /// Canonical text form "p/q" in lowest terms ("0" for zero).
    std::string str() const;
    static Angle parse(const std::string& text);

  private:
    BigInt num_, den_;
};

/// mul_map: the multiplication-by-k circle map applied to theta.
Angle mul_map(long k, const Angle& theta);

/// Length of the counterclockwise arc from a to b, in [0,1).
Angle arc_length(const Angle& a, const Angle& b);

/// True when c lies in the open arc (a,b) traversed counterclockwise.
bool in_open_arc(const Angle& c, const Angle& a, const Angle& b);

/// A single cycle of m_k, sorted as representatives in [0,1).
struct Orbit {
    std::vector<Angle> angles;  // strictly increasing
    long base = 0;              // k of the map m_k

    std::size_t size() const { return angles.size(); }
    const Angle& operator[](std::size_t i) const { return angles[i]; }
    bool contains(const Angle& a) const;
    /// Index (0-based) of an angle in the sorted list, or -1.
    long index_of(const Angle& a) const;

    bool operator==(const Orbit& o) const { return base == o.base && angles == o.angles; }

    /// "{n1,n2,...}/D" over the least common denominator.
    std::string str() const;
};

/// The full m_k-cycle of theta, sorted. Throws PreperiodicAngle unless
/// gcd(theta.den, k) = 1.
Orbit forward_orbit(long k, const Angle& theta);

/// Exact period of theta under m_k (multiplicative order of k mod den).
long period(long k, const Angle& theta);

/// Orbit whose angles are each shifted by 1/2 mod 1, re-sorted.
Orbit rotated_orbit(const Orbit& o);

std::string format_angle_list(const std::vector<Angle>& angles);

} // namespace limbs
