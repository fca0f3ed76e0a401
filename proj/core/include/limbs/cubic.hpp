#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "limbs/errors.hpp"

namespace limbs {

using Complex = std::complex<double>;

/// The cubic z -> z^3 + 3az^2 + b with marked critical points
/// omega_1 = 0 and omega_2 = -2a.
struct CubicMap {
    Complex a{0.0, 0.0};
    Complex b{0.0, 0.0};

    Complex omega1() const { return {0.0, 0.0}; }
    Complex omega2() const { return -2.0 * a; }
    Complex critical_value1() const { return b; }
    Complex critical_value2() const { return 4.0 * a * a * a + b; }
    Complex cocritical1() const { return -3.0 * a; }
    Complex cocritical2() const { return a; }
};

inline Complex eval(const CubicMap& P, Complex z) { return z * z * (z + 3.0 * P.a) + P.b; }
inline Complex eval_derivative(const CubicMap& P, Complex z) { return 3.0 * z * z + 6.0 * P.a * z; }

/// n-fold composition; also returns the chain-rule derivative when asked.
Complex iterate(const CubicMap& P, Complex z, int n);
std::pair<Complex, Complex> iterate_with_derivative(const CubicMap& P, Complex z, int n);

/// Truncated Green's function lim 3^{-n} log+ |P^n(z)|; 0 when the orbit
/// stays bounded within the iteration budget.
double green(const CubicMap& P, Complex z, int max_iter = 512);

/// Newton solve of P^q(z) = z from a seed, with the cycle multiplier.
struct PeriodicPoint {
    Complex z;
    Complex multiplier;
    int newton_steps = 0;
};
PeriodicPoint find_periodic(const CubicMap& P, int q, Complex guess, double root_tol = 1e-12);

/// Conjugates a monic cubic z^3 + c2 z^2 + c1 z + c0 by a translation killing
/// the linear term. Both translation roots are returned (one if they merge).
struct Normalization {
    CubicMap map;
    Complex shift;  // z -> z + shift conjugacy
};
std::vector<Normalization> to_normal_form(Complex c2, Complex c1, Complex c0);

/// First-order jet for Newton in one complex parameter.
struct Jet {
    Complex v{0.0, 0.0};
    Complex d{0.0, 0.0};
    Jet() = default;
    Jet(Complex value, Complex deriv) : v(value), d(deriv) {}
    static Jet var(Complex value) { return Jet(value, {1.0, 0.0}); }
    static Jet constant(Complex value) { return Jet(value, {0.0, 0.0}); }
};
inline Jet operator+(const Jet& x, const Jet& y) { return {x.v + y.v, x.d + y.d}; }
inline Jet operator-(const Jet& x, const Jet& y) { return {x.v - y.v, x.d - y.d}; }
inline Jet operator*(const Jet& x, const Jet& y) { return {x.v * y.v, x.d * y.v + x.v * y.d}; }
inline Jet operator*(Complex c, const Jet& x) { return {c * x.v, c * x.d}; }
inline Jet operator+(Complex c, const Jet& x) { return {c + x.v, x.d}; }

} // namespace limbs
