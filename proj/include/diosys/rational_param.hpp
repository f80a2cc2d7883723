#pragma once

#include "diosys/forms.hpp"
#include "diosys/numeric.hpp"
#include "diosys/rational_function.hpp"
#include "diosys/verify.hpp"

#include <utility>
#include <vector>

namespace diosys {

/// Free parameters of the five-parameter rational solution of
/// f(z) = f(x)+f(y) = f(u)-f(v) = f(p)f(q) = f(r)/f(s) for f(X) = X(X+a).
/// T is determined from (a, q, w); then z = T, p = wT, s = mr.
struct FiveParams {
    Rational a;
    Rational k, t, w, q, m;
};

/// z = T:
///   x = -(2Tk+ak+a)/(k^2+1),        y = -(k+1)(Tk+ak-T)/(k^2+1)
///   u = -(Tt^2+at^2-at+T)/(t^2-1),  v = -(2Tt+at-a)/(t^2-1)
///   T = -a(aqw+q^2w-1)/(aqw^2+q^2w^2-1),  p = wT
///   r = -a(T^2m+Tam-1)/(T^2m^2+Tam^2-1),  s = mr
/// Vanishing denominators and f(s) = 0 are reported, not patched; the
/// parametrization genuinely has poles there. Entries with f(.) = 0 are
/// returned as-is; nontriviality is reported by the verifier's flags.
inline SolutionTuple solve_rational(const FiveParams& ps) {
    if (ps.a == 0) throw construction_error("a must be nonzero");
    const Rational &a = ps.a, &k = ps.k, &t = ps.t, &w = ps.w, &q = ps.q, &m = ps.m;

    const Rational den_T = a * q * w * w + q * q * w * w - 1;
    if (den_T == 0) throw evaluation_error("parameters (q, w) hit the pole aqw^2+q^2w^2 = 1");
    const Rational T = -a * (a * q * w + q * q * w - 1) / den_T;

    const Rational den_k = k * k + 1;
    const Rational x = -(2 * T * k + a * k + a) / den_k;
    const Rational y = -(k + 1) * (T * k + a * k - T) / den_k;

    const Rational den_t = t * t - 1;
    if (den_t == 0) throw evaluation_error("parameter t = +-1 is a pole of the u,v forms");
    const Rational u = -(T * t * t + a * t * t - a * t + T) / den_t;
    const Rational v = -(2 * T * t + a * t - a) / den_t;

    const Rational den_m = T * T * m * m + T * a * m * m - 1;
    if (den_m == 0) throw evaluation_error("parameter m hits the pole T^2m^2+Tam^2 = 1");
    const Rational r = -a * (T * T * m + T * a * m - 1) / den_m;
    const Rational s = m * r;

    const QuadraticForm f{a};
    if (f.eval(s) == 0) throw evaluation_error("f(s) = 0: the quotient equation is undefined");

    return SolutionTuple{f, T, x, y, u, v, w * T, q, r, s};
}

namespace detail {

/// f(X) for X a rational function over Q(param) with constant rational a.
inline RatFunc eval_quad(const RatFunc& x, const Rational& a) { return x * (x + a); }

}  // namespace detail

/// Certifies the four parametrization identities symbolically: each is the
/// zero rational function in its own parameter, the others held at generic
/// rationals (the product identity is checked in q for sampled w).
inline bool symbolic_certificate(const Rational& a) {
    if (a == 0) throw construction_error("a must be nonzero");
    const Rational one(1);

    // generic values chosen off the parametrization's poles
    const std::vector<Rational> generics{Rational(7, 5), Rational(-3, 2), Rational(11, 4)};

    // identity in k: f(T) - f(x(k)) - f(y(k)) = 0
    for (const Rational& T : generics) {
        const RatPoly k = RatPoly::variable("k");
        const RatFunc den(k * k + one);
        const RatFunc x = RatFunc(-(2 * T * k + a * k + RatPoly(a))) / den;
        const RatFunc y = RatFunc(-(k + one) * (T * k + a * k - RatPoly(T))) / den;
        const RatFunc residue = RatFunc(Rational(T * (T + a))) - detail::eval_quad(x, a) -
                                detail::eval_quad(y, a);
        if (!identity_certificate(residue)) return false;
    }

    // identity in t: f(T) - f(u(t)) + f(v(t)) = 0
    for (const Rational& T : generics) {
        const RatPoly t = RatPoly::variable("t");
        const RatFunc den(t * t - one);
        const RatFunc u = RatFunc(-(T * (t * t) + a * (t * t) - a * t + RatPoly(T))) / den;
        const RatFunc v = RatFunc(-(2 * T * t + a * t - RatPoly(a))) / den;
        const RatFunc residue = RatFunc(Rational(T * (T + a))) - detail::eval_quad(u, a) +
                                detail::eval_quad(v, a);
        if (!identity_certificate(residue)) return false;
    }

    // identity in q at sampled w: f(T(q)) - f(wT(q)) f(q) = 0
    for (const Rational& w : generics) {
        const RatPoly q = RatPoly::variable("q");
        const RatFunc den(a * (w * w) * q + (w * w) * (q * q) - one);
        const RatFunc T = RatFunc(-(a * a * w * q + a * w * (q * q) - RatPoly(a))) / den;
        const RatFunc residue = detail::eval_quad(T, a) -
                                detail::eval_quad(T * w, a) * RatFunc(q * (q + a));
        if (!identity_certificate(residue)) return false;
    }

    // identity in m: f(T) f(s(m)) - f(r(m)) = 0
    for (const Rational& T : generics) {
        const RatPoly m = RatPoly::variable("m");
        const RatFunc den(T * T * (m * m) + T * a * (m * m) - one);
        const RatFunc r = RatFunc(-(a * T * T * m + a * T * a * m - RatPoly(a))) / den;
        const RatFunc s = RatFunc(m) * r;
        const RatFunc residue = Rational(T * (T + a)) * detail::eval_quad(s, a) -
                                detail::eval_quad(r, a);
        if (!identity_certificate(residue)) return false;
    }
    return true;
}

}  // namespace diosys
