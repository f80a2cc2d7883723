#pragma once

#include "diosys/forms.hpp"
#include "diosys/numeric.hpp"
#include "diosys/polynomial.hpp"
#include "diosys/verify.hpp"

#include <utility>
#include <vector>

namespace diosys {

/// Configuration for the degree-3 parametric family with p = (n^2+m^2)t + k,
/// q = p + 1, built by undetermined coefficients. n > m >= 1 is enforced at
/// construction; the parity and congruence conditions on k are checked
/// separately so that failures stay reportable.
struct ParamConfig {
    Integer a;
    Integer m;
    Integer n;
    Integer k;

    ParamConfig(Integer a_, Integer m_, Integer n_, Integer k_)
        : a(std::move(a_)), m(std::move(m_)), n(std::move(n_)), k(std::move(k_)) {
        if (a == 0) throw construction_error("a must be nonzero");
        if (!(n > m && m >= 1)) throw construction_error("need n > m >= 1");
    }

    Integer A() const { return n * n + m * m; }
    Integer period() const { return 4 * A() * A(); }
};

/// The solved coefficients of the two undetermined-coefficient systems
/// (cubic u,v ansatz and quadratic x,y ansatz), as exact rationals.
struct CoefficientRecord {
    Rational A, B, C, D, E, F, G;  // u = Bt^3+Ct^2+Dt+E, v = Bt^3+Ct^2+Ft+G
    Rational H, I, J, K, L, M;     // x = Ht^2+It+J,      y = Kt^2+Lt+M
};

inline CoefficientRecord coefficients(const ParamConfig& cfg) {
    const Rational a(cfg.a), k(cfg.k), m(cfg.m), n(cfg.n);
    CoefficientRecord r;
    r.A = n * n + m * m;
    r.B = r.A * r.A * r.A;
    r.C = r.A * r.A * (2 * a + 3 * k + 2);
    r.D = r.A * (a * a + 4 * a * k + 3 * k * k + 3 * a + 4 * k) + Rational(5, 4) * r.A;
    r.E = (a * k + k * k + a + 2 * k) * (a + k) + (2 * a + 5 * k) / 4;
    r.F = r.D - r.A / 2;
    r.G = r.E - k / 2;
    r.H = 4 * n * m * (n * n - m * m);
    r.K = m * m * m * m - 6 * m * m * n * n + n * n * n * n;
    r.I = r.H * (a + 2 * k + 1) / r.A;
    r.L = r.K * (a + 2 * k + 1) / r.A;
    r.J = (n * n - m * m) * (4 * m * n * k * (k + a + 1) + a * (m * m + 2 * m * n - n * n)) /
          (r.A * r.A);
    r.M = (m * m + 2 * m * n - n * n) *
          ((m * m - 2 * m * n - n * n) * k * (k + a + 1) - 2 * a * m * n) / (r.A * r.A);
    return r;
}

struct CongruenceStatus {
    bool parity_ok = false;
    bool first_ok = false;   // J's numerator vanishes mod (m^2+n^2)^2
    bool second_ok = false;  // M's numerator vanishes mod (m^2+n^2)^2
    bool ok() const { return parity_ok && first_ok && second_ok; }
};

/// Checks k (normalized mod 4(m^2+n^2)^2) against the parity rule
/// (k = 0 mod 4 for even a, k = 2 mod 4 for odd a) and both congruences.
inline CongruenceStatus congruence_status(const ParamConfig& cfg) {
    const Integer k = floor_mod(cfg.k, cfg.period());
    const Integer a = cfg.a, m = cfg.m, n = cfg.n;
    const Integer A2 = cfg.A() * cfg.A();
    CongruenceStatus st;
    st.parity_ok = floor_mod(k, 4) == (floor_mod(a, 2) == 0 ? 0 : 2);
    st.first_ok = floor_mod((n * n - m * m) * (4 * m * n * k * (k + a + 1) + a * (m * m + 2 * m * n - n * n)),
                            A2) == 0;
    st.second_ok = floor_mod((m * m + 2 * m * n - n * n) *
                                 ((m * m - 2 * m * n - n * n) * k * (k + a + 1) - 2 * a * m * n),
                             A2) == 0;
    return st;
}

inline bool congruence_check(const ParamConfig& cfg) { return congruence_status(cfg).ok(); }

/// All k residues modulo 4(m^2+n^2)^2 admitting the construction, by
/// exhaustive scan over one period. Exact, and the period is small for
/// desk-scale (m, n); an algebraic CRT solver would only be an optimization.
inline std::vector<Integer> solve_k(const Integer& a, const Integer& m, const Integer& n) {
    ParamConfig probe(a, m, n, 0);
    std::vector<Integer> out;
    for (Integer k = 0; k < probe.period(); ++k)
        if (congruence_check(ParamConfig(a, m, n, k))) out.push_back(k);
    return out;
}

/// The family polynomials in T after the substitution t = 4(m^2+n^2)T, with
/// the residue shift k -> k + 4(m^2+n^2)^2 S folded in.
struct PolySolution {
    ParamConfig cfg;
    Integer S;
    RatPoly z, x, y, u, v, p, q;

    bool integral() const {
        for (const RatPoly* poly : {&z, &x, &y, &u, &v, &p, &q})
            if (!has_integer_coefficients(*poly)) return false;
        return true;
    }
};

/// Builds the family over the rationals without any congruence requirement;
/// the defining identities hold regardless, integrality is what the
/// congruences buy.
inline PolySolution build_family_raw(const ParamConfig& cfg, const Integer& S = 0) {
    ParamConfig shifted(cfg.a, cfg.m, cfg.n, cfg.k + cfg.period() * S);
    const CoefficientRecord co = coefficients(shifted);
    const RatPoly T = RatPoly::variable("T");
    const RatPoly t = RatPoly(Rational(4) * co.A) * T;  // t = 4(m^2+n^2)T

    PolySolution sol{cfg, S};
    const Rational a(cfg.a), k(shifted.k);
    sol.p = co.A * t + RatPoly(k);
    sol.q = sol.p + Rational(1);
    sol.z = sol.p * (sol.p + (a + 1));
    sol.x = co.H * t * t + co.I * t + RatPoly(co.J);
    sol.y = co.K * t * t + co.L * t + RatPoly(co.M);
    sol.u = co.B * t * t * t + co.C * t * t + co.D * t + RatPoly(co.E);
    sol.v = co.B * t * t * t + co.C * t * t + co.F * t + RatPoly(co.G);
    return sol;
}

/// Checked construction: refuses configurations that fail the parity rule or
/// either congruence, naming the failed conditions.
inline PolySolution build_family(const ParamConfig& cfg, const Integer& S = 0) {
    const CongruenceStatus st = congruence_status(cfg);
    if (!st.ok()) {
        std::string what = "construction unavailable for (a,m,n,k) = (" + cfg.a.str() + "," +
                           cfg.m.str() + "," + cfg.n.str() + "," + cfg.k.str() + "):";
        if (!st.parity_ok) what += " parity rule on k fails;";
        if (!st.first_ok) what += " first congruence fails;";
        if (!st.second_ok) what += " second congruence fails;";
        throw construction_error(what);
    }
    PolySolution sol = build_family_raw(cfg, S);
    if (!sol.integral())
        throw construction_error("internal: congruences passed but coefficients not integral");
    return sol;
}

/// True iff f(z)-f(x)-f(y), f(z)-f(u)+f(v) and f(z)-f(p)f(q) are the zero
/// polynomial in T, by exact coefficient comparison.
inline bool verify_identity(const PolySolution& sol) {
    const QuadraticForm f{Rational(sol.cfg.a)};
    return identity_certificate(f.eval(sol.z) - f.eval(sol.x) - f.eval(sol.y)) &&
           identity_certificate(f.eval(sol.z) - f.eval(sol.u) + f.eval(sol.v)) &&
           identity_certificate(f.eval(sol.z) - f.eval(sol.p) * f.eval(sol.q));
}

inline SolutionTuple instantiate(const PolySolution& sol, const Integer& T) {
    const Rational rt(T);
    return SolutionTuple{QuadraticForm(Rational(sol.cfg.a)),
                         sol.z.eval(rt), sol.x.eval(rt), sol.y.eval(rt), sol.u.eval(rt),
                         sol.v.eval(rt), sol.p.eval(rt), sol.q.eval(rt),
                         std::nullopt, std::nullopt};
}

}  // namespace diosys
