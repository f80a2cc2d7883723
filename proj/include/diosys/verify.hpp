#pragma once

#include "diosys/forms.hpp"
#include "diosys/numeric.hpp"
#include "diosys/polygonal.hpp"
#include "diosys/polynomial.hpp"
#include "diosys/rational_function.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace diosys {

/// Candidate solution of f(z) = f(x)+f(y) = f(u)-f(v) = f(p)f(q) [= f(r)/f(s)].
/// No validity is assumed at construction; verify_system decides.
struct SolutionTuple {
    Form form;
    Rational z, x, y, u, v, p, q;
    std::optional<Rational> r, s;
};

/// Exact verification outcome. nontrivial holds f(entry) != 0 per entry, the
/// nontriviality notion used for reporting (never enforced).
struct VerificationReport {
    bool sum_ok = false;
    bool difference_ok = false;
    bool product_ok = false;
    std::optional<bool> quotient_ok;
    Rational common_value;
    std::vector<std::pair<std::string, bool>> nontrivial;

    bool ok() const {
        return sum_ok && difference_ok && product_ok && quotient_ok.value_or(true);
    }
};

/// Exact check of every applicable equality; no floating point anywhere.
/// Throws evaluation_error if r,s are present with f(s) = 0.
inline VerificationReport verify_system(const SolutionTuple& t) {
    const auto f = [&](const Rational& e) { return eval_form(t.form, e); };
    VerificationReport rep;
    rep.common_value = f(t.z);
    rep.sum_ok = rep.common_value == f(t.x) + f(t.y);
    rep.difference_ok = rep.common_value == f(t.u) - f(t.v);
    rep.product_ok = rep.common_value == f(t.p) * f(t.q);
    if (t.r && t.s) {
        const Rational fs = f(*t.s);
        if (fs == 0) throw evaluation_error("quotient undefined: f(s) = 0");
        rep.quotient_ok = rep.common_value == f(*t.r) / fs;
    }
    rep.nontrivial = {{"z", f(t.z) != 0}, {"x", f(t.x) != 0}, {"y", f(t.y) != 0},
                      {"u", f(t.u) != 0}, {"v", f(t.v) != 0}, {"p", f(t.p) != 0},
                      {"q", f(t.q) != 0}};
    if (t.r && t.s) {
        rep.nontrivial.emplace_back("r", f(*t.r) != 0);
        rep.nontrivial.emplace_back("s", f(*t.s) != 0);
    }
    return rep;
}

/// The 12-gonal identity
///   P(12, 215666848) = P(12, 33841736) + P(12, 212995132)
///                    = P(12, 2907011822107606) - P(12, 2907011822107598)
///                    = P(12, 6568) * P(12, 14686),
/// checked with arbitrary-precision integers.
inline VerificationReport verify_polygonal_display() {
    const Integer z = polygonal(12, Integer(215666848));
    VerificationReport rep;
    rep.common_value = Rational(z);
    rep.sum_ok = z == polygonal(12, Integer(33841736)) + polygonal(12, Integer(212995132));
    rep.difference_ok = z == polygonal(12, Integer("2907011822107606")) -
                                 polygonal(12, Integer("2907011822107598"));
    rep.product_ok = z == polygonal(12, Integer(6568)) * polygonal(12, Integer(14686));
    rep.nontrivial = {{"z", z != 0}};
    return rep;
}

/// Symbolic-verification primitive: true iff the argument is identically zero.
inline bool identity_certificate(const Polynomial<Rational>& p) { return p.is_zero(); }

inline bool identity_certificate(const RationalFunction<Rational>& f) {
    return f.num().is_zero();
}

}  // namespace diosys
