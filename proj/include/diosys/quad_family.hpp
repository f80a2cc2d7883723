#pragma once

#include "diosys/forms.hpp"
#include "diosys/numeric.hpp"
#include "diosys/polynomial.hpp"
#include "diosys/residue_rules.hpp"
#include "diosys/verify.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace diosys {

/// A one-parameter integer family: seven integer-coefficient polynomials in t
/// whose instantiation at any integer t solves
/// f(z) = f(x)+f(y) = f(u)-f(v) = f(p)f(q) for f(X) = X(X+a).
struct QuadFamily {
    Integer a;
    ResidueRule rule;
    Integer c_offset;
    RatPoly z, x, y, u, v, p, q;
    // derivation record
    RatPoly c, b1, b2, b;
};

/// Instantiates the rule's closed forms with c = c_modulus * t + offset.
/// The resulting coefficients are certified integral; a non-integral
/// coefficient means corrupt rule data and raises construction_error.
inline QuadFamily build_family(const Integer& a, const ResidueRule& rule,
                               std::size_t offset_index) {
    if (a == 0) throw construction_error("a must be nonzero");
    if (floor_mod(a, rule.a_modulus) != rule.a_residue)
        throw construction_error("rule for a = " + rule.a_residue.str() + " (mod " +
                                 rule.a_modulus.str() + ") does not apply to a = " + a.str());
    if (offset_index >= rule.c_offsets.size())
        throw construction_error("rule has only " + std::to_string(rule.c_offsets.size()) +
                                 " c offsets");

    const Rational ra(a);
    const RatPoly t = RatPoly::variable("t");
    const RatPoly c = RatPoly(Rational(rule.c_modulus)) * t + Rational(rule.c_offsets[offset_index]);

    QuadFamily fam;
    fam.a = a;
    fam.rule = rule;
    fam.c_offset = rule.c_offsets[offset_index];
    fam.c = c;
    fam.b1 = 2 * c + Rational(rule.b1_shift);
    fam.b2 = fam.b1 + Rational(a + rule.b_shift());

    const Rational inv_d = Rational(1) / Rational(rule.divisor());
    const RatPoly half = RatPoly(Rational(1, 2));

    if (rule.pell_level == 2) {
        const RatPoly sigma = (4 * c * c + 2 * ra * c + 2 * c - 20 * Rational(a)) * inv_d;
        fam.b = sigma;
        fam.z = 2 * c * (2 * c + ra + Rational(1));
        fam.x = Rational(14) * ra + 20 * sigma;
        fam.y = Rational(14) * ra + 21 * sigma;
        const RatPoly core = (4 * c * c + 2 * ra * c + ra + 4 * c) * (2 * c + ra);
        fam.u = core + (ra + 5 * c) * half;
        fam.v = core + (ra + 3 * c) * half;
        fam.p = 2 * c;
        fam.q = 2 * c + Rational(1);
    } else if (rule.b1_shift < 0) {
        const RatPoly sigma = (4 * c * c + 2 * ra * c + 2 * c - 3 * Rational(a)) * inv_d;
        fam.b = sigma;
        fam.z = 2 * c * (2 * c + ra + Rational(1));
        fam.x = Rational(2) * ra + 3 * sigma;
        fam.y = Rational(2) * ra + 4 * sigma;
        const RatPoly core = (4 * c * c + 2 * ra * c + ra + 4 * c) * (2 * c + ra);
        fam.u = core + (ra + 5 * c) * half;
        fam.v = core + (ra + 3 * c) * half;
        fam.p = 2 * c;
        fam.q = 2 * c + Rational(1);
    } else {
        const RatPoly sigma = (4 * c * c + 2 * ra * c - 2 * c + 3 * Rational(a)) * inv_d;
        fam.b = sigma;
        fam.z = (2 * c - Rational(1)) * (2 * c + ra);
        fam.x = Rational(-3) * ra + 3 * sigma;
        fam.y = Rational(-3) * ra + 4 * sigma;
        const RatPoly core = (4 * c * c + 2 * ra * c - ra - 4 * c) * (2 * c + ra);
        fam.u = core + (ra + 5 * c) * half;
        fam.v = core + (ra + 3 * c) * half;
        fam.p = 2 * c - Rational(1);
        fam.q = 2 * c;
    }

    for (const RatPoly* poly : {&fam.z, &fam.x, &fam.y, &fam.u, &fam.v, &fam.p, &fam.q, &fam.b})
        if (!has_integer_coefficients(*poly))
            throw construction_error("family for a = " + a.str() +
                                     " produced non-integral coefficients (corrupt rule data)");
    return fam;
}

/// Every family for this a: all matching rules, all offsets, in table order.
inline std::vector<QuadFamily> families_for(const Integer& a, const ResidueTable& table) {
    std::vector<QuadFamily> out;
    for (const auto& rule : rules_for(a, table))
        for (std::size_t i = 0; i < rule.c_offsets.size(); ++i)
            out.push_back(build_family(a, rule, i));
    return out;
}

inline SolutionTuple instantiate(const QuadFamily& fam, const Integer& t) {
    const Rational rt(t);
    return SolutionTuple{QuadraticForm(Rational(fam.a)),
                         fam.z.eval(rt), fam.x.eval(rt), fam.y.eval(rt), fam.u.eval(rt),
                         fam.v.eval(rt), fam.p.eval(rt), fam.q.eval(rt),
                         std::nullopt, std::nullopt};
}

}  // namespace diosys
