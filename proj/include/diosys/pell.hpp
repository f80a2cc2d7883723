#pragma once

#include "diosys/numeric.hpp"
#include "diosys/zsqrt2.hpp"

#include <utility>

namespace diosys {

/// Seed data for a solution of X^2 - 2Y^2 = 2b^2 - a^2:
/// X + Y sqrt(2) = (1+sqrt(2))^(2m+1) (sign*a + b sqrt(2)).
struct PellParams {
    Integer a;
    Integer b;
    unsigned m = 1;
    int sign = +1;
};

/// (X, Y) with X^2 - 2Y^2 = 2b^2 - a^2 exactly. m=0 gives the trivial level
/// (X, Y) = (a+2b, a+b); m=1 gives (7a+10b, 5a+7b); m=2 gives (41a+58b, 29a+41b).
inline std::pair<Integer, Integer> pell_solution(const PellParams& p) {
    const ZSqrt2 seed{p.sign >= 0 ? p.a : -p.a, p.b};
    const ZSqrt2 v = pow(ZSqrt2::unit(), 2ull * p.m + 1) * seed;
    return {v.r, v.s};
}

}  // namespace diosys
