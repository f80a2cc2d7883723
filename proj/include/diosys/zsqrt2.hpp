#pragma once

#include "diosys/numeric.hpp"

namespace diosys {

/// Element r + s*sqrt(2) of the ring Z[sqrt(2)].
struct ZSqrt2 {
    Integer r{0};
    Integer s{0};

    static ZSqrt2 one() { return {1, 0}; }

    /// The fundamental unit 1 + sqrt(2), norm -1.
    static ZSqrt2 unit() { return {1, 1}; }

    /// norm(r + s*sqrt(2)) = r^2 - 2 s^2; multiplicative.
    Integer norm() const { return r * r - 2 * s * s; }

    friend ZSqrt2 operator*(const ZSqrt2& u, const ZSqrt2& v) {
        return {u.r * v.r + 2 * u.s * v.s, u.r * v.s + u.s * v.r};
    }

    friend bool operator==(const ZSqrt2& u, const ZSqrt2& v) = default;
};

inline ZSqrt2 pow(ZSqrt2 base, unsigned long long e) {
    ZSqrt2 acc = ZSqrt2::one();
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

}  // namespace diosys
