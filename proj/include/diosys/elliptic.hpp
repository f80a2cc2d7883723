#pragma once

#include "diosys/numeric.hpp"
#include "diosys/rational_function.hpp"

#include <string>
#include <utility>

namespace diosys {

/// Affine point with rational-function coordinates, or the point at infinity.
struct CurvePoint {
    RatFunc X;
    RatFunc Y;
    bool infinity = false;

    static CurvePoint at_infinity() { return CurvePoint{{}, {}, true}; }

    friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
        if (a.infinity || b.infinity) return a.infinity == b.infinity;
        return a.X == b.X && a.Y == b.Y;
    }
};

/// Short Weierstrass curve Y^2 = X^3 + A X + B over Q(var). Construction
/// requires a nonzero discriminant (the curve is smooth as a curve over the
/// function field).
class WeierstrassCurve {
public:
    WeierstrassCurve(std::string var, RatFunc A, RatFunc B)
        : var_(std::move(var)), A_(std::move(A)), B_(std::move(B)) {
        if (identity_zero(discriminant()))
            throw construction_error("curve over Q(" + var_ + ") is singular");
    }

    const std::string& var() const { return var_; }
    const RatFunc& A() const { return A_; }
    const RatFunc& B() const { return B_; }

    /// -16(4A^3 + 27B^2)
    RatFunc discriminant() const {
        return Rational(-16) * (Rational(4) * A_ * A_ * A_ + Rational(27) * B_ * B_);
    }

    bool contains(const CurvePoint& P) const {
        if (P.infinity) return true;
        return (P.Y * P.Y - (P.X * P.X * P.X + A_ * P.X + B_)).is_zero();
    }

    CurvePoint negate(const CurvePoint& P) const {
        if (P.infinity) return P;
        return {P.X, -P.Y, false};
    }

    /// Chord-tangent addition; doubling a 2-torsion point yields infinity.
    CurvePoint add(const CurvePoint& P, const CurvePoint& R) const {
        if (P.infinity) return R;
        if (R.infinity) return P;
        if (P.X == R.X) {
            if (P.Y == -R.Y) return CurvePoint::at_infinity();
            return double_point(P);
        }
        const RatFunc lambda = (R.Y - P.Y) / (R.X - P.X);
        RatFunc x3 = lambda * lambda - P.X - R.X;
        RatFunc y3 = lambda * (P.X - x3) - P.Y;
        return {std::move(x3), std::move(y3), false};
    }

    CurvePoint double_point(const CurvePoint& P) const {
        if (P.infinity) return P;
        if (P.Y.is_zero()) return CurvePoint::at_infinity();
        const RatFunc lambda = (Rational(3) * P.X * P.X + A_) / (Rational(2) * P.Y);
        RatFunc x3 = lambda * lambda - Rational(2) * P.X;
        RatFunc y3 = lambda * (P.X - x3) - P.Y;
        return {std::move(x3), std::move(y3), false};
    }

    /// [m]P by double-and-add, m >= 0 ([0]P is infinity).
    CurvePoint mul(const CurvePoint& P, unsigned long long m) const {
        CurvePoint acc = CurvePoint::at_infinity();
        CurvePoint base = P;
        while (m) {
            if (m & 1) acc = add(acc, base);
            if (m >>= 1) base = double_point(base);
        }
        return acc;
    }

private:
    static bool identity_zero(const RatFunc& f) { return f.num().is_zero(); }

    std::string var_;
    RatFunc A_;
    RatFunc B_;
};

}  // namespace diosys
