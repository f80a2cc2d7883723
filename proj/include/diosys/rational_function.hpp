#pragma once

#include "diosys/numeric.hpp"
#include "diosys/polynomial.hpp"

#include <ostream>
#include <sstream>
#include <string>
#include <utility>

namespace diosys {

/// Reduced quotient of two polynomials in one variable. Canonical form:
/// numerator and denominator coprime, denominator monic, zero is 0/1.
/// Equality is therefore structural.
template <class T>
class RationalFunction {
public:
    RationalFunction() : den_(T(1)) {}

    RationalFunction(const T& constant)  // NOLINT(google-explicit-constructor)
        : num_(constant), den_(T(1)) {}

    RationalFunction(Polynomial<T> p)  // NOLINT(google-explicit-constructor)
        : num_(std::move(p)), den_(T(1)) {}

    RationalFunction(Polynomial<T> num, Polynomial<T> den)
        : num_(std::move(num)), den_(std::move(den)) {
        reduce();
    }

    const Polynomial<T>& num() const { return num_; }
    const Polynomial<T>& den() const { return den_; }

    const std::string& var() const { return num_.var().empty() ? den_.var() : num_.var(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    T constant_value() const { return num_.constant_value() / den_.constant_value(); }

    RationalFunction operator-() const {
        RationalFunction out;
        out.num_ = -num_;
        out.den_ = den_;
        return out;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        RationalFunction out;
        Polynomial<T> g = gcd(a.den_, b.den_);
        if (g.is_constant()) {
            out.num_ = a.num_ * b.den_ + b.num_ * a.den_;
            out.den_ = a.den_ * b.den_;
            out.normalize_monic();
        } else {
            Polynomial<T> da = exact_divide(a.den_, g);
            Polynomial<T> db = exact_divide(b.den_, g);
            out.num_ = a.num_ * db + b.num_ * da;
            Polynomial<T> h = gcd(out.num_, g);
            if (!h.is_constant()) {
                out.num_ = exact_divide(out.num_, h);
                out.den_ = da * exact_divide(b.den_, h);
            } else {
                out.den_ = da * b.den_;
            }
            out.normalize_monic();
        }
        return out;
    }

    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + (-b);
    }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return RationalFunction();
        Polynomial<T> g1 = gcd(a.num_, b.den_);
        Polynomial<T> g2 = gcd(b.num_, a.den_);
        RationalFunction out;
        out.num_ = (g1.is_constant() ? a.num_ : exact_divide(a.num_, g1)) *
                   (g2.is_constant() ? b.num_ : exact_divide(b.num_, g2));
        out.den_ = (g2.is_constant() ? a.den_ : exact_divide(a.den_, g2)) *
                   (g1.is_constant() ? b.den_ : exact_divide(b.den_, g1));
        out.normalize_monic();
        return out;
    }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw evaluation_error("division by zero rational function");
        RationalFunction inv;
        inv.num_ = b.den_;
        inv.den_ = b.num_;
        return a * inv;
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    T eval(const T& x) const {
        T d = den_.eval(x);
        if (d == T(0)) {
            std::ostringstream os;
            os << "evaluation at pole " << (var().empty() ? "x" : var()) << " = " << x;
            throw evaluation_error(os.str());
        }
        return num_.eval(x) / d;
    }

    /// Substitute a rational function for the variable.
    RationalFunction substitute(const RationalFunction& arg) const {
        RationalFunction n = horner(num_, arg);
        RationalFunction d = horner(den_, arg);
        if (d.is_zero()) throw evaluation_error("substitution lands on a pole");
        return n / d;
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
        if (f.den_ == Polynomial<T>(T(1))) return os << "(" << f.num_ << ")";
        return os << "(" << f.num_ << ") / (" << f.den_ << ")";
    }

private:
    void reduce() {
        if (den_.is_zero()) throw evaluation_error("zero denominator polynomial");
        if (num_.is_zero()) {
            den_ = Polynomial<T>(T(1));
            return;
        }
        Polynomial<T> g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = exact_divide(num_, g);
            den_ = exact_divide(den_, g);
        }
        normalize_monic();
    }

    void normalize_monic() {
        if (num_.is_zero()) {
            den_ = Polynomial<T>(T(1));
            return;
        }
        const T lead = den_.leading();
        if (!(lead == T(1))) {
            num_ = num_ * Polynomial<T>(T(1) / lead);
            den_ = den_ * Polynomial<T>(T(1) / lead);
        }
    }

    static RationalFunction horner(const Polynomial<T>& p, const RationalFunction& arg) {
        RationalFunction acc;
        for (std::size_t i = p.coefficients().size(); i-- > 0;)
            acc = acc * arg + RationalFunction(p.coefficients()[i]);
        return acc;
    }

    Polynomial<T> num_;
    Polynomial<T> den_;
};

template <class T>
RationalFunction<T> operator+(const RationalFunction<T>& a, const T& c) {
    return a + RationalFunction<T>(c);
}
template <class T>
RationalFunction<T> operator+(const T& c, const RationalFunction<T>& a) {
    return RationalFunction<T>(c) + a;
}
template <class T>
RationalFunction<T> operator-(const RationalFunction<T>& a, const T& c) {
    return a - RationalFunction<T>(c);
}
template <class T>
RationalFunction<T> operator-(const T& c, const RationalFunction<T>& a) {
    return RationalFunction<T>(c) - a;
}
template <class T>
RationalFunction<T> operator*(const RationalFunction<T>& a, const T& c) {
    return a * RationalFunction<T>(c);
}
template <class T>
RationalFunction<T> operator*(const T& c, const RationalFunction<T>& a) {
    return RationalFunction<T>(c) * a;
}
template <class T>
RationalFunction<T> operator*(long c, const RationalFunction<T>& a) {
    return RationalFunction<T>(T(c)) * a;
}
template <class T>
RationalFunction<T> operator*(const RationalFunction<T>& a, long c) {
    return a * RationalFunction<T>(T(c));
}

template <class T>
RationalFunction<T> pow(const RationalFunction<T>& base, unsigned long long e) {
    RationalFunction<T> acc{T(1)};
    RationalFunction<T> sq = base;
    while (e) {
        if (e & 1) acc *= sq;
        sq *= sq;
        e >>= 1;
    }
    return acc;
}

using RatPoly = Polynomial<Rational>;
using RatFunc = RationalFunction<Rational>;

}  // namespace diosys
