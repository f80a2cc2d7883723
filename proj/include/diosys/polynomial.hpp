#pragma once

#include "diosys/numeric.hpp"

#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace diosys {

namespace detail {

/// Integer-vector helpers backing the Rational polynomial fast paths
/// (multiplication, exact division, primitive-PRS gcd).

inline void ivec_trim(std::vector<Integer>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

inline Integer ivec_content(const std::vector<Integer>& v) {
    Integer g = 0;
    for (const auto& c : v) {
        g = gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

inline void ivec_make_primitive(std::vector<Integer>& v) {
    Integer g = ivec_content(v);
    if (g > 1)
        for (auto& c : v) c /= g;
}

/// Pseudo-remainder of u by v (content is stripped by callers, so the usual
/// lc(v)^k premultiplier is not tracked).
inline std::vector<Integer> ivec_prem(std::vector<Integer> u, const std::vector<Integer>& v) {
    const Integer& d = v.back();
    while (u.size() >= v.size()) {
        Integer lead = u.back();
        for (auto& c : u) c *= d;
        const std::size_t shift = u.size() - v.size();
        for (std::size_t i = 0; i < v.size(); ++i) u[shift + i] -= lead * v[i];
        ivec_trim(u);
        ivec_make_primitive(u);
    }
    return u;
}

}  // namespace detail

/// Dense univariate polynomial; coefficients ascending, zero polynomial is the
/// empty list. A polynomial of degree <= 0 is variable-less so that constants
/// mix freely across variables; binary operations otherwise require both sides
/// to share the variable.
template <class T>
class Polynomial {
public:
    Polynomial() = default;

    Polynomial(const T& constant) {  // NOLINT(google-explicit-constructor)
        if (!(constant == T(0))) coeffs_.push_back(constant);
    }

    Polynomial(std::string var, std::vector<T> coeffs)
        : var_(std::move(var)), coeffs_(std::move(coeffs)) {
        normalize();
    }

    /// The monomial X in the named variable.
    static Polynomial variable(std::string var) {
        return Polynomial(std::move(var), {T(0), T(1)});
    }

    const std::string& var() const { return var_; }
    const std::vector<T>& coefficients() const { return coeffs_; }

    /// -1 for the zero polynomial.
    std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    T coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }

    const T& leading() const {
        if (is_zero()) throw evaluation_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    T constant_value() const {
        if (!is_constant()) throw evaluation_error("polynomial of positive degree used as constant");
        return coeffs_.empty() ? T(0) : coeffs_[0];
    }

    T eval(const T& x) const {
        T acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    /// Substitution of a polynomial for the variable (Horner).
    Polynomial compose(const Polynomial& arg) const {
        Polynomial acc;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * arg + Polynomial(coeffs_[i]);
        return acc;
    }

    Polynomial operator-() const {
        Polynomial out = *this;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::string var = join_var(a, b);
        std::vector<T> out(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (i < a.coeffs_.size()) out[i] += a.coeffs_[i];
            if (i < b.coeffs_.size()) out[i] += b.coeffs_[i];
        }
        return Polynomial(std::move(var), std::move(out));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::string var = join_var(a, b);
        if constexpr (std::is_same_v<T, Rational>) {
            auto [av, ad] = scaled_ivec(a.coeffs_);
            auto [bv, bd] = scaled_ivec(b.coeffs_);
            std::vector<Integer> conv(av.size() + bv.size() - 1, Integer(0));
            for (std::size_t i = 0; i < av.size(); ++i)
                for (std::size_t j = 0; j < bv.size(); ++j) conv[i + j] += av[i] * bv[j];
            const Integer den = ad * bd;
            std::vector<T> out;
            out.reserve(conv.size());
            for (auto& c : conv) out.emplace_back(std::move(c), den);
            return Polynomial(std::move(var), std::move(out));
        } else {
            std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
            for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
                for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                    out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            return Polynomial(std::move(var), std::move(out));
        }
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    /// Classical long division over a field; returns (quotient, remainder).
    friend std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw evaluation_error("polynomial division by zero");
        std::string var = join_var(a, b);
        std::vector<T> rem = a.coeffs_;
        if (a.coeffs_.size() < b.coeffs_.size())
            return {Polynomial(), Polynomial(var, std::move(rem))};
        std::vector<T> quot(a.coeffs_.size() - b.coeffs_.size() + 1, T(0));
        const T& lead = b.coeffs_.back();
        for (std::size_t i = quot.size(); i-- > 0;) {
            if (rem.size() < b.coeffs_.size() + i) continue;
            T q = rem[b.coeffs_.size() - 1 + i] / lead;
            if (q == T(0)) continue;
            quot[i] = q;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) rem[i + j] -= q * b.coeffs_[j];
        }
        return {Polynomial(var, std::move(quot)), Polynomial(var, std::move(rem))};
    }

    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) {
        return divrem(a, b).first;
    }
    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) {
        return divrem(a, b).second;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return *this / Polynomial(leading());
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.coeffs_ != b.coeffs_) return false;
        return a.is_constant() || b.is_constant() || a.var_ == b.var_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        if (p.is_zero()) return os << "0";
        const std::string x = p.var_.empty() ? std::string("x") : p.var_;
        bool first = true;
        for (std::size_t i = p.coeffs_.size(); i-- > 0;) {
            const T& c = p.coeffs_[i];
            if (c == T(0)) continue;
            std::ostringstream cs;
            cs << c;
            std::string cstr = cs.str();
            if (!first) {
                os << (cstr[0] == '-' ? " - " : " + ");
                if (cstr[0] == '-') cstr.erase(0, 1);
            }
            if (i == 0)
                os << cstr;
            else {
                if (cstr != "1") os << cstr << "*";
                os << x;
                if (i > 1) os << "^" << i;
            }
            first = false;
        }
        return os;
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
        if (coeffs_.size() <= 1) var_.clear();
    }

    static std::string join_var(const Polynomial& a, const Polynomial& b) {
        if (a.var_.empty()) return b.var_;
        if (b.var_.empty() || a.var_ == b.var_) return a.var_;
        throw variable_mismatch("operands in variables '" + a.var_ + "' and '" + b.var_ + "'");
    }

    /// Coefficients over a common denominator: (integer vector, denominator).
    static std::pair<std::vector<Integer>, Integer> scaled_ivec(const std::vector<Rational>& cs) {
        Integer den = 1;
        for (const auto& c : cs) den = lcm(den, denominator(c));
        std::vector<Integer> out;
        out.reserve(cs.size());
        for (const auto& c : cs) out.push_back(numerator(c) * (den / denominator(c)));
        return {std::move(out), std::move(den)};
    }

    template <class U>
    friend Polynomial<U> gcd(const Polynomial<U>& a, const Polynomial<U>& b);
    template <class U>
    friend Polynomial<U> exact_divide(const Polynomial<U>& a, const Polynomial<U>& b);

    std::string var_;
    std::vector<T> coeffs_;
};

template <class T>
Polynomial<T> operator+(const Polynomial<T>& a, const T& c) { return a + Polynomial<T>(c); }
template <class T>
Polynomial<T> operator+(const T& c, const Polynomial<T>& a) { return Polynomial<T>(c) + a; }
template <class T>
Polynomial<T> operator-(const Polynomial<T>& a, const T& c) { return a - Polynomial<T>(c); }
template <class T>
Polynomial<T> operator-(const T& c, const Polynomial<T>& a) { return Polynomial<T>(c) - a; }
template <class T>
Polynomial<T> operator*(const Polynomial<T>& a, const T& c) { return a * Polynomial<T>(c); }
template <class T>
Polynomial<T> operator*(const T& c, const Polynomial<T>& a) { return Polynomial<T>(c) * a; }
template <class T>
Polynomial<T> operator*(long c, const Polynomial<T>& a) { return Polynomial<T>(T(c)) * a; }
template <class T>
Polynomial<T> operator*(const Polynomial<T>& a, long c) { return a * Polynomial<T>(T(c)); }
template <class T>
Polynomial<T> operator+(const Polynomial<T>& a, long c) { return a + Polynomial<T>(T(c)); }
template <class T>
Polynomial<T> operator+(long c, const Polynomial<T>& a) { return Polynomial<T>(T(c)) + a; }
template <class T>
Polynomial<T> operator-(const Polynomial<T>& a, long c) { return a - Polynomial<T>(T(c)); }
template <class T>
Polynomial<T> operator-(long c, const Polynomial<T>& a) { return Polynomial<T>(T(c)) - a; }

template <class T>
Polynomial<T> pow(const Polynomial<T>& base, unsigned long long e) {
    Polynomial<T> acc{T(1)};
    Polynomial<T> sq = base;
    while (e) {
        if (e & 1) acc *= sq;
        sq *= sq;
        e >>= 1;
    }
    return acc;
}

/// Monic gcd. For Rational coefficients this runs a primitive PRS over the
/// integers (content stripped after every pseudo-division) to keep
/// intermediate coefficients small; degrees in this library reach ~200.
template <class T>
Polynomial<T> gcd(const Polynomial<T>& a, const Polynomial<T>& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    std::string var = Polynomial<T>::join_var(a, b);
    if constexpr (std::is_same_v<T, Rational>) {
        auto u = Polynomial<T>::scaled_ivec(a.coeffs_).first;
        auto v = Polynomial<T>::scaled_ivec(b.coeffs_).first;
        detail::ivec_make_primitive(u);
        detail::ivec_make_primitive(v);
        if (u.size() < v.size()) u.swap(v);
        while (!v.empty()) {
            u = detail::ivec_prem(std::move(u), v);
            u.swap(v);
        }
        std::vector<T> coeffs;
        coeffs.reserve(u.size());
        for (auto& c : u) coeffs.emplace_back(std::move(c));
        return Polynomial<T>(std::move(var), std::move(coeffs)).monic();
    } else {
        Polynomial<T> u = a, v = b;
        while (!v.is_zero()) {
            Polynomial<T> r = u % v;
            u = std::move(v);
            v = r.monic();
        }
        return u.monic();
    }
}

/// Division known to be exact (b | a). Runs over scaled integer vectors; by
/// Gauss's lemma the primitive quotient is integral, so no rational arithmetic
/// appears in the loop.
template <class T>
Polynomial<T> exact_divide(const Polynomial<T>& a, const Polynomial<T>& b) {
    if constexpr (std::is_same_v<T, Rational>) {
        if (b.is_zero()) throw evaluation_error("polynomial division by zero");
        if (a.is_zero()) return {};
        std::string var = Polynomial<T>::join_var(a, b);
        auto [av, ad] = Polynomial<T>::scaled_ivec(a.coeffs_);
        auto [bv, bd] = Polynomial<T>::scaled_ivec(b.coeffs_);
        const Integer ac = detail::ivec_content(av);
        const Integer bc = detail::ivec_content(bv);
        for (auto& c : av) c /= ac;
        for (auto& c : bv) c /= bc;
        if (av.size() < bv.size())
            throw evaluation_error("exact_divide: divisor degree exceeds dividend degree");
        std::vector<Integer> quot(av.size() - bv.size() + 1, Integer(0));
        for (std::size_t i = quot.size(); i-- > 0;) {
            Integer lead = av[bv.size() - 1 + i];
            if (lead % bv.back() != 0)
                throw evaluation_error("exact_divide: division is not exact");
            Integer q = lead / bv.back();
            quot[i] = q;
            if (q == 0) continue;
            for (std::size_t j = 0; j < bv.size(); ++j) av[i + j] -= q * bv[j];
        }
        for (const auto& c : av)
            if (c != 0) throw evaluation_error("exact_divide: nonzero remainder");
        const Rational scale = Rational(ac * bd, bc * ad);
        std::vector<T> out;
        out.reserve(quot.size());
        for (auto& c : quot) out.push_back(Rational(std::move(c)) * scale);
        return Polynomial<T>(std::move(var), std::move(out));
    } else {
        auto [q, r] = divrem(a, b);
        if (!r.is_zero()) throw evaluation_error("exact_divide: nonzero remainder");
        return q;
    }
}

inline bool has_integer_coefficients(const Polynomial<Rational>& p) {
    for (const auto& c : p.coefficients())
        if (denominator(c) != 1) return false;
    return true;
}

}  // namespace diosys
