#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace diosys {

// Expression templates are disabled so that mixed expressions interoperate
// cleanly with the polynomial and rational-function operator overloads.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// Base class of all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different polynomial variables.
class variable_mismatch : public error {
public:
    using error::error;
};

/// Division by zero, evaluation at a pole, or a vanishing parameter denominator.
class evaluation_error : public error {
public:
    using error::error;
};

/// The residue table failed its load-time self-check.
class table_error : public error {
public:
    using error::error;
};

/// A family or curve could not be built from the given data.
class construction_error : public error {
public:
    using error::error;
};

/// The operation is outside the supported surface.
class unsupported_error : public error {
public:
    using error::error;
};

/// Malformed textual input (CLI options, serialized numbers).
class parse_error : public error {
public:
    using error::error;
};

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

/// Remainder in [0, |b|).
inline Integer floor_mod(const Integer& a, const Integer& b) {
    Integer r = a % b;
    if (r < 0) r += abs(b);
    return r;
}

/// Exact integer square root, or nullopt if n is negative or not a square.
inline std::optional<Integer> exact_sqrt(const Integer& n) {
    if (n < 0) return std::nullopt;
    Integer r = sqrt(n);
    if (r * r != n) return std::nullopt;
    return r;
}

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

inline Rational power(Rational base, unsigned e) {
    Rational acc(1);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

inline std::string to_decimal(const Integer& n) { return n.str(); }

/// Canonical form "n" for integers, "n/d" otherwise.
inline std::string to_decimal(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline Integer parse_integer(const std::string& text) {
    try {
        return Integer(text);
    } catch (const std::exception&) {
        throw parse_error("not an integer: '" + text + "'");
    }
}

inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw evaluation_error("zero denominator in '" + text + "'");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return Rational(num, den);
    } catch (const evaluation_error&) {
        throw;
    } catch (const std::exception&) {
        throw parse_error("not a rational: '" + text + "'");
    }
}

}  // namespace diosys
