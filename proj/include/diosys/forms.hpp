#pragma once

#include "diosys/numeric.hpp"
#include "diosys/rational_function.hpp"

#include <variant>

namespace diosys {

/// f(X) = X(X + a), a != 0. Rational a is allowed; generators that need an
/// integer a enforce that themselves.
struct QuadraticForm {
    Rational a;

    explicit QuadraticForm(Rational a_) : a(std::move(a_)) {
        if (a == 0) throw construction_error("quadratic form requires a != 0");
    }

    template <class X>
    X eval(const X& x) const {
        return x * (x + X(a));
    }
};

/// f(X) = X(X + a)(X + b), a, b nonzero and distinct.
struct CubicForm {
    Integer a;
    Integer b;

    CubicForm(Integer a_, Integer b_) : a(std::move(a_)), b(std::move(b_)) {
        if (a == 0 || b == 0 || a == b)
            throw construction_error("cubic form requires nonzero distinct a, b");
    }

    template <class X>
    X eval(const X& x) const {
        return x * (x + X(Rational(a))) * (x + X(Rational(b)));
    }

    Rational eval(const Rational& x) const { return x * (x + a) * (x + b); }
};

using Form = std::variant<QuadraticForm, CubicForm>;

template <class X>
X eval_form(const Form& f, const X& x) {
    return std::visit([&](const auto& form) { return form.eval(x); }, f);
}

}  // namespace diosys
