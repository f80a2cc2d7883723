#pragma once

#include "diosys/curve_solutions.hpp"
#include "diosys/forms.hpp"
#include "diosys/numeric.hpp"
#include "diosys/polynomial.hpp"
#include "diosys/rational_function.hpp"
#include "diosys/verify.hpp"

#include <json.hpp>

#include <string>

namespace diosys {

using Json = nlohmann::ordered_json;

/// All numbers serialize as decimal strings: no native-number overflow
/// ambiguity, byte-identical output across runs.
inline Json to_json(const Rational& q) { return to_decimal(q); }

inline Json to_json(const RatPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coefficients()) arr.push_back(to_decimal(c));
    return arr;
}

inline Json to_json(const RatFunc& f, const std::string& variable) {
    return Json{{"variable", variable}, {"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

inline Json form_to_json(const Form& form) {
    if (const auto* q = std::get_if<QuadraticForm>(&form))
        return Json{{"kind", "quad"}, {"a", to_decimal(q->a)}};
    const auto& c = std::get<CubicForm>(form);
    return Json{{"kind", "cubic"}, {"a", to_decimal(c.a)}, {"b", to_decimal(c.b)}};
}

inline Json tuple_to_json(const SolutionTuple& t) {
    Json j{{"z", to_decimal(t.z)}, {"x", to_decimal(t.x)}, {"y", to_decimal(t.y)},
           {"u", to_decimal(t.u)}, {"v", to_decimal(t.v)}, {"p", to_decimal(t.p)},
           {"q", to_decimal(t.q)}};
    if (t.r && t.s) {
        j["r"] = to_decimal(*t.r);
        j["s"] = to_decimal(*t.s);
    }
    return j;
}

inline Json report_to_json(const VerificationReport& rep) {
    Json j{{"sum", rep.sum_ok}, {"difference", rep.difference_ok}, {"product", rep.product_ok}};
    if (rep.quotient_ok) j["quotient"] = *rep.quotient_ok;
    j["common_value"] = to_decimal(rep.common_value);
    Json flags;
    for (const auto& [name, ok] : rep.nontrivial) flags[name] = ok;
    j["nontrivial"] = flags;
    j["valid"] = rep.ok();
    return j;
}

}  // namespace diosys
