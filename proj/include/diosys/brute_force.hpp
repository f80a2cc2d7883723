#pragma once

#include "diosys/forms.hpp"
#include "diosys/numeric.hpp"
#include "diosys/verify.hpp"

#include <algorithm>
#include <set>
#include <thread>
#include <utility>
#include <vector>

namespace diosys {

/// Representative of e under the symmetry f(X) = f(-X-a): the branch with
/// 2e >= -a. Families and the exhaustive oracle are compared in this form.
inline Integer canonical_entry(const Integer& e, const Integer& a) {
    const Integer other = -e - a;
    return e >= other ? e : other;
}

namespace detail {

/// Solves f(y) = y(y+a) = w over the integers; returns the canonical branch.
inline std::optional<Integer> invert_quadratic(const Integer& w, const Integer& a) {
    const auto root = exact_sqrt(a * a + 4 * w);
    if (!root) return std::nullopt;
    if (floor_mod(*root - a, 2) != 0) return std::nullopt;
    return (*root - a) / 2;
}

/// Signed divisors of n (nonzero), unsorted.
inline std::vector<Integer> signed_divisors(const Integer& n) {
    std::vector<Integer> out;
    const Integer m = abs(n);
    for (Integer e = 1; e * e <= m; ++e) {
        if (m % e != 0) continue;
        out.push_back(e);
        out.push_back(-e);
        const Integer f = m / e;
        if (f != e) {
            out.push_back(f);
            out.push_back(-f);
        }
    }
    return out;
}

using Pair = std::pair<Integer, Integer>;

inline std::vector<SolutionTuple> brute_force_range(const Integer& a, const Integer& z_lo,
                                                    const Integer& z_hi) {
    const auto f = [&](const Integer& x) { return x * (x + a); };
    const Integer x_lo = -floor_div(a, 2);
    const Integer f_min = f(x_lo);
    std::vector<SolutionTuple> out;

    for (Integer z = z_lo; z <= z_hi; ++z) {
        const Integer F = f(z);
        // f(z) = 0 admits degenerate fillers for every equation; skip, matching
        // the nontriviality convention.
        if (F == 0) continue;

        std::set<Pair> sums;
        for (Integer x = x_lo; f(x) + f_min <= F; ++x) {
            if (const auto y = invert_quadratic(F - f(x), a); y && *y >= x)
                sums.emplace(x, *y);
        }
        if (sums.empty()) continue;

        // f(u) - f(v) = (u-v)(u+v+a) = F: one pair per factorization.
        std::set<Pair> diffs;
        for (const Integer& c : signed_divisors(F)) {
            const Integer d = F / c;
            if (floor_mod(c + d - a, 2) != 0) continue;
            const Integer u = (c + d - a) / 2;
            const Integer v = u - c;
            diffs.emplace(canonical_entry(u, a), canonical_entry(v, a));
        }
        if (diffs.empty()) continue;

        std::set<Pair> prods;
        for (const Integer& g : signed_divisors(F)) {
            const auto p = invert_quadratic(g, a);
            if (!p) continue;
            const auto q = invert_quadratic(F / g, a);
            if (!q) continue;
            prods.emplace(std::min(*p, *q), std::max(*p, *q));
        }

        for (const auto& [x, y] : sums)
            for (const auto& [u, v] : diffs)
                for (const auto& [p, q] : prods)
                    out.push_back(SolutionTuple{QuadraticForm(Rational(a)), Rational(z),
                                                Rational(x), Rational(y), Rational(u),
                                                Rational(v), Rational(p), Rational(q),
                                                std::nullopt, std::nullopt});
    }
    return out;
}

}  // namespace detail

/// Exhaustive oracle for f(X) = X(X+a): every tuple with 1 <= z <= bound
/// satisfying f(z) = f(x)+f(y) = f(u)-f(v) = f(p)f(q), discovered with no
/// family machinery. Per z the sums come from enumerating x and inverting the
/// quadratic (integer square root), differences and products from signed
/// factorizations of f(z). Entries are canonical (2e >= -a), x <= y, p <= q.
/// Output is ordered by z and deterministic for any job count.
inline std::vector<SolutionTuple> brute_force(const Integer& a, const Integer& bound,
                                              int jobs = 1) {
    if (a == 0) throw construction_error("a must be nonzero");
    if (bound < 1) throw construction_error("bound must be >= 1");
    if (jobs <= 1 || bound < 16) return detail::brute_force_range(a, 1, bound);

    const int workers = std::min<int>(jobs, 64);
    std::vector<std::vector<SolutionTuple>> parts(workers);
    std::vector<std::thread> pool;
    const Integer chunk = (bound + workers - 1) / workers;
    for (int i = 0; i < workers; ++i) {
        const Integer lo = 1 + chunk * i;
        const Integer hi = std::min(bound, chunk * (i + 1));
        if (lo > hi) continue;
        pool.emplace_back([&, i, lo, hi] { parts[i] = detail::brute_force_range(a, lo, hi); });
    }
    for (auto& th : pool) th.join();
    std::vector<SolutionTuple> out;
    for (auto& part : parts)
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    return out;
}

}  // namespace diosys
