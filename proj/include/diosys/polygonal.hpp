#pragma once

#include "diosys/numeric.hpp"

#include <utility>
#include <vector>

namespace diosys {

/// k-th n-gonal number k((n-2)(k-1)+2)/2. Exact; k(k-1) is even so the
/// division never truncates.
inline Integer polygonal(int n, const Integer& k) {
    if (n < 3) throw construction_error("polygonal numbers need n >= 3");
    Integer t = k * ((n - 2) * (k - 1) + 2);
    return t / 2;
}

/// (n-2) P(n,k) - (n-4) == 2 P(n,l), checked exactly. When it holds,
/// P(n, P(n,k)) = P(n,k) P(n,l).
inline bool hirose_condition(int n, const Integer& k, const Integer& l) {
    return (n - 2) * polygonal(n, k) - (n - 4) == 2 * polygonal(n, l);
}

/// All pairs (k, l), 1 <= k <= bound, l >= 1, satisfying the condition.
/// l is recovered from the quadratic (n-2)l^2 - (n-4)l - V = 0 with an exact
/// integer square root instead of a scan; l grows quadratically in k.
inline std::vector<std::pair<Integer, Integer>> hirose_search(int n, const Integer& bound) {
    if (n < 3) throw construction_error("polygonal numbers need n >= 3");
    if (bound < 1) throw construction_error("hirose_search needs bound >= 1");
    std::vector<std::pair<Integer, Integer>> out;
    for (Integer k = 1; k <= bound; ++k) {
        const Integer v = (n - 2) * polygonal(n, k) - (n - 4);
        const Integer disc = Integer(n - 4) * (n - 4) + 4 * (n - 2) * v;
        const auto root = exact_sqrt(disc);
        if (!root) continue;
        const Integer num = (n - 4) + *root;
        if (num % (2 * (n - 2)) != 0) continue;
        const Integer l = num / (2 * (n - 2));
        if (l >= 1) out.emplace_back(k, l);
    }
    return out;
}

}  // namespace diosys
